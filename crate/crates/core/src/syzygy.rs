//! Weight-initial relations, van der Waerden syzygies of two-row tableaux,
//! their quantum lifts, and the relations obtained by substituting generic
//! polynomials in `t` into the classical Plücker quadrics.

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{self, Context, PluckerVar, Tableau};
use crate::linalg::{self, Eliminator};
use crate::maps::{sort_sign, GeneratorFamily};
use crate::polyring::{Coeff, Monomial, Polynomial};
use crate::straighten::{self, Multidegree, Quadric};

/// `w(alpha^(a)) = -a^2`.
pub fn c_weight(u: &PluckerVar) -> i64 {
    let a = u.shift() as i64;
    -a * a
}

/// `in_w S(gamma, delta)`.
pub fn weight_initial_r(
    gamma: &PluckerVar,
    delta: &PluckerVar,
    fam: &GeneratorFamily,
) -> Result<Polynomial<PluckerVar>> {
    Ok(straighten::straightening_relation(gamma, delta, fam)?
        .poly
        .initial_form(c_weight))
}

/// `±alpha^(a)` from an unsorted column list: the sign of the sorting
/// permutation, or `None` when an entry repeats.
pub fn signed_var(cols: &[u8], shift: u32) -> Option<(PluckerVar, i64)> {
    let mut sorted = cols.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let u = PluckerVar::new(&sorted, shift).ok()?;
    Some((u, sort_sign(cols)))
}

/// Puts a non-standard two-row tableau in the form expected by the
/// syzygy: shifts weakly increasing, and for equal shifts the smaller row
/// first so that the tableau itself is the leading term.
fn normalize(t: &Tableau, ctx: &Context) -> Result<(PluckerVar, PluckerVar)> {
    let [alpha, beta] = t.rows[..] else {
        return Err(Error::InvalidInput(format!(
            "expected a two-row tableau, got {} rows",
            t.rows.len()
        )));
    };
    ctx.check_member(&alpha)?;
    ctx.check_member(&beta)?;
    if alpha.shift() > beta.shift() {
        return Err(Error::InvalidInput(format!(
            "row shifts {} > {} are not increasing",
            alpha.shift(),
            beta.shift()
        )));
    }
    if alpha.shift() == beta.shift() {
        if alpha.comparable(&beta) {
            return Err(Error::InvalidInput(format!(
                "{alpha} {beta} is standard up to row order"
            )));
        }
        return Ok(if alpha < beta { (alpha, beta) } else { (beta, alpha) });
    }
    if alpha.leq(&beta) {
        return Err(Error::InvalidInput(format!("{alpha} {beta} is standard")));
    }
    Ok((alpha, beta))
}

/// The skew van der Waerden syzygy `W(T)` of a non-standard tableau
/// `T = alpha^(a) beta^(b)`.
///
/// With `i` the first violation `beta_i < alpha_{i-b+a}`, the entries
/// `C = beta_1..beta_i, alpha_{i-b+a}..alpha_p` are redistributed: a subset
/// `I` of `i` positions goes to the second row. Each term carries the sign
/// of the shuffle `(C_I, C_{I^c})` times the signs of sorting both rows.
pub fn vdw_skew_w(t: &Tableau, ctx: &Context) -> Result<Polynomial<PluckerVar>> {
    let (alpha, beta) = normalize(t, ctx)?;
    let p = ctx.p();
    let (a, b) = (alpha.shift(), beta.shift());
    let d = (b - a) as usize;
    let i = (d + 1..=p)
        .find(|&i| beta.col(i) < alpha.col(i - d))
        .ok_or_else(|| Error::Inconsistent(format!("no violation found in {alpha} {beta}")))?;
    let a_part = &alpha.cols()[..i - d - 1];
    let b_part = &beta.cols()[i..];
    let c: Vec<u8> = beta.cols()[..i]
        .iter()
        .chain(&alpha.cols()[i - d - 1..])
        .copied()
        .collect();
    let mut out = Polynomial::zero();
    for sel in (0..c.len()).combinations(i) {
        let mut in_i = vec![false; c.len()];
        for &k in &sel {
            in_i[k] = true;
        }
        // inversions of the shuffle (C_I, C_{I^c})
        let mut inv = 0usize;
        for y in 0..c.len() {
            for x in 0..y {
                if in_i[y] && !in_i[x] {
                    inv += 1;
                }
            }
        }
        let row1: Vec<u8> = a_part
            .iter()
            .copied()
            .chain((0..c.len()).filter(|k| !in_i[*k]).map(|k| c[k]))
            .collect();
        let row2: Vec<u8> = sel.iter().map(|&k| c[k]).chain(b_part.iter().copied()).collect();
        let (Some((u, s1)), Some((v, s2))) = (signed_var(&row1, a), signed_var(&row2, b)) else {
            continue;
        };
        let sign = if inv.is_multiple_of(2) { 1 } else { -1 } * s1 * s2;
        out.add_term(Monomial::from_vars([u, v]), Coeff::from(sign));
    }
    Ok(out)
}

/// The unique combination of straightening relations of equal weight and
/// multidegree whose weight-initial form is `W(T)`.
pub fn vdw_quantum_v(t: &Tableau, fam: &GeneratorFamily) -> Result<Polynomial<PluckerVar>> {
    let ctx = fam.ctx();
    let w = vdw_skew_w(t, ctx)?;
    let lead = w
        .leading_monomial()
        .ok_or_else(|| Error::Inconsistent("W(T) vanishes".into()))?;
    let md = Multidegree::of_c(lead, ctx);
    let weight = lead.weight(c_weight);
    let candidates: Vec<Quadric> = lattice::incomparable_pairs_of(fam.vars())
        .into_iter()
        .filter(|(g, d)| {
            let m = Monomial::from_vars([*g, *d]);
            m.weight(c_weight) == weight && Multidegree::of_c(&m, ctx) == md
        })
        .map(|(g, d)| straighten::straightening_relation(&g, &d, fam))
        .collect::<Result<_>>()?;
    let initials: Vec<Polynomial<PluckerVar>> = candidates.iter().map(|q| q.poly.initial_form(c_weight)).collect();
    let combo = match linalg::solve_unique(&initials, &w) {
        Ok(Some(c)) => c,
        Ok(None) => {
            return Err(Error::Inconsistent(format!(
                "W({}) is not a combination of initial forms",
                t
            )))
        }
        Err(k) => {
            return Err(Error::Inconsistent(format!(
                "{k} dependent initial forms; lift of W({t}) is not unique"
            )))
        }
    };
    let mut v = Polynomial::zero();
    for (k, c) in combo {
        v.add_scaled(&c, &candidates[k].poly);
    }
    Ok(v)
}

/// Coefficients of `t^r`, `0 <= r <= 2q`, of the classical quadrics with
/// every `alpha` replaced by `sum_a alpha^(a) t^a`. The quadrics are the
/// reduced Gröbner basis of the classical Grassmannian.
pub fn obvious_relations(ctx: &Context) -> Result<Vec<Polynomial<PluckerVar>>> {
    let classical = Context::new(ctx.p(), ctx.m(), 0, 0)?;
    let gb = straighten::reduced_groebner(&GeneratorFamily::plain(&classical)?)?;
    let q = ctx.q() as u32;
    let lift = |u: &PluckerVar, a: u32| PluckerVar::new(u.cols(), a).expect("valid");
    let mut out = Vec::new();
    for f in &gb {
        for r in 0..=2 * q {
            let mut fr = Polynomial::zero();
            for (m, c) in f.poly.terms_desc() {
                let [u, v] = m.vars().copied().collect::<Vec<_>>()[..] else {
                    return Err(Error::Inconsistent(format!(
                        "classical relation term {m} is not quadratic"
                    )));
                };
                for a in r.saturating_sub(q)..=r.min(q) {
                    fr.add_term(Monomial::from_vars([lift(&u, a), lift(&v, r - a)]), c.clone());
                }
            }
            if !fr.is_zero() {
                out.push(fr);
            }
        }
    }
    Ok(out)
}

pub fn rank_of_span(polys: &[Polynomial<PluckerVar>]) -> usize {
    linalg::rank(polys)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObviousReport {
    pub generators: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub deficit: usize,
    /// Every obvious relation lies in the span of the straightening
    /// relations.
    pub contained: bool,
}

impl ObviousReport {
    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "deficit": self.deficit,
        })
    }
}

/// Compares the span of the obvious relations with the quadratic kernel of
/// the generators of the quantum Grassmannian.
pub fn obvious_report(ctx: &Context) -> Result<ObviousReport> {
    let rels = obvious_relations(ctx)?;
    let rank = rank_of_span(&rels);
    let fam = GeneratorFamily::quantum(ctx)?;
    let kernel = straighten::kernel_quadrics_oracle(&fam)?;
    let mut span = Eliminator::new();
    for (k, f) in kernel.iter().enumerate() {
        span.insert(k, f);
    }
    let contained = rels.iter().all(|f| span.contains(f));
    Ok(ObviousReport {
        generators: rels.len(),
        rank,
        kernel_dim: kernel.len(),
        deficit: kernel.len().saturating_sub(rank),
        contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> PluckerVar {
        s.parse().unwrap()
    }

    #[test]
    fn signed_vars() {
        assert_eq!(signed_var(&[1, 2, 3], 0), Some((v("123^0"), 1)));
        assert_eq!(signed_var(&[2, 1, 3], 1), Some((v("123^1"), -1)));
        assert_eq!(signed_var(&[2, 2, 3], 0), None);
    }

    #[test]
    fn w_of_eq4_pair_is_its_first_ten_terms() {
        let ctx = Context::full(3, 3, 1).unwrap();
        let fam = GeneratorFamily::plain(&ctx).unwrap();
        let t = Tableau::new(vec![v("156^1"), v("234^2")]);
        let w = vdw_skew_w(&t, &ctx).unwrap();
        let r = weight_initial_r(&v("156^1"), &v("234^2"), &fam).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(w, r);
        assert_eq!(w.leading_term().unwrap().1, &Coeff::one());
    }

    #[test]
    fn classical_w_is_plucker_relation() {
        let ctx = Context::new(2, 2, 0, 0).unwrap();
        let t = Tableau::new(vec![v("14^0"), v("23^0")]);
        let w = vdw_skew_w(&t, &ctx).unwrap();
        assert_eq!(w.to_text(true), "14^0*23^0 - 13^0*24^0 + 12^0*34^0");
        assert!(vdw_skew_w(&Tableau::new(vec![v("13^0"), v("24^0")]), &ctx).is_err());
    }

    #[test]
    fn tableau_checks() {
        let ctx = Context::full(3, 3, 1).unwrap();
        assert!(vdw_skew_w(&Tableau::new(vec![v("234^2"), v("156^1")]), &ctx).is_err());
        assert!(vdw_skew_w(&Tableau::new(vec![v("146^1"), v("235^2")]), &ctx).is_err());
        assert!(vdw_skew_w(&Tableau::new(vec![v("146^1")]), &ctx).is_err());
    }
}
