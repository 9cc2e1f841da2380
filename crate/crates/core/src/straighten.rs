//! Standard monomials, Hibi binomials, subduction against a generator
//! family, and the quadratic straightening relations `S(gamma, delta)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{self, Context, PluckerVar};
use crate::linalg;
use crate::maps::GeneratorFamily;
use crate::polyring::{Coeff, Monomial, Polynomial, XVar};

/// A quadratic relation whose leading term is `lead_pair.0 * lead_pair.1`
/// with coefficient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    pub poly: Polynomial<PluckerVar>,
    pub lead_pair: (PluckerVar, PluckerVar),
}

impl Quadric {
    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_empty()
    }

    /// The first two terms: the lead and the meet-join product.
    pub fn hibi_part(&self) -> Polynomial<PluckerVar> {
        Polynomial::from_terms(self.poly.terms_desc().take(2).map(|(m, c)| (c.clone(), m.clone())))
    }
}

impl fmt::Display for Quadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

fn pair_monomial(u: &PluckerVar, v: &PluckerVar) -> Monomial<PluckerVar> {
    Monomial::from_vars([*u, *v])
}

fn check_incomparable(u: &PluckerVar, v: &PluckerVar) -> Result<()> {
    if u.p() != v.p() {
        return Err(Error::InvalidInput(format!("{u} and {v} have different row counts")));
    }
    if u.comparable(v) {
        return Err(Error::InvalidInput(format!("{u} and {v} are comparable")));
    }
    Ok(())
}

/// `u v - (u ∨ v)(u ∧ v)` for an incomparable pair.
pub fn hibi_binomial(u: &PluckerVar, v: &PluckerVar) -> Result<Quadric> {
    check_incomparable(u, v)?;
    let (lo, hi) = u.meet_join(v);
    let mut poly = Polynomial::term(Coeff::one(), pair_monomial(u, v));
    poly.add_term(pair_monomial(&lo, &hi), Coeff::from(-1));
    let (a, b) = if u < v { (*u, *v) } else { (*v, *u) };
    Ok(Quadric {
        poly,
        lead_pair: (a, b),
    })
}

/// The factors, sorted along the linear extension, form a chain.
pub fn is_standard_monomial(m: &Monomial<PluckerVar>) -> bool {
    let vars: Vec<&PluckerVar> = m.vars().collect();
    vars.windows(2).all(|w| w[0].leq(w[1]))
}

/// Column counts and shift sum: the grading preserved by every generator
/// map, and by meet and join.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree {
    pub cols: Vec<u32>,
    pub shift: u32,
}

impl Multidegree {
    pub fn of_c(m: &Monomial<PluckerVar>, ctx: &Context) -> Self {
        let mut cols = vec![0u32; ctx.width()];
        let mut shift = 0;
        for u in m.vars() {
            for &c in u.cols() {
                cols[c as usize - 1] += 1;
            }
            shift += u.shift();
        }
        Multidegree { cols, shift }
    }

    pub fn of_x(m: &Monomial<XVar>, ctx: &Context) -> Self {
        let mut cols = vec![0u32; ctx.width()];
        let mut shift = 0;
        for (v, e) in m.factors() {
            cols[v.col as usize - 1] += e;
            shift += v.level as u32 * e;
        }
        Multidegree { cols, shift }
    }
}

/// Standard monomials of degree `d` in the given variables (multichains
/// along the linear extension), optionally restricted to one multidegree.
pub fn standard_monomials_in(
    vars: &[PluckerVar],
    d: usize,
    ctx: &Context,
    multideg: Option<&Multidegree>,
) -> Vec<Monomial<PluckerVar>> {
    fn rec(
        vars: &[PluckerVar],
        start: usize,
        d: usize,
        chain: &mut Vec<PluckerVar>,
        out: &mut Vec<Monomial<PluckerVar>>,
    ) {
        if chain.len() == d {
            out.push(Monomial::from_vars(chain.iter().copied()));
            return;
        }
        for k in start..vars.len() {
            if chain.last().is_none_or(|last| last.leq(&vars[k])) {
                chain.push(vars[k]);
                rec(vars, k, d, chain, out);
                chain.pop();
            }
        }
    }
    let mut sorted = vars.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    rec(&sorted, 0, d, &mut Vec::new(), &mut out);
    if let Some(md) = multideg {
        out.retain(|m| Multidegree::of_c(m, ctx) == *md);
    }
    out
}

/// Standard monomials of degree `d` over all of `C^q`.
pub fn standard_monomials(
    ctx: &Context,
    d: usize,
    multideg: Option<&Multidegree>,
) -> Result<Vec<Monomial<PluckerVar>>> {
    Ok(standard_monomials_in(&lattice::enumerate(ctx, None)?, d, ctx, multideg))
}

/// The unique standard pair `(beta, alpha)`, `beta <= alpha`, whose
/// generator leading monomials multiply to `mono`.
pub fn factor_initial(mono: &Monomial<XVar>, fam: &GeneratorFamily) -> Result<(PluckerVar, PluckerVar)> {
    let ctx = fam.ctx();
    if mono.degree() as usize != 2 * ctx.p() {
        return Err(Error::InvalidInput(format!(
            "{mono} has degree {}, expected {}",
            mono.degree(),
            2 * ctx.p()
        )));
    }
    let shift = Multidegree::of_x(mono, ctx).shift;
    let mut found: Vec<(PluckerVar, PluckerVar)> = Vec::new();
    for beta in fam.vars() {
        if beta.shift() > shift {
            continue;
        }
        let (lead, _) = fam.lead(beta).expect("family member");
        let Some(rest) = lead.quotient_of(mono) else { continue };
        let Some(alpha) = fam.by_lead(&rest) else { continue };
        if beta.leq(&alpha) {
            found.push((*beta, alpha));
        }
    }
    match found.len() {
        0 => Err(Error::NotInInitialAlgebra(mono.to_string())),
        1 => Ok(found[0]),
        _ => Err(Error::Inconsistent(format!(
            "{mono} has {} standard factorizations: {}",
            found.len(),
            found
                .iter()
                .map(|(b, a)| format!("{b}*{a}"))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

/// One subduction step: `coeff * image(low) * image(high)` was subtracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub low: PluckerVar,
    pub high: PluckerVar,
    pub coeff: Coeff,
}

#[derive(Clone, Debug)]
pub struct SubductionTrace {
    pub steps: Vec<Step>,
    pub remainder: Polynomial<XVar>,
    /// Leading monomial of the remainder when it is not in the initial
    /// algebra.
    pub witness: Option<Monomial<XVar>>,
}

impl SubductionTrace {
    pub fn succeeded(&self) -> bool {
        self.remainder.is_zero()
    }

    /// `sum coeff * low * high` over the recorded steps.
    pub fn combination(&self) -> Polynomial<PluckerVar> {
        Polynomial::from_terms(
            self.steps
                .iter()
                .map(|s| (s.coeff.clone(), pair_monomial(&s.low, &s.high))),
        )
    }

    /// Recomputes the remainder from the input and the steps.
    pub fn replay(&self, input: &Polynomial<XVar>, fam: &GeneratorFamily) -> Result<Polynomial<XVar>> {
        Ok(input - &fam.apply(&self.combination())?)
    }
}

fn standard_pair_count(fam: &GeneratorFamily, md: &Multidegree) -> usize {
    let ctx = fam.ctx();
    standard_monomials_in(fam.vars(), 2, ctx, Some(md)).len()
}

/// Subduction of a quadratic element: cancels leading terms by products of
/// two generators until the remainder vanishes or its leading monomial is
/// not a product of generator leading monomials.
pub fn subduct(f: &Polynomial<XVar>, fam: &GeneratorFamily) -> Result<SubductionTrace> {
    let ctx = fam.ctx();
    let deg = 2 * ctx.p() as u32;
    if f.terms().any(|(m, _)| m.degree() != deg) {
        return Err(Error::InvalidInput(format!(
            "subduction input must be homogeneous of degree {deg}"
        )));
    }
    let cap = match f.leading_monomial() {
        Some(m) => standard_pair_count(fam, &Multidegree::of_x(m, ctx)),
        None => 0,
    };
    let mut rem = f.clone();
    let mut steps = Vec::new();
    while let Some((m, c)) = rem.leading_term() {
        let (low, high) = match factor_initial(m, fam) {
            Ok(pair) => pair,
            Err(Error::NotInInitialAlgebra(_)) => {
                let witness = Some(m.clone());
                return Ok(SubductionTrace {
                    steps,
                    remainder: rem,
                    witness,
                });
            }
            Err(e) => return Err(e),
        };
        if steps.len() >= cap {
            return Err(Error::Inconsistent(format!("subduction exceeded {cap} steps")));
        }
        let lc = &fam.lead(&low).expect("member").1 * &fam.lead(&high).expect("member").1;
        let coeff = c / &lc;
        let prod = fam.image(&low).expect("member") * fam.image(&high).expect("member");
        rem.add_scaled(&-&coeff, &prod);
        steps.push(Step { low, high, coeff });
    }
    Ok(SubductionTrace {
        steps,
        remainder: rem,
        witness: None,
    })
}

/// `S(gamma, delta) = gamma delta - sum lambda beta alpha` from the
/// subduction of `image(gamma) image(delta)`.
///
/// Checks that the first subtracted pair is the meet and join with
/// coefficient one, that every later pair straddles them strictly, and
/// that every tail monomial is standard.
pub fn straightening_relation(gamma: &PluckerVar, delta: &PluckerVar, fam: &GeneratorFamily) -> Result<Quadric> {
    check_incomparable(gamma, delta)?;
    for u in [gamma, delta] {
        if !fam.contains(u) {
            return Err(Error::InvalidInput(format!("{u} is not a generator of this family")));
        }
    }
    let (g, d) = if gamma < delta {
        (*gamma, *delta)
    } else {
        (*delta, *gamma)
    };
    let prod = fam.image(&g).expect("member") * fam.image(&d).expect("member");
    let trace = subduct(&prod, fam)?;
    if let Some(w) = &trace.witness {
        return Err(Error::NotInInitialAlgebra(format!("{w} (subducting {g}*{d})")));
    }
    let (meet, join) = g.meet_join(&d);
    let first = trace
        .steps
        .first()
        .ok_or_else(|| Error::Inconsistent(format!("{g}*{d} subducted in zero steps")))?;
    if (first.low, first.high) != (meet, join) || !first.coeff.is_one() {
        return Err(Error::Inconsistent(format!(
            "first step of {g}*{d} is {}*{}*{}, expected {meet}*{join}",
            first.coeff, first.low, first.high
        )));
    }
    for s in &trace.steps[1..] {
        let ok = s.low.leq(&meet) && s.low != meet && join.leq(&s.high) && join != s.high;
        if !ok {
            return Err(Error::Inconsistent(format!(
                "term {}*{} of S({g},{d}) does not straddle [{meet}, {join}]",
                s.low, s.high
            )));
        }
    }
    let mut poly = Polynomial::term(Coeff::one(), pair_monomial(&g, &d));
    poly -= &trace.combination();
    if poly.leading_monomial() != Some(&pair_monomial(&g, &d)) {
        return Err(Error::Inconsistent(format!("S({g},{d}) does not lead with {g}*{d}")));
    }
    if let Some((m, _)) = poly.terms_desc().skip(1).find(|(m, _)| !is_standard_monomial(m)) {
        return Err(Error::Inconsistent(format!(
            "S({g},{d}) has non-standard tail term {m}"
        )));
    }
    Ok(Quadric {
        poly,
        lead_pair: (g, d),
    })
}

/// One straightening relation per incomparable pair of the family, sorted
/// by leading pair.
pub fn reduced_groebner(fam: &GeneratorFamily) -> Result<Vec<Quadric>> {
    let pairs = lattice::incomparable_pairs_of(fam.vars());
    pairs
        .par_iter()
        .map(|(u, v)| straightening_relation(u, v, fam))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SagbiFailure {
    pub pair: (PluckerVar, PluckerVar),
    pub witness: Monomial<XVar>,
}

#[derive(Clone, Debug)]
pub struct SagbiReport {
    pub context: Context,
    pub pairs_total: usize,
    pub failures: Vec<SagbiFailure>,
}

impl SagbiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let c = &self.context;
        json!({
            "context": {"p": c.p(), "m": c.m(), "n": c.n(), "q": c.q()},
            "pairs_total": self.pairs_total,
            "failures": self.failures.iter().map(|f| json!({
                "pair": [f.pair.0.to_string(), f.pair.1.to_string()],
                "witness_monomial": f.witness.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Subducts `image(u) image(v)` for every incomparable pair and collects
/// the pairs whose remainder does not vanish.
pub fn sagbi_check(fam: &GeneratorFamily) -> Result<SagbiReport> {
    let pairs = lattice::incomparable_pairs_of(fam.vars());
    let results: Vec<Option<SagbiFailure>> = pairs
        .par_iter()
        .map(|(u, v)| -> Result<Option<SagbiFailure>> {
            let prod = fam.image(u).expect("member") * fam.image(v).expect("member");
            let trace = subduct(&prod, fam)?;
            Ok(match trace.remainder.leading_monomial() {
                None => None,
                Some(m) => Some(SagbiFailure {
                    pair: (*u, *v),
                    witness: trace.witness.unwrap_or_else(|| m.clone()),
                }),
            })
        })
        .collect::<Result<_>>()?;
    Ok(SagbiReport {
        context: *fam.ctx(),
        pairs_total: pairs.len(),
        failures: results.into_iter().flatten().collect(),
    })
}

/// Brute-force basis of the quadratic part of the kernel of the family's
/// map, by exact elimination on the images of all degree-two monomials,
/// one multidegree at a time. Columns are processed in ascending term
/// order, so each relation is a non-standard monomial minus a combination
/// of smaller independent monomials: the reduced Gröbner basis in degree
/// two. Sorted by leading monomial.
pub fn kernel_quadrics_oracle(fam: &GeneratorFamily) -> Result<Vec<Polynomial<PluckerVar>>> {
    let ctx = fam.ctx();
    let vars = fam.vars();
    let mut blocks: BTreeMap<Multidegree, Vec<Monomial<PluckerVar>>> = BTreeMap::new();
    for (i, u) in vars.iter().enumerate() {
        for v in &vars[i..] {
            let m = pair_monomial(u, v);
            blocks.entry(Multidegree::of_c(&m, ctx)).or_default().push(m);
        }
    }
    let blocks: Vec<Vec<Monomial<PluckerVar>>> = blocks
        .into_values()
        .filter(|b| b.len() > 1)
        .map(|mut b| {
            b.sort();
            b
        })
        .collect();
    let mut out: Vec<Polynomial<PluckerVar>> = blocks
        .par_iter()
        .map(|block| -> Result<Vec<Polynomial<PluckerVar>>> {
            let images: Vec<Polynomial<XVar>> = block
                .iter()
                .map(|m| fam.apply(&Polynomial::term(Coeff::one(), m.clone())))
                .collect::<Result<_>>()?;
            Ok(linalg::dependencies(&images)
                .into_iter()
                .map(|(f, combo)| {
                    let mut rel = Polynomial::term(Coeff::one(), block[f].clone());
                    for (k, c) in combo {
                        rel.add_term(block[k].clone(), -c);
                    }
                    rel
                })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> PluckerVar {
        s.parse().unwrap()
    }

    #[test]
    fn hibi_examples() {
        let h = hibi_binomial(&v("45789^1"), &v("12356^3")).unwrap();
        assert_eq!(h.poly.to_text(true), "45789^1*12356^3 - 35689^1*12457^3");
        let h = hibi_binomial(&v("156^1"), &v("234^2")).unwrap();
        assert_eq!(h.poly.to_text(true), "156^1*234^2 - 146^1*235^2");
        assert!(hibi_binomial(&v("146^1"), &v("235^2")).is_err());
    }

    #[test]
    fn standardness() {
        let m = |s: &[&str]| Monomial::from_vars(s.iter().map(|x| v(x)));
        assert!(is_standard_monomial(&m(&["135^0", "123^1", "257^3"])));
        assert!(!is_standard_monomial(&m(&["345^0", "123^1", "245^3"])));
        let ctx = Context::new(3, 3, 0, 0).unwrap();
        assert_eq!(standard_monomials(&ctx, 2, None).unwrap().len(), 175);
    }

    #[test]
    fn classical_grass_2_4() {
        let ctx = Context::new(2, 2, 0, 0).unwrap();
        let fam = GeneratorFamily::plain(&ctx).unwrap();
        let gb = reduced_groebner(&fam).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].poly.to_text(true), "14^0*23^0 - 13^0*24^0 + 12^0*34^0");
        assert_eq!(kernel_quadrics_oracle(&fam).unwrap(), vec![gb[0].poly.clone()]);
    }

    #[test]
    fn factor_and_subduct() {
        let ctx = Context::full(3, 3, 1).unwrap();
        let fam = GeneratorFamily::plain(&ctx).unwrap();
        let lead = |s: &str| fam.lead(&v(s)).unwrap().0.clone();
        let m = lead("146^1").mul(&lead("235^2"));
        assert_eq!(factor_initial(&m, &fam).unwrap(), (v("146^1"), v("235^2")));
        let m = lead("156^1").mul(&lead("234^2"));
        assert_eq!(factor_initial(&m, &fam).unwrap(), (v("146^1"), v("235^2")));
        let bad = Monomial::from_factors([(XVar::new(1, 1, 0), 6)]);
        let f = Polynomial::term(Coeff::one(), bad.clone());
        let t = subduct(&f, &fam).unwrap();
        assert_eq!(t.witness, Some(bad));
        let f = fam.image(&v("124^0")).unwrap() * fam.image(&v("356^1")).unwrap();
        let t = subduct(&f, &fam).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert!(t.succeeded());
    }
}
