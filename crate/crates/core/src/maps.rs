//! Generator homomorphisms: `phi` (coefficients of maximal minors of
//! `M(t)`), its initial monomials `psi`, the row-consecutive minors `chi`,
//! the expansion `pi` into maximal minors of the level-concatenated matrix,
//! and Schubert specializations.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{self, Context, PluckerVar, YoungSeq};
use crate::polyring::{det_tpoly, Coeff, Monomial, Polynomial, TMatrix, TPoly, XVar};

/// A set of coordinate variables specialized to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecMask {
    pub zeroed: BTreeSet<XVar>,
}

impl SpecMask {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: &XVar) -> bool {
        self.zeroed.contains(v)
    }

    pub fn len(&self) -> usize {
        self.zeroed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeroed.is_empty()
    }
}

fn check_generator(u: &PluckerVar, ctx: &Context) -> Result<()> {
    ctx.check_var(u)?;
    if u.shift() as usize > ctx.n() * ctx.p() {
        return Err(Error::Domain(format!(
            "{u}: shift exceeds n*p={}, the t-degree of the maximal minors",
            ctx.n() * ctx.p()
        )));
    }
    Ok(())
}

fn cols_of(u: &PluckerVar) -> Vec<usize> {
    u.cols().iter().map(|&c| c as usize).collect()
}

fn matrix(ctx: &Context, mask: Option<&SpecMask>) -> TMatrix {
    let m = TMatrix::generic(ctx.p(), ctx.width(), ctx.n());
    match mask {
        Some(s) => m.with_mask(s.zeroed.clone()),
        None => m,
    }
}

/// The coefficient of `t^a` in the `alpha`-column maximal minor of `M(t)`.
pub fn phi(u: &PluckerVar, ctx: &Context) -> Result<Polynomial<XVar>> {
    image(u, None, ctx)
}

/// `phi` composed with a specialization.
pub fn image(u: &PluckerVar, mask: Option<&SpecMask>, ctx: &Context) -> Result<Polynomial<XVar>> {
    check_generator(u, ctx)?;
    Ok(matrix(ctx, mask).det_coeff(&cols_of(u), u.shift() as usize))
}

/// Closed form of the leading monomial of `phi(alpha^(a))`. With
/// `a = p l + r`, the last `p - r` rows take level `l` and the first `r`
/// rows level `l + 1`, both reading `alpha` backwards.
pub fn psi(u: &PluckerVar, ctx: &Context) -> Monomial<XVar> {
    let p = ctx.p();
    let a = u.shift() as usize;
    let (l, r) = ((a / p) as u8, a % p);
    let mut vars = Vec::with_capacity(p);
    for k in 1..=p - r {
        vars.push(XVar::new((r + k) as u8, u.col(p + 1 - k), l));
    }
    for k in 1..=r {
        vars.push(XVar::new(k as u8, u.col(r + 1 - k), l + 1));
    }
    Monomial::from_vars(vars)
}

/// `omega(x[i,j,l]) = -(p l + i)^2`.
pub fn omega(v: &XVar, p: usize) -> i64 {
    let s = (p * v.level as usize + v.row as usize) as i64;
    -s * s
}

/// The `alpha`-column minor of rows `a+1..a+p` of the stacked matrix `L`
/// whose row `p l + r` holds `x[r,j,l]`.
pub fn chi(u: &PluckerVar, ctx: &Context) -> Result<Polynomial<XVar>> {
    ctx.check_var(u)?;
    let p = ctx.p();
    let a = u.shift() as usize;
    if a + p > p * (ctx.n() + 1) {
        return Err(Error::Domain(format!(
            "{u}: rows {}..{} exceed the {} rows of L",
            a + 1,
            a + p,
            p * (ctx.n() + 1)
        )));
    }
    let entries: Vec<Vec<TPoly>> = (a + 1..=a + p)
        .map(|i| {
            let (l, r) = ((i - 1) / p, (i - 1) % p + 1);
            u.cols()
                .iter()
                .map(|&j| vec![Polynomial::var(XVar::new(r as u8, j, l as u8))])
                .collect()
        })
        .collect();
    Ok(det_tpoly(&entries, 0).into_iter().next().unwrap_or_default())
}

/// Sign of the permutation sorting `seq`.
pub(crate) fn sort_sign<T: Ord>(seq: &[T]) -> i64 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The Young-lattice expansion: the signed sum of all `J` in `[N]` whose
/// residues mod `m+p` (taken in `[1, m+p]`) form `alpha` and whose levels sum
/// to `a`. The sign is that of the permutation sorting the residues of `J`.
pub fn pi(u: &PluckerVar, ctx: &Context) -> Result<Polynomial<YoungSeq>> {
    check_generator(u, ctx)?;
    let p = ctx.p();
    let w = ctx.width() as u32;
    let a = u.shift() as usize;
    let n = ctx.n();
    let mut out = Polynomial::zero();
    let mut levels = vec![0usize; p];
    fn rec(k: usize, left: usize, n: usize, levels: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k == levels.len() {
            if left == 0 {
                f(levels);
            }
            return;
        }
        let rest = levels.len() - k - 1;
        for l in 0..=n.min(left) {
            if left - l > rest * n {
                continue;
            }
            levels[k] = l;
            rec(k + 1, left - l, n, levels, f);
        }
    }
    rec(0, a, n, &mut levels, &mut |ls| {
        let mut pairs: Vec<(u32, u32)> = ls
            .iter()
            .zip(u.cols())
            .map(|(&l, &c)| (l as u32 * w + c as u32, c as u32))
            .collect();
        pairs.sort_unstable();
        let residues: Vec<u32> = pairs.iter().map(|x| x.1).collect();
        let j = YoungSeq(pairs.iter().map(|x| x.0).collect());
        out.add_term(Monomial::var(j), Coeff::from(sort_sign(&residues)));
    });
    Ok(out)
}

/// Zero set of `M_{top}(t)`, or of the skew matrix `M_{top/bottom}(t)`.
pub fn schubert_mask(top: &PluckerVar, bottom: Option<&PluckerVar>, ctx: &Context) -> Result<SpecMask> {
    check_generator(top, ctx)?;
    if let Some(b) = bottom {
        check_generator(b, ctx)?;
        if !b.leq(top) {
            return Err(Error::InvalidInput(format!("{b} is not below {top}")));
        }
    }
    let p = ctx.p();
    // alpha_nu with alpha_nu = 0 below 1 and unbounded above p
    let entry = |u: &PluckerVar, nu: isize| -> usize {
        if nu <= 0 {
            0
        } else if nu as usize > p {
            usize::MAX
        } else {
            u.col(nu as usize) as usize
        }
    };
    let (s, r) = (top.shift() as usize / p, top.shift() as usize % p);
    let bot = bottom.map(|b| (b, b.shift() as usize / p, b.shift() as usize % p));
    let mut zeroed = BTreeSet::new();
    for l in 0..=ctx.n() {
        for i in 1..=p {
            for j in 1..=ctx.width() {
                let ii = i as isize;
                let upper = (l > s + 1 && i <= r)
                    || (l == s + 1 && j > entry(top, r as isize + 1 - ii))
                    || (l > s && i > r)
                    || (l == s && j > entry(top, (p + r) as isize + 1 - ii));
                let lower = bot.is_some_and(|(b, sb, rb)| {
                    (l < sb + 1 && i <= rb)
                        || (l == sb + 1 && j < entry(b, rb as isize + 1 - ii))
                        || (l < sb && i > rb)
                        || (l == sb && j < entry(b, (p + rb) as isize + 1 - ii))
                });
                if upper || lower {
                    zeroed.insert(XVar::new(i as u8, j as u8, l as u8));
                }
            }
        }
    }
    Ok(SpecMask { zeroed })
}

/// Substitutes every Plücker variable by its (specialized) image.
pub fn apply_hom(f: &Polynomial<PluckerVar>, mask: Option<&SpecMask>, ctx: &Context) -> Result<Polynomial<XVar>> {
    for u in f.variables() {
        check_generator(&u, ctx)?;
    }
    let m = matrix(ctx, mask);
    Ok(f.substitute(|u| m.det_coeff(&cols_of(u), u.shift() as usize)))
}

/// Zero set of `N_J` (row `i` keeps columns up to `j_{p+1-i}`) or of
/// `N_{J/L}` (row `i` keeps columns `l_{p+1-i}..j_{p+1-i}`). Column
/// `l (m+p) + c` of the `p x N` matrix `N` holds `x[i,c,l]`.
pub fn young_mask(upper: &YoungSeq, lower: Option<&YoungSeq>, ctx: &Context) -> Result<SpecMask> {
    let p = ctx.p();
    let big_n = ctx.big_n() as u32;
    let check = |j: &YoungSeq| -> Result<()> {
        if j.entries().len() != p || j.entries()[p - 1] > big_n {
            return Err(Error::InvalidInput(format!("{j} is not a p-subset of [{big_n}]")));
        }
        Ok(())
    };
    check(upper)?;
    if let Some(l) = lower {
        check(l)?;
        if !l.leq(upper) {
            return Err(Error::InvalidInput(format!("{l} is not below {upper}")));
        }
    }
    let mut zeroed = BTreeSet::new();
    for i in 1..=p {
        let hi = upper.entries()[p - i];
        let lo = lower.map_or(1, |l| l.entries()[p - i]);
        for col in 1..=big_n {
            if col > hi || col < lo {
                zeroed.insert(nvar(i, col, ctx));
            }
        }
    }
    Ok(SpecMask { zeroed })
}

fn nvar(i: usize, col: u32, ctx: &Context) -> XVar {
    let w = ctx.width() as u32;
    XVar::new(i as u8, ((col - 1) % w + 1) as u8, ((col - 1) / w) as u8)
}

/// The `I`-column maximal minor of the (masked) `p x N` matrix `N`.
pub fn minor_map(i: &YoungSeq, mask: Option<&SpecMask>, ctx: &Context) -> Result<Polynomial<XVar>> {
    let p = ctx.p();
    if i.entries().len() != p || i.entries()[p - 1] as usize > ctx.big_n() {
        return Err(Error::InvalidInput(format!(
            "{i} is not a p-subset of [{}]",
            ctx.big_n()
        )));
    }
    let entries: Vec<Vec<TPoly>> = (1..=p)
        .map(|r| {
            i.entries()
                .iter()
                .map(|&c| {
                    let v = nvar(r, c, ctx);
                    if mask.is_some_and(|m| m.contains(&v)) {
                        Vec::new()
                    } else {
                        vec![Polynomial::var(v)]
                    }
                })
                .collect()
        })
        .collect();
    Ok(det_tpoly(&entries, 0).into_iter().next().unwrap_or_default())
}

/// Substitutes every `J` variable by its minor.
pub fn apply_minor_hom(f: &Polynomial<YoungSeq>, mask: Option<&SpecMask>, ctx: &Context) -> Result<Polynomial<XVar>> {
    let mut images = HashMap::new();
    for j in f.variables() {
        images.insert(j.clone(), minor_map(&j, mask, ctx)?);
    }
    Ok(f.substitute(|j| images[j].clone()))
}

/// A finite set of lattice elements with their generator images, leading
/// terms, and the inverse of the leading-monomial map.
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    ctx: Context,
    mask: Option<SpecMask>,
    vars: Vec<PluckerVar>,
    images: HashMap<PluckerVar, Polynomial<XVar>>,
    leads: HashMap<PluckerVar, (Monomial<XVar>, Coeff)>,
    by_lead: HashMap<Monomial<XVar>, PluckerVar>,
}

impl GeneratorFamily {
    /// Unspecialized `phi` on all of `C^q`.
    pub fn plain(ctx: &Context) -> Result<Self> {
        Self::build(ctx, lattice::enumerate(ctx, None)?, None)
    }

    /// The generators of the quantum Grassmannian `K^q`: `phi` when
    /// `q = n p`, otherwise `phi` specialized to the Schubert variety of the
    /// top element of `C^q`.
    pub fn quantum(ctx: &Context) -> Result<Self> {
        if ctx.is_full() {
            Self::plain(ctx)
        } else {
            let mask = schubert_mask(&ctx.top(), None, ctx)?;
            Self::build(ctx, lattice::enumerate(ctx, None)?, Some(mask))
        }
    }

    /// Skew Schubert generators `phi_{top/bottom}` on `[bottom, top]`.
    pub fn skew(ctx: &Context, bottom: &PluckerVar, top: &PluckerVar) -> Result<Self> {
        let vars = lattice::enumerate(ctx, Some((bottom, top)))?;
        let mask = schubert_mask(top, Some(bottom), ctx)?;
        Self::build(ctx, vars, Some(mask))
    }

    pub fn build(ctx: &Context, vars: Vec<PluckerVar>, mask: Option<SpecMask>) -> Result<Self> {
        let m = matrix(ctx, mask.as_ref());
        for u in &vars {
            check_generator(u, ctx)?;
        }
        let imgs: Vec<Polynomial<XVar>> = vars
            .par_iter()
            .map(|u| m.det_coeff(&cols_of(u), u.shift() as usize))
            .collect();
        let mut images = HashMap::new();
        let mut leads = HashMap::new();
        let mut by_lead = HashMap::new();
        for (u, f) in vars.iter().zip(imgs) {
            let Some((lm, lc)) = f.leading_term() else {
                return Err(Error::Inconsistent(format!("generator {u} has zero image")));
            };
            if let Some(prev) = by_lead.insert(lm.clone(), *u) {
                return Err(Error::Inconsistent(format!(
                    "generators {prev} and {u} share the leading monomial {lm}"
                )));
            }
            leads.insert(*u, (lm.clone(), lc.clone()));
            images.insert(*u, f);
        }
        Ok(GeneratorFamily {
            ctx: *ctx,
            mask,
            vars,
            images,
            leads,
            by_lead,
        })
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn mask(&self) -> Option<&SpecMask> {
        self.mask.as_ref()
    }

    /// Domain in ascending variable order.
    pub fn vars(&self) -> &[PluckerVar] {
        &self.vars
    }

    pub fn contains(&self, u: &PluckerVar) -> bool {
        self.images.contains_key(u)
    }

    pub fn image(&self, u: &PluckerVar) -> Option<&Polynomial<XVar>> {
        self.images.get(u)
    }

    pub fn lead(&self, u: &PluckerVar) -> Option<&(Monomial<XVar>, Coeff)> {
        self.leads.get(u)
    }

    /// The generator whose leading monomial is `m`.
    pub fn by_lead(&self, m: &Monomial<XVar>) -> Option<PluckerVar> {
        self.by_lead.get(m).copied()
    }

    /// Image of a polynomial in the family's variables.
    pub fn apply(&self, f: &Polynomial<PluckerVar>) -> Result<Polynomial<XVar>> {
        if let Some(u) = f.variables().into_iter().find(|u| !self.contains(u)) {
            return Err(Error::InvalidInput(format!("{u} is not a generator of this family")));
        }
        Ok(f.substitute(|u| self.images[u].clone()))
    }
}
