//! Exact linear algebra over sparse polynomial vectors.
//!
//! A polynomial is treated as a vector indexed by its monomials. The
//! eliminator keeps an echelon basis keyed by leading monomial and records,
//! for every basis vector, the combination of inserted labels producing it.

use std::collections::{BTreeMap, HashMap};

use crate::polyring::{Coeff, Monomial, Polynomial, Variable};

/// Linear combination of labels.
pub type Combo = BTreeMap<usize, Coeff>;

fn combo_add_scaled(acc: &mut Combo, c: &Coeff, other: &Combo) {
    for (k, v) in other {
        let e = acc.entry(*k).or_insert_with(Coeff::zero);
        *e = &*e + &(c * v);
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

#[derive(Clone, Debug)]
pub struct Eliminator<V: Variable> {
    basis: HashMap<Monomial<V>, (Polynomial<V>, Combo)>,
}

impl<V: Variable> Default for Eliminator<V> {
    fn default() -> Self {
        Self::new()
    }
}

impl<V: Variable> Eliminator<V> {
    pub fn new() -> Self {
        Eliminator { basis: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `f` by leading terms. Returns `(r, c)` with
    /// `f = r + sum_k c_k v_k`, where `v_k` are the inserted vectors and the
    /// leading monomial of `r` (if any) is not a pivot.
    pub fn reduce(&self, f: &Polynomial<V>) -> (Polynomial<V>, Combo) {
        let mut r = f.clone();
        let mut combo = Combo::new();
        while let Some((m, c)) = r.leading_term() {
            let Some((b, bc)) = self.basis.get(m) else { break };
            let c = c.clone();
            r.add_scaled(&-&c, b);
            combo_add_scaled(&mut combo, &c, bc);
        }
        (r, combo)
    }

    /// Inserts `f` under `label`. When `f` is dependent on the vectors
    /// already inserted, returns `c` with `f = sum_k c_k v_k` and leaves the
    /// basis unchanged.
    pub fn insert(&mut self, label: usize, f: &Polynomial<V>) -> Option<Combo> {
        let (r, combo) = self.reduce(f);
        let Some((m, c)) = r.leading_term() else {
            return Some(combo);
        };
        let (m, inv) = (m.clone(), c.inv());
        let mut own = Combo::new();
        own.insert(label, Coeff::one());
        combo_add_scaled(&mut own, &Coeff::from(-1), &combo);
        let own: Combo = own.into_iter().map(|(k, v)| (k, &v * &inv)).collect();
        self.basis.insert(m, (r.scale(&inv), own));
        None
    }

    pub fn contains(&self, f: &Polynomial<V>) -> bool {
        self.reduce(f).0.is_zero()
    }
}

/// Dimension of the span of the given polynomials.
pub fn rank<'a, V: Variable>(polys: impl IntoIterator<Item = &'a Polynomial<V>>) -> usize {
    let mut e = Eliminator::new();
    for (k, f) in polys.into_iter().enumerate() {
        e.insert(k, f);
    }
    e.rank()
}

/// Basis of the linear relations among `images`: one relation per dependent
/// column when columns are processed in the given order, each of the form
/// `col_f - sum_{k<f} c_k col_k` with every `k` an independent column.
pub fn dependencies<V: Variable>(images: &[Polynomial<V>]) -> Vec<(usize, Combo)> {
    let mut e = Eliminator::new();
    let mut out = Vec::new();
    for (k, f) in images.iter().enumerate() {
        if let Some(c) = e.insert(k, f) {
            out.push((k, c));
        }
    }
    out
}

/// Solves `sum_k c_k vecs[k] = target`. Returns `None` when `target` is not
/// in the span and an error when the solution is not unique.
pub fn solve_unique<V: Variable>(
    vecs: &[Polynomial<V>],
    target: &Polynomial<V>,
) -> std::result::Result<Option<Combo>, usize> {
    let mut e = Eliminator::new();
    let mut dependent = 0;
    for (k, f) in vecs.iter().enumerate() {
        if e.insert(k, f).is_some() {
            dependent += 1;
        }
    }
    if dependent > 0 {
        return Err(dependent);
    }
    let (r, c) = e.reduce(target);
    Ok(r.is_zero().then_some(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::XVar;

    fn x(j: u8) -> Polynomial<XVar> {
        Polynomial::var(XVar::new(1, j, 0))
    }

    #[test]
    fn rank_and_dependencies() {
        let v = vec![&x(1) + &x(2), &x(2) + &x(3), &x(1) - &x(3), x(4)];
        assert_eq!(rank(&v), 3);
        let deps = dependencies(&v);
        assert_eq!(deps.len(), 1);
        let (k, c) = &deps[0];
        assert_eq!(*k, 2);
        let mut s = Polynomial::zero();
        for (i, ci) in c {
            s.add_scaled(ci, &v[*i]);
        }
        assert_eq!(s, v[2]);
    }

    #[test]
    fn unique_solve() {
        let v = vec![&x(1) + &x(2), x(2).scale(&Coeff::from(2))];
        let t = &x(1) - &x(2);
        let c = solve_unique(&v, &t).unwrap().unwrap();
        assert_eq!(c[&0], Coeff::one());
        assert_eq!(c[&1], Coeff::from(-1));
        assert!(solve_unique(&v, &x(3)).unwrap().is_none());
        assert!(solve_unique(&[x(1), x(1)], &x(1)).is_err());
    }
}
