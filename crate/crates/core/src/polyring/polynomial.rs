use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coeff;
use super::monomial::{Monomial, Variable};

/// Sparse polynomial with exact coefficients.
///
/// Terms live in a map keyed by monomials under the degrevlex term order, so
/// iteration is ascending in the term order and the leading term is the last
/// entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<V: Variable> {
    terms: BTreeMap<Monomial<V>, Coeff>,
}

impl<V: Variable> Default for Polynomial<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Variable> Polynomial<V> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: V) -> Self {
        Self::term(Coeff::one(), Monomial::var(v))
    }

    pub fn term(c: Coeff, m: Monomial<V>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Coeff, Monomial<V>)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<V>, &Coeff)> + '_ {
        self.terms.iter()
    }

    /// Terms in descending term order, the canonical emission order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial<V>, &Coeff)> + '_ {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial<V>, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial<V>> {
        self.terms.keys().next_back()
    }

    pub fn coefficient(&self, m: &Monomial<V>) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Coeff, mono: &Monomial<V>) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(m.mul(mono), d * c);
        }
        out
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Coeff, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Coeff::is_integer)
    }

    /// Sum of the terms of maximal weight.
    pub fn initial_form(&self, weight: impl Fn(&V) -> i64) -> Self {
        let weighted: Vec<(i64, &Monomial<V>, &Coeff)> =
            self.terms.iter().map(|(m, c)| (m.weight(&weight), m, c)).collect();
        let Some(top) = weighted.iter().map(|t| t.0).max() else {
            return Self::zero();
        };
        Polynomial {
            terms: weighted
                .into_iter()
                .filter(|t| t.0 == top)
                .map(|(_, m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies the algebra homomorphism sending each variable `v` to
    /// `image(v)`. Images are computed once per variable.
    pub fn substitute<W: Variable>(&self, mut image: impl FnMut(&V) -> Polynomial<W>) -> Polynomial<W> {
        let mut cache: HashMap<(V, u32), Polynomial<W>> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for (v, e) in m.factors() {
                if !cache.contains_key(&(v.clone(), *e)) {
                    let base = match cache.get(&(v.clone(), 1)) {
                        Some(b) => b.clone(),
                        None => {
                            let b = image(v);
                            cache.insert((v.clone(), 1), b.clone());
                            b
                        }
                    };
                    let mut pw = base.clone();
                    for _ in 1..*e {
                        pw = &pw * &base;
                    }
                    cache.insert((v.clone(), *e), pw);
                }
                acc = &acc * &cache[&(v.clone(), *e)];
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        out
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<V> {
        let mut vs: Vec<V> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl<V: Variable> std::ops::AddAssign<&Polynomial<V>> for Polynomial<V> {
    fn add_assign(&mut self, rhs: &Polynomial<V>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<V: Variable> std::ops::SubAssign<&Polynomial<V>> for Polynomial<V> {
    fn sub_assign(&mut self, rhs: &Polynomial<V>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<V: Variable> Add for &Polynomial<V> {
    type Output = Polynomial<V>;
    fn add(self, rhs: &Polynomial<V>) -> Polynomial<V> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<V: Variable> Sub for &Polynomial<V> {
    type Output = Polynomial<V>;
    fn sub(self, rhs: &Polynomial<V>) -> Polynomial<V> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<V: Variable> Neg for &Polynomial<V> {
    type Output = Polynomial<V>;
    fn neg(self) -> Polynomial<V> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<V: Variable> Mul for &Polynomial<V> {
    type Output = Polynomial<V>;
    fn mul(self, rhs: &Polynomial<V>) -> Polynomial<V> {
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc: HashMap<Monomial<V>, Coeff> = HashMap::with_capacity(small.len() * large.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &c;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<V: Variable> fmt::Display for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

impl<V: Variable> fmt::Debug for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
