use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use crate::error::Result;

/// A ring variable. Its `Ord` is the variable order underlying the
/// degree reverse lexicographic term order of the ring it lives in.
pub trait Variable: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Universe tag of the JSON polynomial format.
    const UNIVERSE: &'static str;

    fn write_text(&self, out: &mut String, compact: bool);

    /// Writes `self^exp` as one or more `*`-separated factors.
    fn write_power(&self, out: &mut String, exp: u32, compact: bool) {
        self.write_text(out, compact);
        if exp > 1 {
            out.push('^');
            out.push_str(&exp.to_string());
        }
    }

    /// Parses a single factor into a variable and its exponent.
    fn parse_factor(s: &str) -> Result<(Self, u32)>;

    fn json_fields(&self) -> Vec<u64>;

    fn from_json_fields(fields: &[u64]) -> Result<Self>;
}

/// Sparse monomial: `(variable, exponent)` pairs sorted by ascending
/// variable, exponents nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial<V> {
    factors: Vec<(V, u32)>,
}

impl<V: Variable> Monomial<V> {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: V) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (V, u32)>>(it: I) -> Self {
        let mut f: Vec<(V, u32)> = it.into_iter().filter(|(_, e)| *e > 0).collect();
        f.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(V, u32)> = Vec::with_capacity(f.len());
        for (v, e) in f {
            match out.last_mut() {
                Some((w, d)) if *w == v => *d += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { factors: out }
    }

    pub fn from_vars<I: IntoIterator<Item = V>>(it: I) -> Self {
        Self::from_factors(it.into_iter().map(|v| (v, 1)))
    }

    pub fn factors(&self) -> &[(V, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Variables with multiplicity, ascending.
    pub fn vars(&self) -> impl Iterator<Item = &V> + '_ {
        self.factors
            .iter()
            .flat_map(|(v, e)| std::iter::repeat_n(v, *e as usize))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(other.factors.len());
        let mut i = 0;
        for (v, e) in &other.factors {
            let mut e = *e;
            if i < self.factors.len() && self.factors[i].0 == *v {
                if self.factors[i].1 > e {
                    return None;
                }
                e -= self.factors[i].1;
                i += 1;
            } else if i < self.factors.len() && self.factors[i].0 < *v {
                return None;
            }
            if e > 0 {
                out.push((v.clone(), e));
            }
        }
        if i < self.factors.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    pub fn weight(&self, w: impl Fn(&V) -> i64) -> i64 {
        self.factors.iter().map(|(v, e)| w(v) * (*e as i64)).sum()
    }

    pub fn to_text(&self, compact: bool) -> String {
        let mut s = String::new();
        self.write_text(&mut s, compact);
        s
    }

    pub(crate) fn write_text(&self, out: &mut String, compact: bool) {
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            v.write_power(out, *e, compact);
        }
    }
}

/// Degree reverse lexicographic comparison: higher total degree wins; on
/// equal degree, at the smallest variable whose exponents differ the monomial
/// with the smaller exponent is the larger one.
pub fn degrevlex<V: Variable>(a: &Monomial<V>, b: &Monomial<V>) -> Ordering {
    let (da, db) = (a.degree(), b.degree());
    if da != db {
        return da.cmp(&db);
    }
    let (fa, fb) = (&a.factors, &b.factors);
    let (mut i, mut j) = (0, 0);
    while i < fa.len() && j < fb.len() {
        match fa[i].0.cmp(&fb[j].0) {
            // `a` carries a positive exponent where `b` has none
            Ordering::Less => return Ordering::Less,
            Ordering::Greater => return Ordering::Greater,
            Ordering::Equal => {
                if fa[i].1 != fb[j].1 {
                    return fb[j].1.cmp(&fa[i].1);
                }
                i += 1;
                j += 1;
            }
        }
    }
    // equal degree and an equal common prefix leave nothing on either side
    Ordering::Equal
}

impl<V: Variable> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(self, other)
    }
}

impl<V: Variable> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Variable> fmt::Display for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        f.write_str(&self.to_text(false))
    }
}

impl<V: Variable> fmt::Debug for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
