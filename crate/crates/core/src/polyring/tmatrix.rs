use std::collections::BTreeSet;

use super::coeff::Coeff;
use super::polynomial::Polynomial;
use super::xvar::XVar;

/// Polynomial in `t` with coefficients in `k[X]`; index `l` holds the
/// coefficient of `t^l`. The empty vector is zero.
pub type TPoly = Vec<Polynomial<XVar>>;

/// The `p x (m+p)` matrix whose `(i,j)` entry is `sum_l x[i,j,l] t^l`,
/// with the variables in `mask` specialized to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMatrix {
    rows: usize,
    cols: usize,
    max_level: usize,
    mask: BTreeSet<XVar>,
}

impl TMatrix {
    pub fn generic(rows: usize, cols: usize, max_level: usize) -> Self {
        TMatrix {
            rows,
            cols,
            max_level,
            mask: BTreeSet::new(),
        }
    }

    pub fn with_mask(mut self, mask: BTreeSet<XVar>) -> Self {
        self.mask = mask;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn mask(&self) -> &BTreeSet<XVar> {
        &self.mask
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> TPoly {
        let mut e: TPoly = (0..=self.max_level)
            .map(|l| {
                let v = XVar::new(i as u8, j as u8, l as u8);
                if self.mask.contains(&v) {
                    Polynomial::zero()
                } else {
                    Polynomial::var(v)
                }
            })
            .collect();
        trim(&mut e);
        e
    }

    /// Coefficient of `t^a` in the minor on the given 1-based rows and
    /// columns. Degrees beyond the maximum give zero.
    pub fn minor_coeff(&self, rows: &[usize], cols: &[usize], a: usize) -> Polynomial<XVar> {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        let entries: Vec<Vec<TPoly>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        det_tpoly(&entries, a).into_iter().nth(a).unwrap_or_default()
    }

    /// Coefficient of `t^a` in the maximal minor on the given columns.
    pub fn det_coeff(&self, cols: &[usize], a: usize) -> Polynomial<XVar> {
        let rows: Vec<usize> = (1..=self.rows).collect();
        self.minor_coeff(&rows, cols, a)
    }
}

fn trim(p: &mut TPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn tmul(a: &TPoly, b: &TPoly, max_deg: usize) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let top = (a.len() + b.len() - 2).min(max_deg);
    let mut out: TPoly = vec![Polynomial::zero(); top + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() || i > top {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > top {
                break;
            }
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

fn tadd_scaled(acc: &mut TPoly, sign: &Coeff, b: &TPoly) {
    if acc.len() < b.len() {
        acc.resize(b.len(), Polynomial::zero());
    }
    for (k, y) in b.iter().enumerate() {
        acc[k].add_scaled(sign, y);
    }
    trim(acc);
}

/// Determinant of a square matrix of `t`-polynomials, truncated above
/// `t^max_deg`, by cofactor expansion along the sparsest remaining row.
pub fn det_tpoly(entries: &[Vec<TPoly>], max_deg: usize) -> TPoly {
    let n = entries.len();
    assert!(entries.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return vec![Polynomial::one()];
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    expand(entries, &rows, &cols, max_deg)
}

fn expand(e: &[Vec<TPoly>], rows: &[usize], cols: &[usize], max_deg: usize) -> TPoly {
    if rows.len() == 1 {
        let mut x = e[rows[0]][cols[0]].clone();
        x.truncate(max_deg + 1);
        trim(&mut x);
        return x;
    }
    let (pos, &row) = rows
        .iter()
        .enumerate()
        .min_by_key(|(_, &r)| cols.iter().filter(|&&c| !e[r][c].is_empty()).count())
        .expect("nonempty");
    let sub_rows: Vec<usize> = rows.iter().copied().filter(|&r| r != row).collect();
    let mut acc: TPoly = Vec::new();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &e[row][c];
        if entry.is_empty() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(e, &sub_rows, &sub_cols, max_deg);
        if minor.is_empty() {
            continue;
        }
        let sign = if (pos + k) % 2 == 0 {
            Coeff::one()
        } else {
            Coeff::from(-1)
        };
        tadd_scaled(&mut acc, &sign, &tmul(entry, &minor, max_deg));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fully_masked_row_gives_zero() {
        let mask: BTreeSet<XVar> = (1..=4).flat_map(|j| (0..=1).map(move |l| XVar::new(2, j, l))).collect();
        let m = TMatrix::generic(2, 4, 1).with_mask(mask);
        for a in 0..=2 {
            assert!(m.det_coeff(&[1, 3], a).is_zero());
        }
    }

    #[test]
    fn degree_above_maximum_is_zero() {
        let m = TMatrix::generic(2, 3, 1);
        assert!(m.det_coeff(&[1, 2], 3).is_zero());
        assert_eq!(m.det_coeff(&[1, 2], 2).len(), 2);
    }

    #[test]
    fn two_by_two_constant_minor() {
        let m = TMatrix::generic(2, 2, 0);
        let d = m.det_coeff(&[1, 2], 0);
        let x = |i, j| Polynomial::var(XVar::new(i, j, 0));
        let expect = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1));
        assert_eq!(d, expect);
    }
}
