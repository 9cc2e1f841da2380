//! The distributive lattice of shifted column sets `alpha^(a)`, its image in
//! Young's lattice, intervals, incomparable pairs and maximal-chain counts.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::Variable;

/// Largest supported row count.
pub const MAX_P: usize = 12;

/// The parameters `p` (rows), `m` (column surplus), `n` (entry degree in
/// `t`) and `q` (shift bound, at most `n p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    p: usize,
    m: usize,
    n: usize,
    q: usize,
}

impl Context {
    pub fn new(p: usize, m: usize, n: usize, q: usize) -> Result<Self> {
        if p == 0 || m == 0 {
            return Err(Error::InvalidInput(format!("need p >= 1 and m >= 1, got p={p}, m={m}")));
        }
        if p > MAX_P || m + p > 255 {
            return Err(Error::InvalidInput(format!(
                "context too large: p={p} (max {MAX_P}), m+p={} (max 255)",
                m + p
            )));
        }
        if q > n * p {
            return Err(Error::InvalidInput(format!("q={q} exceeds n*p={}", n * p)));
        }
        Ok(Context { p, m, n, q })
    }

    /// Context with the smallest entry degree that admits shift bound `q`.
    pub fn with_q(p: usize, m: usize, q: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidInput("need p >= 1".into()));
        }
        Self::new(p, m, q.div_ceil(p), q)
    }

    /// Context with `q = n p`, the full quantum Grassmannian for degree-`n`
    /// entries.
    pub fn full(p: usize, m: usize, n: usize) -> Result<Self> {
        Self::new(p, m, n, n * p)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `m + p`, the number of columns.
    pub fn width(&self) -> usize {
        self.m + self.p
    }

    /// `(n+1)(m+p)`, the column count of the level-concatenated matrix.
    pub fn big_n(&self) -> usize {
        (self.n + 1) * self.width()
    }

    pub fn is_full(&self) -> bool {
        self.q == self.n * self.p
    }

    /// Checks row count and column range, ignoring the shift bound.
    pub fn check_var(&self, u: &PluckerVar) -> Result<()> {
        if u.p() != self.p {
            return Err(Error::InvalidInput(format!(
                "{u} has {} columns, expected p={}",
                u.p(),
                self.p
            )));
        }
        if u.cols().last().is_some_and(|&c| c as usize > self.width()) {
            return Err(Error::InvalidInput(format!(
                "{u} has a column above m+p={}",
                self.width()
            )));
        }
        Ok(())
    }

    /// Checks membership in the truncated lattice (shift at most `q`).
    pub fn check_member(&self, u: &PluckerVar) -> Result<()> {
        self.check_var(u)?;
        if u.shift() as usize > self.q {
            return Err(Error::InvalidInput(format!("{u} has shift above q={}", self.q)));
        }
        Ok(())
    }

    pub fn contains(&self, u: &PluckerVar) -> bool {
        self.check_member(u).is_ok()
    }

    /// The minimum `12..p^(0)`.
    pub fn bottom(&self) -> PluckerVar {
        let cols: Vec<u8> = (1..=self.p as u8).collect();
        PluckerVar::new(&cols, 0).expect("valid")
    }

    /// The maximum `(m+1)..(m+p)^(q)`.
    pub fn top(&self) -> PluckerVar {
        let cols: Vec<u8> = (self.m as u8 + 1..=self.width() as u8).collect();
        PluckerVar::new(&cols, self.q as u32).expect("valid")
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} m={} n={} q={}", self.p, self.m, self.n, self.q)
    }
}

/// The lattice element `alpha^(a)`: a strictly increasing column set
/// `alpha` with a nonnegative shift `a`.
///
/// The derived order compares the shift first and then `alpha`
/// lexicographically. This is a linear extension of the lattice order and
/// serves as the variable order of the Plücker polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerVar {
    shift: u32,
    len: u8,
    cols: [u8; MAX_P],
}

impl PluckerVar {
    pub fn new(cols: &[u8], shift: u32) -> Result<Self> {
        if cols.is_empty() || cols.len() > MAX_P {
            return Err(Error::InvalidInput(format!(
                "need 1..={MAX_P} columns, got {}",
                cols.len()
            )));
        }
        if cols[0] == 0 || cols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "columns {cols:?} must be positive and strictly increasing"
            )));
        }
        let mut arr = [0u8; MAX_P];
        arr[..cols.len()].copy_from_slice(cols);
        Ok(PluckerVar {
            shift,
            len: cols.len() as u8,
            cols: arr,
        })
    }

    pub fn cols(&self) -> &[u8] {
        &self.cols[..self.len as usize]
    }

    /// 1-based column entry `alpha_i`.
    pub fn col(&self, i: usize) -> u8 {
        self.cols[i - 1]
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn p(&self) -> usize {
        self.len as usize
    }

    /// `alpha^(a) <= beta^(b)`: `a <= b` and `alpha_i <= beta_{b-a+i}` for
    /// every `i` with `b-a+i <= p`.
    pub fn leq(&self, other: &PluckerVar) -> bool {
        debug_assert_eq!(self.len, other.len);
        if self.shift > other.shift {
            return false;
        }
        let d = (other.shift - self.shift) as usize;
        let p = self.p();
        (0..p.saturating_sub(d)).all(|i| self.cols[i] <= other.cols[i + d])
    }

    pub fn comparable(&self, other: &PluckerVar) -> bool {
        self.leq(other) || other.leq(self)
    }

    /// `(self ∧ other, self ∨ other)` by standardizing the two-row tableau:
    /// aligned entries that violate the column condition are interchanged.
    pub fn meet_join(&self, other: &PluckerVar) -> (PluckerVar, PluckerVar) {
        debug_assert_eq!(self.len, other.len);
        let (mut lo, mut hi) = if self.shift <= other.shift {
            (*self, *other)
        } else {
            (*other, *self)
        };
        let d = (hi.shift - lo.shift) as usize;
        for i in 0..lo.p().saturating_sub(d) {
            if lo.cols[i] > hi.cols[i + d] {
                std::mem::swap(&mut lo.cols[i], &mut hi.cols[i + d]);
            }
        }
        debug_assert!(lo.cols().windows(2).all(|w| w[0] < w[1]));
        debug_assert!(hi.cols().windows(2).all(|w| w[0] < w[1]));
        (lo, hi)
    }

    pub fn meet(&self, other: &PluckerVar) -> PluckerVar {
        self.meet_join(other).0
    }

    pub fn join(&self, other: &PluckerVar) -> PluckerVar {
        self.meet_join(other).1
    }

    /// `a (m+p) + sum_j (alpha_j - j)`.
    pub fn rank(&self, width: usize) -> usize {
        self.shift as usize * width
            + self
                .cols()
                .iter()
                .enumerate()
                .map(|(j, &c)| c as usize - (j + 1))
                .sum::<usize>()
    }

    /// Text form; the compact digit form is used only when every column is a
    /// single digit.
    pub fn to_text(&self, compact: bool) -> String {
        let mut s = String::new();
        self.write_text(&mut s, compact);
        s
    }
}

impl fmt::Display for PluckerVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

impl fmt::Debug for PluckerVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(true))
    }
}

impl FromStr for PluckerVar {
    type Err = Error;

    /// Accepts `235^2` (single-digit columns) and `2,3,5^2`. A single
    /// column above 9 is written with a trailing comma, `11,^0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad lattice element {s:?}, expected e.g. 235^2 or 2,3,5^2"));
        let (cols, shift) = s.split_once('^').ok_or_else(bad)?;
        let shift: u32 = shift.parse().map_err(|_| bad())?;
        let cols: Vec<u8> = if cols.contains(',') {
            cols.strip_suffix(',')
                .unwrap_or(cols)
                .split(',')
                .map(|c| c.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            cols.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        PluckerVar::new(&cols, shift).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Variable for PluckerVar {
    const UNIVERSE: &'static str = "C";

    fn write_text(&self, out: &mut String, compact: bool) {
        let compact = compact && self.cols().iter().all(|&c| c <= 9);
        let sep = if compact { "" } else { "," };
        out.push_str(&self.cols().iter().map(|c| c.to_string()).join(sep));
        // a lone multi-digit column would read back as several digits
        if self.len == 1 && self.cols[0] > 9 {
            out.push(',');
        }
        out.push('^');
        out.push_str(&self.shift.to_string());
    }

    /// Powers are written as repeated factors, the way a tableau lists rows.
    fn write_power(&self, out: &mut String, exp: u32, compact: bool) {
        for k in 0..exp {
            if k > 0 {
                out.push('*');
            }
            self.write_text(out, compact);
        }
    }

    fn parse_factor(s: &str) -> Result<(Self, u32)> {
        Ok((s.parse()?, 1))
    }

    fn json_fields(&self) -> Vec<u64> {
        let mut f: Vec<u64> = self.cols().iter().map(|&c| c as u64).collect();
        f.push(self.shift as u64);
        f
    }

    fn from_json_fields(f: &[u64]) -> Result<Self> {
        let (shift, cols) = f.split_last().ok_or_else(|| Error::Parse("empty C variable".into()))?;
        let cols: Vec<u8> = cols
            .iter()
            .map(|&c| u8::try_from(c).map_err(|_| Error::Parse(format!("column {c} out of range"))))
            .collect::<Result<_>>()?;
        let shift = u32::try_from(*shift).map_err(|_| Error::Parse("shift out of range".into()))?;
        PluckerVar::new(&cols, shift).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A strictly increasing sequence `j_1 < .. < j_p` of positive integers, an
/// element of Young's lattice. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungSeq(pub Vec<u32>);

impl YoungSeq {
    pub fn new(j: Vec<u32>) -> Result<Self> {
        if j.is_empty() || j[0] == 0 || j.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "sequence {j:?} must be positive and strictly increasing"
            )));
        }
        Ok(YoungSeq(j))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `sum_i (j_i - i)`.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &j)| j as usize - (i + 1)).sum()
    }

    /// Componentwise comparison.
    pub fn leq(&self, other: &YoungSeq) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for YoungSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Debug for YoungSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for YoungSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad sequence {s:?}, expected (j1,..,jp)"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let j: Vec<u32> = inner
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        YoungSeq::new(j).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Variable for YoungSeq {
    const UNIVERSE: &'static str = "J";

    fn write_text(&self, out: &mut String, _compact: bool) {
        out.push_str(&self.to_string());
    }

    fn parse_factor(s: &str) -> Result<(Self, u32)> {
        let s = s.trim();
        match s.rsplit_once(")^") {
            Some((v, e)) => {
                let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                if e == 0 {
                    return Err(Error::Parse(format!("zero exponent in {s:?}")));
                }
                Ok((format!("{v})").parse()?, e))
            }
            None => Ok((s.parse()?, 1)),
        }
    }

    fn json_fields(&self) -> Vec<u64> {
        self.0.iter().map(|&j| j as u64).collect()
    }

    fn from_json_fields(f: &[u64]) -> Result<Self> {
        let j: Vec<u32> = f
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::Parse("entry out of range".into())))
            .collect::<Result<_>>()?;
        YoungSeq::new(j).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A (skew) tableau: one lattice element per row, read top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub rows: Vec<PluckerVar>,
}

impl Tableau {
    pub fn new(rows: Vec<PluckerVar>) -> Self {
        Tableau { rows }
    }

    /// Rows form a chain `row_1 <= row_2 <= ..`.
    pub fn is_standard(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].leq(&w[1]))
    }

    /// Bubble sort in the lattice: adjacent rows out of order are replaced by
    /// their meet and join until the tableau is standard.
    pub fn standardize(&self) -> Tableau {
        let mut rows = self.rows.clone();
        loop {
            let mut changed = false;
            for k in 0..rows.len().saturating_sub(1) {
                if !rows[k].leq(&rows[k + 1]) {
                    let (lo, hi) = rows[k].meet_join(&rows[k + 1]);
                    rows[k] = lo;
                    rows[k + 1] = hi;
                    changed = true;
                }
            }
            if !changed {
                return Tableau { rows };
            }
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rows.iter().join(" "))
    }
}

pub fn leq(u: &PluckerVar, v: &PluckerVar, ctx: &Context) -> Result<bool> {
    ctx.check_var(u)?;
    ctx.check_var(v)?;
    Ok(u.leq(v))
}

pub fn meet_join(u: &PluckerVar, v: &PluckerVar) -> Result<(PluckerVar, PluckerVar)> {
    if u.p() != v.p() {
        return Err(Error::InvalidInput(format!("{u} and {v} have different row counts")));
    }
    Ok(u.meet_join(v))
}

pub fn rank(u: &PluckerVar, ctx: &Context) -> usize {
    u.rank(ctx.width())
}

/// Elements of `C^q_{p,m}`, or of the closed interval `[bottom, top]`, in
/// ascending variable order.
pub fn enumerate(ctx: &Context, interval: Option<(&PluckerVar, &PluckerVar)>) -> Result<Vec<PluckerVar>> {
    if let Some((lo, hi)) = interval {
        ctx.check_member(lo)?;
        ctx.check_member(hi)?;
        if !lo.leq(hi) {
            return Err(Error::InvalidInput(format!("empty interval [{lo}, {hi}]")));
        }
    }
    let mut out = Vec::new();
    for a in 0..=ctx.q() as u32 {
        for cols in (1..=ctx.width() as u8).combinations(ctx.p()) {
            let u = PluckerVar::new(&cols, a).expect("valid");
            if interval.is_none_or(|(lo, hi)| lo.leq(&u) && u.leq(hi)) {
                out.push(u);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Unordered incomparable pairs `(u, v)` with `u < v` in the variable
/// order, sorted.
pub fn incomparable_pairs(
    ctx: &Context,
    interval: Option<(&PluckerVar, &PluckerVar)>,
) -> Result<Vec<(PluckerVar, PluckerVar)>> {
    Ok(incomparable_pairs_of(&enumerate(ctx, interval)?))
}

pub fn incomparable_pairs_of(elems: &[PluckerVar]) -> Vec<(PluckerVar, PluckerVar)> {
    let mut out = Vec::new();
    for (i, u) in elems.iter().enumerate() {
        for v in &elems[i + 1..] {
            if !u.comparable(v) {
                out.push((*u, *v));
            }
        }
    }
    out
}

/// Number of maximal chains of `C^q_{p,m}` or of an interval, by dynamic
/// programming over the cover relation. An empty interval has no chains.
pub fn count_maximal_chains(ctx: &Context, interval: Option<(&PluckerVar, &PluckerVar)>) -> Result<BigUint> {
    if let Some((lo, hi)) = interval {
        ctx.check_member(lo)?;
        ctx.check_member(hi)?;
        if !lo.leq(hi) {
            return Ok(BigUint::zero());
        }
    }
    let elems = enumerate(ctx, interval)?;
    let (lo, hi) = match interval {
        Some((lo, hi)) => (*lo, *hi),
        None => (ctx.bottom(), ctx.top()),
    };
    let w = ctx.width();
    let mut by_rank: HashMap<usize, Vec<PluckerVar>> = HashMap::new();
    for u in &elems {
        by_rank.entry(u.rank(w)).or_default().push(*u);
    }
    let (r0, r1) = (lo.rank(w), hi.rank(w));
    let mut ways: HashMap<PluckerVar, BigUint> = HashMap::new();
    ways.insert(lo, BigUint::one());
    for r in r0 + 1..=r1 {
        let below = by_rank.get(&(r - 1)).cloned().unwrap_or_default();
        for v in by_rank.get(&r).into_iter().flatten() {
            let mut total = BigUint::zero();
            for u in below.iter().filter(|u| u.leq(v)) {
                if let Some(c) = ways.get(u) {
                    total += c;
                }
            }
            ways.insert(*v, total);
        }
    }
    Ok(ways.remove(&hi).unwrap_or_default())
}

/// The Young-lattice image `J(alpha^(a))`.
pub fn to_young(u: &PluckerVar, ctx: &Context) -> YoungSeq {
    let p = u.p();
    let w = ctx.width() as u32;
    let (l, r) = (u.shift() as usize / p, u.shift() as usize % p);
    let l = l as u32;
    let j = (1..=p)
        .map(|i| {
            if i <= p - r {
                l * w + u.col(r + i) as u32
            } else {
                (l + 1) * w + u.col(i + r - p) as u32
            }
        })
        .collect();
    YoungSeq(j)
}

/// Inverse of [`to_young`], defined on sequences with `j_p - j_1 < m+p`.
pub fn from_young(j: &YoungSeq, ctx: &Context) -> Result<PluckerVar> {
    let e = j.entries();
    let w = ctx.width() as u32;
    if e.len() != ctx.p() {
        return Err(Error::InvalidInput(format!(
            "{j} has length {}, expected {}",
            e.len(),
            ctx.p()
        )));
    }
    if e[e.len() - 1] - e[0] >= w {
        return Err(Error::NotInImage(format!(
            "{j}: spread j_p - j_1 must be below m+p={w}"
        )));
    }
    let level = |x: u32| (x - 1) / w;
    let l = level(e[0]);
    let r = e.iter().filter(|&&x| level(x) > l).count();
    let mut cols: Vec<u8> = e.iter().map(|&x| ((x - 1) % w + 1) as u8).collect();
    cols.sort_unstable();
    PluckerVar::new(&cols, l * ctx.p() as u32 + r as u32)
}
