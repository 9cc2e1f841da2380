use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
///
/// Integers that fit in an `i64` are stored inline; everything else falls back
/// to an arbitrary-precision rational. Values are kept normalized, so a `Big`
/// never holds an integer that would fit the small representation and the
/// derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(BigRational),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(0)
    }

    pub fn one() -> Self {
        Coeff::Small(1)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Coeff::Small(v);
            }
        }
        Coeff::Big(r)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(v) => BigRational::from_integer(BigInt::from(*v)),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(_) => true,
            Coeff::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(v) => Some(*v),
            Coeff::Big(_) => None,
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coeff::Small(1) => Coeff::Small(1),
            Coeff::Small(-1) => Coeff::Small(-1),
            _ => Self::from_big(self.to_big().recip()),
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<i32> for Coeff {
    fn from(v: i32) -> Self {
        Coeff::Small(v as i64)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() + rhs.to_big())
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() - rhs.to_big())
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() * rhs.to_big())
    }
}

impl Div for &Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if *b != 0 && a % b == 0 {
                if let Some(v) = a.checked_div(*b) {
                    return Coeff::Small(v);
                }
            }
        }
        Coeff::from_big(self.to_big() / rhs.to_big())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::from_big(-self.to_big()),
            },
            Coeff::Big(r) => Coeff::from_big(-r.clone()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Coeff::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coeff {
    type Err = Error;

    /// Accepts `n`, `-n` and `a/b` with decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad coefficient {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Coeff::from_big(BigRational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_overflow_promotes() {
        let a = Coeff::from(i64::MAX);
        let b = &a + &Coeff::one();
        assert!(matches!(b, Coeff::Big(_)));
        let c = &b - &Coeff::one();
        assert_eq!(c, a);
        let sq = &a * &a;
        assert_eq!(&sq / &a, a);
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-7", "3/4", "-12/5", "123456789012345678901234567890"] {
            let c: Coeff = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("6/3".parse::<Coeff>().unwrap(), Coeff::from(2));
        assert!("1/0".parse::<Coeff>().is_err());
        assert!("x".parse::<Coeff>().is_err());
    }

    #[test]
    fn division_normalizes() {
        let q = &Coeff::from(6) / &Coeff::from(4);
        assert_eq!(q, Coeff::from_ratio(3, 2));
        assert_eq!(&q * &Coeff::from(2), Coeff::from(3));
        assert!(Coeff::from(i64::MIN).inv().is_negative());
    }
}
