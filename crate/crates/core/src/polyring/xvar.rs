use std::fmt;

use super::monomial::Variable;
use crate::error::{Error, Result};

/// Coefficient indeterminate `x[i,j,l]`: row `i`, column `j`, level `l`
/// (the power of `t` it multiplies).
///
/// Variables are ordered lexicographically by `(l, i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XVar {
    pub level: u8,
    pub row: u8,
    pub col: u8,
}

impl XVar {
    pub fn new(row: u8, col: u8, level: u8) -> Self {
        XVar { level, row, col }
    }
}

impl fmt::Display for XVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{},{}]", self.row, self.col, self.level)
    }
}

impl fmt::Debug for XVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for XVar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable {s:?}, expected x[i,j,l]"));
        let inner = s
            .trim()
            .strip_prefix("x[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let nums: Vec<u8> = inner
            .split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match nums[..] {
            [i, j, l] if i >= 1 && j >= 1 => Ok(XVar::new(i, j, l)),
            _ => Err(bad()),
        }
    }
}

impl Variable for XVar {
    const UNIVERSE: &'static str = "X";

    fn write_text(&self, out: &mut String, _compact: bool) {
        out.push_str(&self.to_string());
    }

    fn parse_factor(s: &str) -> Result<(Self, u32)> {
        let s = s.trim();
        match s.rsplit_once("]^") {
            Some((v, e)) => {
                let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                if e == 0 {
                    return Err(Error::Parse(format!("zero exponent in {s:?}")));
                }
                Ok((format!("{v}]").parse()?, e))
            }
            None => Ok((s.parse()?, 1)),
        }
    }

    fn json_fields(&self) -> Vec<u64> {
        vec![self.row as u64, self.col as u64, self.level as u64]
    }

    fn from_json_fields(f: &[u64]) -> Result<Self> {
        match *f {
            [i, j, l] if (1..256).contains(&i) && (1..256).contains(&j) && l < 256 => {
                Ok(XVar::new(i as u8, j as u8, l as u8))
            }
            _ => Err(Error::Parse(format!("bad X variable fields {f:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_level_row_col() {
        let chain = [
            XVar::new(1, 2, 0),
            XVar::new(1, 2, 1),
            XVar::new(1, 5, 1),
            XVar::new(2, 3, 1),
            XVar::new(2, 4, 1),
            XVar::new(1, 3, 2),
        ];
        assert!(chain.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("x[3,6,0]".parse::<XVar>().unwrap(), XVar::new(3, 6, 0));
        assert_eq!(XVar::parse_factor("x[1,2,1]^3").unwrap(), (XVar::new(1, 2, 1), 3));
        assert!("x[0,1,0]".parse::<XVar>().is_err());
        assert!("x[1,2]".parse::<XVar>().is_err());
    }
}
