//! Text and JSON forms of polynomials.
//!
//! Text: terms in descending term order joined by ` + ` / ` - `, factors
//! joined by `*`, a coefficient of absolute value one is omitted.
//!
//! JSON: `{"vars": U, "terms": [{"c": "<int or a/b>", "m": [[field.., exp], ..]}]}`
//! with terms in descending term order and factors ascending. `U` is `"X"`
//! (fields `i, j, l`), `"C"` (fields `alpha_1..alpha_p, a`) or `"J"`
//! (fields `j_1..j_p`). The schema is `schemas/polynomial.json`.

use serde_json::{json, Value};

use super::coeff::Coeff;
use super::monomial::{Monomial, Variable};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

impl<V: Variable> Polynomial<V> {
    pub fn to_text(&self, compact: bool) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            write_term(&mut out, k == 0, m, c, compact);
        }
        out
    }

    /// Streams the text form term by term.
    pub fn write_text_to(&self, w: &mut impl std::io::Write, compact: bool) -> std::io::Result<()> {
        if self.is_zero() {
            return w.write_all(b"0");
        }
        let mut buf = String::new();
        for (k, (m, c)) in self.terms_desc().enumerate() {
            buf.clear();
            write_term(&mut buf, k == 0, m, c, compact);
            w.write_all(buf.as_bytes())?;
        }
        Ok(())
    }

    pub fn parse_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::zero();
        for (neg, body) in split_terms(s)? {
            let (c, m) = parse_term(body)?;
            out.add_term(m, if neg { -c } else { c });
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms_desc()
            .map(|(m, c)| {
                let fs: Vec<Value> = m
                    .factors()
                    .iter()
                    .map(|(v, e)| {
                        let mut f = v.json_fields();
                        f.push(*e as u64);
                        json!(f)
                    })
                    .collect();
                json!({"c": c.to_string(), "m": fs})
            })
            .collect();
        json!({"vars": V::UNIVERSE, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let obj = v.as_object().ok_or_else(|| bad("not an object"))?;
        match obj.get("vars").and_then(Value::as_str) {
            Some(u) if u == V::UNIVERSE => {}
            _ => return Err(bad("wrong or missing \"vars\"")),
        }
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"terms\""))?;
        let mut out = Polynomial::zero();
        for t in terms {
            let c: Coeff = t
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without \"c\""))?
                .parse()?;
            let fs = t
                .get("m")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term without \"m\""))?;
            let mut factors = Vec::with_capacity(fs.len());
            for f in fs {
                let nums: Vec<u64> = f
                    .as_array()
                    .ok_or_else(|| bad("factor is not an array"))?
                    .iter()
                    .map(|x| x.as_u64().ok_or_else(|| bad("non-integer field")))
                    .collect::<Result<_>>()?;
                let (exp, fields) = nums.split_last().ok_or_else(|| bad("empty factor"))?;
                if *exp == 0 {
                    return Err(bad("zero exponent"));
                }
                factors.push((V::from_json_fields(fields)?, *exp as u32));
            }
            out.add_term(Monomial::from_factors(factors), c);
        }
        Ok(out)
    }
}

fn write_term<V: Variable>(out: &mut String, first: bool, m: &Monomial<V>, c: &Coeff, compact: bool) {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let a = c.abs();
    if m.is_one() {
        out.push_str(&a.to_string());
        return;
    }
    if !a.is_one() {
        out.push_str(&a.to_string());
        out.push('*');
    }
    m.write_text(out, compact);
}

/// Splits at top-level `+`/`-` signs, returning `(negated, term text)`.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut neg = false;
    let mut start = 0usize;
    let mut seen_body = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if seen_body {
                    out.push((neg, s[start..i].trim()));
                    seen_body = false;
                } else if !s[start..i].trim().is_empty() {
                    return Err(Error::Parse(format!("unexpected sign in {s:?}")));
                }
                neg = ch == '-';
                start = i + 1;
                continue;
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            seen_body = true;
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    if !seen_body {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((neg, s[start..].trim()));
    Ok(out)
}

fn is_coefficient(s: &str) -> bool {
    let mut parts = s.splitn(2, '/');
    let num_ok = |p: Option<&str>| p.is_some_and(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()));
    let first = parts.next();
    match parts.next() {
        None => num_ok(first),
        second => num_ok(first) && num_ok(second),
    }
}

fn parse_term<V: Variable>(s: &str) -> Result<(Coeff, Monomial<V>)> {
    let mut c = Coeff::one();
    let mut factors = Vec::new();
    for (k, f) in s.split('*').map(str::trim).enumerate() {
        if f.is_empty() {
            return Err(Error::Parse(format!("empty factor in {s:?}")));
        }
        if k == 0 && is_coefficient(f) {
            c = f.parse()?;
        } else {
            factors.push(V::parse_factor(f)?);
        }
    }
    Ok((c, Monomial::from_factors(factors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::XVar;

    fn x(i: u8, j: u8, l: u8) -> Polynomial<XVar> {
        Polynomial::var(XVar::new(i, j, l))
    }

    #[test]
    fn text_round_trip() {
        let f = &(&x(1, 1, 0) * &x(1, 1, 0)) - &x(2, 3, 1).scale(&Coeff::from_ratio(3, 2));
        let f = &f + &Polynomial::constant(Coeff::from(-4));
        let s = f.to_text(false);
        assert_eq!(s, "x[1,1,0]^2 - 3/2*x[2,3,1] - 4");
        assert_eq!(Polynomial::<XVar>::parse_text(&s).unwrap(), f);
        assert_eq!(Polynomial::<XVar>::parse_text("0").unwrap(), Polynomial::zero());
    }

    #[test]
    fn json_round_trip() {
        let f = &(&x(3, 6, 0) * &x(1, 5, 1)).scale(&Coeff::from(-2)) + &x(1, 2, 0);
        let j = f.to_json();
        assert_eq!(j["vars"], "X");
        assert_eq!(j["terms"][0]["c"], "-2");
        assert_eq!(Polynomial::<XVar>::from_json(&j).unwrap(), f);
    }

    #[test]
    fn malformed_text_is_rejected() {
        for s in ["", "x[1,1", "x[1,1,0] +", "2*", "x[1,1,0] * * x[1,2,0]", "y"] {
            assert!(Polynomial::<XVar>::parse_text(s).is_err(), "{s}");
        }
    }
}
