//! Canonical text form: descending powers joined by ` + ` / ` - `, terms
//! written as `c`, `c*x`, `c*x^k`, `x`, or `x^k`, and `0` for zero.
//! Rational functions print as `(numer)/(denom)` unless the denominator is 1.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, ArithError, Polynomial, Rational, RationalFunction};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coeffs();
        let mut first = true;
        for (power, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match power {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("x")?;
                    if power > 1 {
                        write!(f, "^{power}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = ArithError;

    fn from_str(input: &str) -> Result<Self, ArithError> {
        let s: String = input
            .replace('\u{2212}', "-")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if s.is_empty() {
            return Err(ArithError::parse("polynomial", input, "empty input"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'^' | b'*' | b'/') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);

        let mut coeffs: Vec<Rational> = Vec::new();
        for term in terms {
            let (power, c) = parse_term(term).map_err(|reason| ArithError::parse("polynomial", input, reason))?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += c;
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

fn parse_term(term: &str) -> Result<(usize, Rational), String> {
    let (negative, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(format!("dangling sign in term {term:?}"));
    }
    let (power, coeff) = match body.split_once('x') {
        None => (0, parse_coeff(body)?),
        Some((prefix, suffix)) => {
            let coeff = match prefix {
                "" => Rational::one(),
                p => match p.strip_suffix('*') {
                    Some(c) if !c.is_empty() => parse_coeff(c)?,
                    _ => return Err(format!("expected `<rational>*x` in term {term:?}")),
                },
            };
            let power = match suffix {
                "" => 1,
                s => s
                    .strip_prefix('^')
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| format!("bad exponent in term {term:?}"))?,
            };
            (power, coeff)
        }
    };
    Ok((power, if negative { -coeff } else { coeff }))
}

fn parse_coeff(s: &str) -> Result<Rational, String> {
    if s.starts_with(['+', '-']) {
        return Err(format!("unexpected sign in coefficient {s:?}"));
    }
    parse_rational(s).map_err(|e| e.to_string())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "({})/({})", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalFunction {
    type Err = ArithError;

    fn from_str(input: &str) -> Result<Self, ArithError> {
        let s = input.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((numer, denom)) = rest.split_once(")/(") {
                if let Some(denom) = denom.strip_suffix(')') {
                    return RationalFunction::new(numer.parse()?, denom.parse()?);
                }
            }
            return Err(ArithError::parse("rational function", input, "expected `(numer)/(denom)`"));
        }
        Ok(s.parse::<Polynomial>()?.into())
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(Polynomial);
serde_via_text!(RationalFunction);
