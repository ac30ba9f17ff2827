//! Exact arithmetic: rationals, univariate polynomials over the rationals and
//! canonical rational functions.

mod poly;
mod ratfun;
mod ring;
mod text;
pub(crate) mod zpoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use ring::{Field, Ring};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
}

impl ArithError {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        ArithError::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `base^exp` for any signed exponent, with `0^0 = 1`.
pub fn pow_signed(base: &Rational, exp: i64) -> Result<Rational, ArithError> {
    if exp == 0 {
        return Ok(<Rational as One>::one());
    }
    if Zero::is_zero(base) {
        return if exp > 0 {
            Ok(<Rational as Zero>::zero())
        } else {
            Err(ArithError::DivisionByZero)
        };
    }
    let magnitude = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    Ok(if exp < 0 {
        magnitude.recip()
    } else {
        magnitude
    })
}

/// Parses `a`, `-a`, or `a/b`.
pub fn parse_rational(input: &str) -> Result<Rational, ArithError> {
    let s = input.trim().replace('\u{2212}', "-");
    let err = |reason: &str| ArithError::parse("rational", input, reason);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}
