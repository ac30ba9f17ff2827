//! Closed-form right-hand sides, scalar identities, determinant checks, the
//! generic lemma identities, and sweep suites.

mod check;
mod closed;
mod lemmas;
pub mod sampling;
mod suite;
mod verdict;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::det::DetError;
use crate::exact::{Polynomial, Rational};
use crate::matrix::MatrixError;
use crate::sequences::{Companion, NamedFamily, PolySequence, RecurrenceSpec};

pub use check::{catalan, check, corollary1_j, corollary1_sij, CheckOptions, DetTheorem, EngineChoice};
pub use closed::{rhs_theorem2, rhs_theorem3, rhs_theorem35, rhs_theorem4};
pub use lemmas::{lemma1_check, lemma25_check, lemma2_check, lemma3_check};
pub use suite::{
    adjudicate, catalan_suite, corollary_suite, determinant_suite, lemma_suite, printed_discriminant, Corollary, Grid,
    LemmaKind, ProfileStrategy, Support,
};
pub use verdict::{Params, Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("sequences must share (a, b, c)")]
    MixedRecurrence,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Det(#[from] DetError),
    #[error("zero denominator at flat index {0}")]
    ZeroDenominator(usize),
    #[error("the literal `U_(r+1-i)` needs an integer r, got {0}")]
    NonIntegerR(Rational),
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("input lists must have length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("family value at index {0} is not defined")]
    UndefinedIndex(i64),
    #[error("{which} is stated for {expected}, not {got}")]
    FamilyMismatch { which: String, expected: &'static str, got: String },
}

/// Which reading of the rising-power closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Thm4Variant {
    /// Literal text: `U_{r+1-i}` with `r` the recurrence coefficient, and
    /// `P_{n+1}` in the last product.
    AsPrinted,
    /// `U_{m+1-i}` and `P_{n+i}`.
    Corrected,
}

impl Thm4Variant {
    pub fn name(self) -> &'static str {
        match self {
            Thm4Variant::AsPrinted => "as-printed",
            Thm4Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Thm4Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Thm4Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "as-printed" => Ok(Thm4Variant::AsPrinted),
            "corrected" => Ok(Thm4Variant::Corrected),
            _ => Err(format!("unknown variant {s:?} (expected as-printed or corrected)")),
        }
    }
}

/// A family together with its memoized sequence, companion sequence and
/// discriminant. Cheap to clone; clones share the caches.
#[derive(Clone, Debug)]
pub struct Subject {
    family: NamedFamily,
    spec: RecurrenceSpec,
    seq: Arc<PolySequence>,
    u: Companion,
    delta: Polynomial,
}

impl Subject {
    pub fn new(family: NamedFamily) -> Self {
        let spec = family.spec();
        let seq = Arc::new(PolySequence::new(spec.clone()));
        let u = if family == NamedFamily::Fibonacci {
            Companion::shifted(Arc::clone(&seq), 0)
        } else {
            family.companion()
        };
        Subject {
            delta: spec.discriminant(),
            family,
            spec,
            seq,
            u,
        }
    }

    pub fn from_spec(spec: RecurrenceSpec) -> Self {
        Subject::new(NamedFamily::Custom(spec))
    }

    /// Same sequences, but closed forms use `delta` in place of the
    /// discriminant. Used to test printed constants.
    pub fn with_discriminant(&self, delta: Polynomial) -> Self {
        Subject { delta, ..self.clone() }
    }

    pub fn family(&self) -> &NamedFamily {
        &self.family
    }

    pub fn label(&self) -> String {
        self.family.label()
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    pub fn sequence(&self) -> &PolySequence {
        &self.seq
    }

    pub fn term(&self, n: i64) -> Polynomial {
        self.seq.term(n)
    }

    pub fn u(&self, n: i64) -> Polynomial {
        self.u.term(n)
    }

    pub fn delta(&self) -> &Polynomial {
        &self.delta
    }

    pub fn c(&self) -> &Rational {
        self.spec.c()
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Binomial coefficient for exponent arithmetic.
pub(crate) fn binom(n: usize, k: usize) -> i64 {
    i64::try_from(binomial(n as u64, k as u64)).expect("exponent fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
        for n in 0..20u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn subject_companions() {
        let t = Subject::new(NamedFamily::ChebyshevT);
        assert_eq!(t.u(0), Polynomial::zero());
        assert_eq!(t.u(2), Polynomial::from_ints(&[0, 2]));
        let fib = Subject::new(NamedFamily::Fibonacci);
        assert_eq!(fib.u(5), fib.term(5));
        let printed = t.with_discriminant(Polynomial::from_ints(&[3]));
        assert_eq!(printed.delta(), &Polynomial::from_ints(&[3]));
        assert_eq!(printed.term(4), t.term(4));
    }
}
