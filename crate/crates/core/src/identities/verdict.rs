use serde::Serialize;

use crate::exact::{Rational, RationalFunction};
use crate::matrix::IdentityCase;

/// Outcome class of one comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Both sides agree and are nonzero.
    Equal,
    /// Both sides are exactly zero.
    DegenerateOk,
    Unequal,
    /// Unequal, for a formula known to be misprinted.
    ExpectedMismatch,
    /// The comparison could not be made (e.g. a zero denominator).
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Equal => "equal",
            Status::DegenerateOk => "degenerate-ok",
            Status::Unequal => "unequal",
            Status::ExpectedMismatch => "expected-mismatch",
            Status::Error => "error",
        }
    }
}

/// The parameters of a verdict. Every key is always serialized; unused ones
/// are `null`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    pub s: Option<i64>,
    pub k: Option<i64>,
    pub n: Option<i64>,
    pub m: Option<usize>,
    pub d: Option<usize>,
    pub i: Option<i64>,
    pub j: Option<i64>,
    pub d_seq: Option<Vec<i64>>,
    pub e_seq: Option<Vec<i64>>,
    pub x: Option<String>,
}

impl Params {
    /// `s, k, n, m`, plus the profile when the case carries one.
    pub fn windowed(case: &IdentityCase) -> Self {
        Params {
            s: Some(case.s),
            k: Some(case.k),
            n: Some(case.n),
            m: Some(case.m),
            d_seq: case.profile.as_ref().map(|p| p.d_seq().to_vec()),
            e_seq: case.profile.as_ref().map(|p| p.e_seq().to_vec()),
            ..Params::default()
        }
    }

    /// `n, m, d` for rising-power matrices.
    pub fn rising(case: &IdentityCase) -> Self {
        Params {
            n: Some(case.n),
            m: Some(case.m),
            d: Some(case.d),
            ..Params::default()
        }
    }

    pub fn at(mut self, x: Option<&Rational>) -> Self {
        self.x = x.map(|v| v.to_string());
        self
    }
}

/// One exact comparison of a left-hand side against a closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: String,
    pub family: String,
    pub spec: Option<String>,
    pub params: Params,
    pub engine: Option<String>,
    pub variant: Option<String>,
    pub status: Status,
    pub equal: bool,
    pub lhs: Option<RationalFunction>,
    pub rhs: Option<RationalFunction>,
    pub difference: Option<RationalFunction>,
    pub fallback_used: bool,
    pub error: Option<String>,
}

impl Verdict {
    pub fn new(theorem: impl Into<String>, family: impl Into<String>, params: Params) -> Self {
        Verdict {
            theorem: theorem.into(),
            family: family.into(),
            spec: None,
            params,
            engine: None,
            variant: None,
            status: Status::Error,
            equal: false,
            lhs: None,
            rhs: None,
            difference: None,
            fallback_used: false,
            error: None,
        }
    }

    pub fn spec(mut self, spec: impl ToString) -> Self {
        self.spec = Some(spec.to_string());
        self
    }

    pub fn engine(mut self, engine: impl Into<String>) -> Self {
        self.engine = Some(engine.into());
        self
    }

    pub fn variant(mut self, variant: impl Into<String>) -> Self {
        self.variant = Some(variant.into());
        self
    }

    /// Fills in both sides and classifies. `mismatch_expected` marks formulas
    /// that are known to be misprinted.
    pub fn compare(mut self, lhs: RationalFunction, rhs: RationalFunction, mismatch_expected: bool) -> Self {
        let difference = &lhs - &rhs;
        self.equal = difference.is_zero();
        self.status = match (self.equal, lhs.is_zero()) {
            (true, true) => Status::DegenerateOk,
            (true, false) => Status::Equal,
            (false, _) if mismatch_expected => Status::ExpectedMismatch,
            (false, _) => Status::Unequal,
        };
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.difference = Some(difference);
        self
    }

    pub fn failed(mut self, error: impl ToString) -> Self {
        self.status = Status::Error;
        self.equal = false;
        self.error = Some(error.to_string());
        self
    }

    /// An inequality nobody expected.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Unequal
    }

    pub fn lhs_is_zero(&self) -> bool {
        self.lhs.as_ref().is_some_and(RationalFunction::is_zero)
    }
}
