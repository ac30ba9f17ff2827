//! Builds a matrix, runs an engine, evaluates the closed form and compares.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::closed::{rhs_theorem2, rhs_theorem3, rhs_theorem35, rhs_theorem4};
use super::{IdentityError, Params, Subject, Thm4Variant, Verdict};
use crate::det::{determinant, determinant_all, DetEntry, Engine};
use crate::exact::{pow_signed, Polynomial, Rational, RationalFunction};
use crate::matrix::{power_matrix, product_matrix, rising_matrix, IdentityCase, Matrix};

/// One engine, or every engine with a consistency check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineChoice {
    One(Engine),
    All,
}

impl fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineChoice::One(e) => e.fmt(f),
            EngineChoice::All => f.write_str("all"),
        }
    }
}

impl FromStr for EngineChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(EngineChoice::All)
        } else {
            s.parse().map(EngineChoice::One)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    pub engine: EngineChoice,
    /// Evaluate entries at this point first and compare scalars.
    pub x: Option<Rational>,
    /// Adds 1 to every right-hand side. Exists to exercise failure paths.
    pub corrupt_rhs: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            engine: EngineChoice::One(Engine::Bareiss),
            x: None,
            corrupt_rhs: false,
        }
    }
}

impl CheckOptions {
    pub fn with_engine(engine: Engine) -> Self {
        CheckOptions {
            engine: EngineChoice::One(engine),
            ..CheckOptions::default()
        }
    }

    pub fn at(mut self, x: Rational) -> Self {
        self.x = Some(x);
        self
    }

    fn finish(&self, lhs: RationalFunction, rhs: RationalFunction) -> (RationalFunction, RationalFunction) {
        let rhs = if self.corrupt_rhs { &rhs + &RationalFunction::one() } else { rhs };
        (lhs, rhs)
    }

    /// Specializes a polynomial when a point is set.
    fn project(&self, p: Polynomial) -> RationalFunction {
        match &self.x {
            Some(x) => RationalFunction::from(p.eval(x)),
            None => p.into(),
        }
    }
}

/// The determinant families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetTheorem {
    /// `[P^m_{s+k(n+i+j)}]`
    Power,
    /// `[prod P_{s+k(n+i+d_f)} prod P_{s+k(n+i+e_g)}]`
    Product,
    /// `[1 / P_{s+k(n+i+j)}]`
    Reciprocal,
    /// `[P^<m>_{n+i+j}]`
    Rising(Thm4Variant),
}

impl DetTheorem {
    pub fn tag(self) -> &'static str {
        match self {
            DetTheorem::Power => "2",
            DetTheorem::Product => "3",
            DetTheorem::Reciprocal => "3.5",
            DetTheorem::Rising(_) => "4",
        }
    }

    fn params(self, case: &IdentityCase) -> Params {
        match self {
            DetTheorem::Rising(_) => Params::rising(case),
            _ => Params::windowed(case),
        }
    }
}

struct Lhs {
    value: RationalFunction,
    engine: String,
    fallback_used: bool,
}

fn run_engine<T: DetEntry>(mat: &Matrix<T>, choice: EngineChoice) -> Result<(T, bool), String> {
    match choice {
        EngineChoice::One(engine) => determinant(mat, engine).map(|d| (d.value, d.fallback_used)).map_err(|e| e.to_string()),
        EngineChoice::All => {
            let (runs, consistent) = determinant_all(mat);
            let mut fallback = false;
            let mut value = None;
            for (engine, run) in runs {
                match run {
                    Ok(d) => {
                        fallback |= d.fallback_used;
                        value.get_or_insert(d.value);
                    }
                    Err(e) => return Err(format!("{engine}: {e}")),
                }
            }
            if !consistent {
                return Err("engines disagree".into());
            }
            Ok((value.expect("four engines ran"), fallback))
        }
    }
}

fn poly_lhs(mat: &Matrix<Polynomial>, opts: &CheckOptions) -> Result<Lhs, String> {
    let (value, fallback_used) = match &opts.x {
        Some(x) => {
            let (v, f) = run_engine(&mat.eval(x), opts.engine)?;
            (RationalFunction::from(v), f)
        }
        None => {
            let (v, f) = run_engine(mat, opts.engine)?;
            (RationalFunction::from(v), f)
        }
    };
    Ok(Lhs {
        value,
        engine: opts.engine.to_string(),
        fallback_used,
    })
}

/// The reciprocal family. At a point, the window is evaluated first, so a
/// term vanishing there is reported even when the polynomial is nonzero.
fn reciprocal_lhs(subject: &Subject, case: &IdentityCase, opts: &CheckOptions) -> Result<Lhs, IdentityError> {
    case.validate()?;
    let size = case.m + 1;
    let window: Vec<Polynomial> = (0..=2 * case.m as i64).map(|t| subject.term(case.index(t))).collect();
    let (value, fallback_used) = match &opts.x {
        Some(x) => {
            let values: Vec<Rational> = window.iter().map(|p| p.eval(x)).collect();
            if let Some(flat) = (0..size * size).find(|&f| values[f / size + f % size].is_zero()) {
                return Err(IdentityError::ZeroDenominator(flat));
            }
            let mat = Matrix::from_fn(size, |i, j| values[i + j].recip());
            let (v, f) = run_engine(&mat, opts.engine).map_err(IdentityError::InvalidCase)?;
            (RationalFunction::from(v), f)
        }
        None => {
            if let Some(flat) = (0..size * size).find(|&f| window[f / size + f % size].is_zero()) {
                return Err(IdentityError::ZeroDenominator(flat));
            }
            let mat = Matrix::from_fn(size, |i, j| RationalFunction::new(Polynomial::one(), window[i + j].clone()).expect("nonzero"));
            run_engine(&mat, opts.engine).map_err(IdentityError::InvalidCase)?
        }
    };
    Ok(Lhs {
        value,
        engine: opts.engine.to_string(),
        fallback_used,
    })
}

/// Runs one determinant identity. Never panics on degenerate input; problems
/// become verdicts with status `error`.
pub fn check(theorem: DetTheorem, subject: &Subject, case: &IdentityCase, opts: &CheckOptions) -> Verdict {
    let mut verdict = Verdict::new(theorem.tag(), subject.label(), theorem.params(case).at(opts.x.as_ref()))
        .spec(subject.spec())
        .engine(opts.engine.to_string());
    if let DetTheorem::Rising(variant) = theorem {
        verdict = verdict.variant(variant.name());
    }
    let mismatch_expected = theorem == DetTheorem::Rising(Thm4Variant::AsPrinted);
    match evaluate(theorem, subject, case, opts) {
        Ok((lhs, rhs)) => {
            let fallback = lhs.fallback_used;
            let (l, r) = opts.finish(lhs.value, rhs);
            let mut v = verdict.engine(lhs.engine).compare(l, r, mismatch_expected);
            v.fallback_used = fallback;
            v
        }
        Err(e) => verdict.failed(e),
    }
}

fn evaluate(theorem: DetTheorem, subject: &Subject, case: &IdentityCase, opts: &CheckOptions) -> Result<(Lhs, RationalFunction), IdentityError> {
    let seq = subject.sequence();
    let poly = |mat: Result<Matrix<Polynomial>, _>| -> Result<Lhs, IdentityError> {
        poly_lhs(&mat?, opts).map_err(IdentityError::InvalidCase)
    };
    Ok(match theorem {
        DetTheorem::Power => {
            let lhs = poly(power_matrix(seq, case))?;
            (lhs, opts.project(rhs_theorem2(subject, case)?))
        }
        DetTheorem::Product => {
            let lhs = poly(product_matrix(seq, case))?;
            (lhs, opts.project(rhs_theorem3(subject, case)?))
        }
        DetTheorem::Rising(variant) => {
            let lhs = poly(rising_matrix(seq, case))?;
            (lhs, opts.project(rhs_theorem4(subject, case, variant)?))
        }
        DetTheorem::Reciprocal => {
            let lhs = reciprocal_lhs(subject, case, opts)?;
            let rhs = rhs_theorem35(subject, case)?;
            let rhs = match &opts.x {
                Some(x) => RationalFunction::from(rhs.eval(x).map_err(|_| IdentityError::ZeroDenominator(0))?),
                None => rhs,
            };
            (lhs, rhs)
        }
    })
}

fn scalar_verdict(theorem: &str, subject: &Subject, params: Params, opts: &CheckOptions, lhs: Polynomial, rhs: Polynomial) -> Verdict {
    let (l, r) = opts.finish(opts.project(lhs), opts.project(rhs));
    Verdict::new(theorem, subject.label(), params.at(opts.x.as_ref()))
        .spec(subject.spec())
        .compare(l, r, false)
}

fn neg_c_pow(subject: &Subject, s: i64) -> Rational {
    pow_signed(&-subject.c(), s).expect("c is nonzero")
}

/// `P_{s+i} Q_{s+j} - P_s Q_{s+i+j}` against `(-c)^s (P_1 Q_j - P_0 Q_{j+1}) U_i`.
pub fn catalan(p: &Subject, q: &Subject, s: i64, i: i64, j: i64, opts: &CheckOptions) -> Result<Verdict, IdentityError> {
    if !p.spec().same_recurrence(q.spec()) {
        return Err(IdentityError::MixedRecurrence);
    }
    let lhs = &(&p.term(s + i) * &q.term(s + j)) - &(&p.term(s) * &q.term(s + i + j));
    let inner = &(&p.term(1) * &q.term(j)) - &(&p.term(0) * &q.term(j + 1));
    let rhs = (&inner * &p.u(i)).scale(&neg_c_pow(p, s));
    let params = Params {
        s: Some(s),
        i: Some(i),
        j: Some(j),
        ..Params::default()
    };
    let mut v = scalar_verdict("1", p, params, opts, lhs, rhs);
    if p.spec() != q.spec() {
        v.family = format!("{} x {}", p.label(), q.label());
        v.spec = Some(format!("{} x {}", p.spec(), q.spec()));
    }
    Ok(v)
}

/// `P_j P_1 - P_0 P_{j+1}` against `D U_j`.
pub fn corollary1_j(subject: &Subject, j: i64, opts: &CheckOptions) -> Verdict {
    let p = |n| subject.term(n);
    let lhs = &(&p(j) * &p(1)) - &(&p(0) * &p(j + 1));
    let rhs = subject.delta() * &subject.u(j);
    let params = Params {
        j: Some(j),
        ..Params::default()
    };
    scalar_verdict("cor1-j", subject, params, opts, lhs, rhs)
}

/// `P_{s+i} P_{s+j} - P_s P_{s+i+j}` against `(-c)^s D U_i U_j`.
pub fn corollary1_sij(subject: &Subject, s: i64, i: i64, j: i64, opts: &CheckOptions) -> Verdict {
    let p = |n| subject.term(n);
    let lhs = &(&p(s + i) * &p(s + j)) - &(&p(s) * &p(s + i + j));
    let rhs = (&(subject.delta() * &subject.u(i)) * &subject.u(j)).scale(&neg_c_pow(subject, s));
    let params = Params {
        s: Some(s),
        i: Some(i),
        j: Some(j),
        ..Params::default()
    };
    scalar_verdict("cor1-sij", subject, params, opts, lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::integer;
    use crate::identities::Status;
    use crate::matrix::IndexProfile;
    use crate::sequences::NamedFamily;

    fn fib() -> Subject {
        Subject::new(NamedFamily::Fibonacci)
    }

    #[test]
    fn catalan_examples() {
        let f = fib();
        let v = catalan(&f, &f, 1, 1, 1, &CheckOptions::default()).unwrap();
        assert_eq!(v.status, Status::Equal);
        assert_eq!(v.lhs, Some(Polynomial::from_ints(&[-1]).into()));
        assert_eq!(catalan(&f, &f, 2, 0, 3, &CheckOptions::default()).unwrap().status, Status::DegenerateOk);
        let lucas = Subject::new(NamedFamily::Lucas);
        assert!(catalan(&f, &lucas, -2, 3, -1, &CheckOptions::default()).unwrap().equal);
        let cheb = Subject::new(NamedFamily::ChebyshevT);
        assert_eq!(catalan(&f, &cheb, 0, 1, 1, &CheckOptions::default()), Err(IdentityError::MixedRecurrence));
    }

    #[test]
    fn corollary1_examples() {
        let f = fib();
        let v = corollary1_j(&f, 2, &CheckOptions::default());
        assert_eq!(v.lhs, Some(Polynomial::from_ints(&[0, 1]).into()));
        assert_eq!(v.status, Status::Equal);
        assert_eq!(corollary1_j(&f, 0, &CheckOptions::default()).status, Status::DegenerateOk);
        let lucas = Subject::new(NamedFamily::Lucas);
        let v = corollary1_sij(&lucas, 0, 1, 1, &CheckOptions::default());
        assert_eq!(v.lhs, Some(Polynomial::from_ints(&[-4, 0, -1]).into()));
        assert!(v.equal);
    }

    #[test]
    fn check_examples() {
        let f = fib();
        let v = check(DetTheorem::Power, &f, &IdentityCase::new(0, 1, 0, 1), &CheckOptions::default());
        assert_eq!(v.status, Status::Equal);
        assert_eq!(v.rhs, Some(Polynomial::from_ints(&[-1]).into()));

        let v = check(DetTheorem::Reciprocal, &f, &IdentityCase::new(0, 1, 0, 1), &CheckOptions::default());
        assert_eq!(v.status, Status::Error);
        assert!(v.error.unwrap().contains("zero denominator"));

        let case = IdentityCase::new(0, 1, 1, 2).with_d(2);
        let v = check(DetTheorem::Rising(Thm4Variant::AsPrinted), &f, &case, &CheckOptions::default());
        assert_eq!(v.status, Status::ExpectedMismatch);
        assert!(!v.equal);
        let v = check(DetTheorem::Rising(Thm4Variant::Corrected), &f, &case, &CheckOptions::default());
        assert_eq!(v.status, Status::Equal);
    }

    #[test]
    fn engine_all_and_corruption() {
        let f = fib();
        let case = IdentityCase::new(1, 2, -1, 3).with_profile(IndexProfile::new(vec![0, 2, -1], vec![1, 1, 3]).unwrap());
        let opts = CheckOptions {
            engine: EngineChoice::All,
            ..CheckOptions::default()
        };
        let v = check(DetTheorem::Product, &f, &case, &opts);
        assert!(v.equal, "{v:?}");
        assert_eq!(v.engine.as_deref(), Some("all"));
        let bad = CheckOptions {
            corrupt_rhs: true,
            ..CheckOptions::default()
        };
        assert_eq!(check(DetTheorem::Product, &f, &case, &bad).status, Status::Unequal);
    }

    #[test]
    fn specialization_commutes() {
        let lucas = Subject::new(NamedFamily::Lucas);
        for x in [integer(1), integer(-2)] {
            let opts = CheckOptions::default().at(x.clone());
            for case in [IdentityCase::new(0, 1, 1, 2), IdentityCase::new(-1, 2, 0, 3)] {
                let symbolic = check(DetTheorem::Power, &lucas, &case, &CheckOptions::default());
                let at = check(DetTheorem::Power, &lucas, &case, &opts);
                assert!(at.equal);
                let lhs_at = symbolic.lhs.unwrap().eval(&x).unwrap();
                assert_eq!(at.lhs, Some(RationalFunction::from(lhs_at)));
                assert_eq!(at.params.x.as_deref(), Some(x.to_string().as_str()));
            }
        }
        // F_2(0) = 0 even though F_2 is a nonzero polynomial
        let v = check(DetTheorem::Reciprocal, &fib(), &IdentityCase::new(0, 1, 1, 1), &CheckOptions::default().at(integer(0)));
        assert_eq!(v.status, Status::Error);
    }
}
