//! Three-term recurrence sequences `P_0 = p`, `P_1 = q x + r`,
//! `P_{n+2} = (a x + b) P_{n+1} + c P_n`, extended to negative indices by
//! running the recurrence backwards.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{integer, parse_rational, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("recurrence coefficient c must be nonzero")]
    ZeroC,
    #[error("orthogonal family needs q != 0")]
    ZeroQ,
    #[error("bad recurrence literal {0:?}: expected `p,q,r;a,b,c` or a family name")]
    Parse(String),
}

/// The six rationals `(p, q, r; a, b, c)` defining a sequence. `c` is never
/// zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    p: Rational,
    q: Rational,
    r: Rational,
    a: Rational,
    b: Rational,
    c: Rational,
}

impl RecurrenceSpec {
    pub fn new(p: Rational, q: Rational, r: Rational, a: Rational, b: Rational, c: Rational) -> Result<Self, SpecError> {
        if c.is_zero() {
            return Err(SpecError::ZeroC);
        }
        Ok(RecurrenceSpec { p, q, r, a, b, c })
    }

    /// Integer-coefficient shorthand.
    pub fn from_ints(p: i64, q: i64, r: i64, a: i64, b: i64, c: i64) -> Result<Self, SpecError> {
        Self::new(integer(p), integer(q), integer(r), integer(a), integer(b), integer(c))
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }
    pub fn q(&self) -> &Rational {
        &self.q
    }
    pub fn r(&self) -> &Rational {
        &self.r
    }
    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// `(q^2 - apq) x^2 + (2qr - apr - bpq) x + (r^2 - bpr - cp^2)`.
    pub fn discriminant(&self) -> Polynomial {
        let RecurrenceSpec { p, q, r, a, b, c } = self;
        let two = integer(2);
        Polynomial::from_coeffs(vec![
            r * r - b * p * r - c * p * p,
            &two * q * r - a * p * r - b * p * q,
            q * q - a * p * q,
        ])
    }

    /// The companion spec `(0, 0, 1; a, b, c)`, whose sequence starts 0, 1.
    pub fn companion(&self) -> RecurrenceSpec {
        RecurrenceSpec {
            p: Rational::zero(),
            q: Rational::zero(),
            r: integer(1),
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    pub fn same_recurrence(&self, other: &RecurrenceSpec) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{};{},{},{}", self.p, self.q, self.r, self.a, self.b, self.c)
    }
}

impl fmt::Debug for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RecurrenceSpec({self})")
    }
}

impl Serialize for RecurrenceSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_list(s: &str, expected: usize, whole: &str) -> Result<Vec<Rational>, SpecError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != expected {
        return Err(SpecError::Parse(whole.to_string()));
    }
    parts
        .into_iter()
        .map(|v| parse_rational(v).map_err(|_| SpecError::Parse(whole.to_string())))
        .collect()
}

impl FromStr for RecurrenceSpec {
    type Err = SpecError;

    /// Accepts `p,q,r;a,b,c` and every [`NamedFamily`] shorthand.
    fn from_str(s: &str) -> Result<Self, SpecError> {
        Ok(s.parse::<NamedFamily>()?.spec())
    }
}

/// The sequence families singled out by name, plus arbitrary specs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum NamedFamily {
    Fibonacci,
    Lucas,
    ChebyshevT,
    ChebyshevS,
    /// `(0, 0, 1; a, b, c)`.
    CompanionU { a: Rational, b: Rational, c: Rational },
    /// `(1, q, r; 1, b, c)` with `q != 0` and `c != 0`.
    Favard { q: Rational, r: Rational, b: Rational, c: Rational },
    Custom(RecurrenceSpec),
}

impl NamedFamily {
    pub fn companion_u(a: Rational, b: Rational, c: Rational) -> Result<Self, SpecError> {
        if c.is_zero() {
            return Err(SpecError::ZeroC);
        }
        Ok(NamedFamily::CompanionU { a, b, c })
    }

    pub fn favard(q: Rational, r: Rational, b: Rational, c: Rational) -> Result<Self, SpecError> {
        if c.is_zero() {
            return Err(SpecError::ZeroC);
        }
        if q.is_zero() {
            return Err(SpecError::ZeroQ);
        }
        Ok(NamedFamily::Favard { q, r, b, c })
    }

    pub fn spec(&self) -> RecurrenceSpec {
        let ints = |v: [i64; 6]| RecurrenceSpec::from_ints(v[0], v[1], v[2], v[3], v[4], v[5]).expect("c is nonzero");
        match self {
            NamedFamily::Fibonacci => ints([0, 0, 1, 1, 0, 1]),
            NamedFamily::Lucas => ints([2, 1, 0, 1, 0, 1]),
            NamedFamily::ChebyshevT => ints([1, 1, 0, 2, 0, -1]),
            NamedFamily::ChebyshevS => ints([1, 2, 0, 2, 0, -1]),
            NamedFamily::CompanionU { a, b, c } => RecurrenceSpec {
                p: Rational::zero(),
                q: Rational::zero(),
                r: integer(1),
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
            },
            NamedFamily::Favard { q, r, b, c } => RecurrenceSpec {
                p: integer(1),
                q: q.clone(),
                r: r.clone(),
                a: integer(1),
                b: b.clone(),
                c: c.clone(),
            },
            NamedFamily::Custom(spec) => spec.clone(),
        }
    }

    /// Short label used in reports and on the command line.
    pub fn label(&self) -> String {
        match self {
            NamedFamily::Fibonacci => "fib".into(),
            NamedFamily::Lucas => "lucas".into(),
            NamedFamily::ChebyshevT => "chebT".into(),
            NamedFamily::ChebyshevS => "chebS".into(),
            NamedFamily::CompanionU { a, b, c } => format!("companion:{a},{b},{c}"),
            NamedFamily::Favard { q, r, b, c } => format!("favard:{q},{r},{b},{c}"),
            NamedFamily::Custom(spec) => spec.to_string(),
        }
    }

    /// The sequence `U` with `U_0 = 0`, `U_1 = 1` sharing this family's
    /// recurrence. The Chebyshev families read it off the second-kind
    /// sequence through `U_n = S_{n-1}`.
    pub fn companion(&self) -> Companion {
        match self {
            NamedFamily::ChebyshevT | NamedFamily::ChebyshevS => {
                Companion::shifted(Arc::new(PolySequence::new(NamedFamily::ChebyshevS.spec())), -1)
            }
            NamedFamily::Fibonacci | NamedFamily::Lucas => {
                Companion::shifted(Arc::new(PolySequence::new(NamedFamily::Fibonacci.spec())), 0)
            }
            other => Companion::of(&other.spec()),
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for NamedFamily {
    type Err = SpecError;

    fn from_str(input: &str) -> Result<Self, SpecError> {
        let s = input.trim();
        match s {
            "fib" => return Ok(NamedFamily::Fibonacci),
            "lucas" => return Ok(NamedFamily::Lucas),
            "chebT" => return Ok(NamedFamily::ChebyshevT),
            "chebS" => return Ok(NamedFamily::ChebyshevS),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("favard:") {
            let v = parse_list(rest, 4, input)?;
            let [q, r, b, c]: [Rational; 4] = v.try_into().expect("length checked");
            return NamedFamily::favard(q, r, b, c);
        }
        if let Some(rest) = s.strip_prefix("companion:") {
            let v = parse_list(rest, 3, input)?;
            let [a, b, c]: [Rational; 3] = v.try_into().expect("length checked");
            return NamedFamily::companion_u(a, b, c);
        }
        let (init, rec) = s.split_once(';').ok_or_else(|| SpecError::Parse(input.to_string()))?;
        let init = parse_list(init, 3, input)?;
        let rec = parse_list(rec, 3, input)?;
        let [p, q, r]: [Rational; 3] = init.try_into().expect("length checked");
        let [a, b, c]: [Rational; 3] = rec.try_into().expect("length checked");
        Ok(NamedFamily::Custom(RecurrenceSpec::new(p, q, r, a, b, c)?))
    }
}

#[derive(Default)]
struct Terms {
    /// `P_0, P_1, ...`
    forward: Vec<Polynomial>,
    /// `P_{-1}, P_{-2}, ...`
    backward: Vec<Polynomial>,
}

/// Memoized evaluator `n -> P_n` over all integers. Safe to share between
/// threads; the cache extends lazily in either direction.
pub struct PolySequence {
    spec: RecurrenceSpec,
    step: Polynomial,
    c: Polynomial,
    c_inv: Rational,
    terms: Mutex<Terms>,
}

impl PolySequence {
    pub fn new(spec: RecurrenceSpec) -> Self {
        let p0 = Polynomial::constant(spec.p.clone());
        let p1 = Polynomial::linear(spec.q.clone(), spec.r.clone());
        PolySequence {
            step: Polynomial::linear(spec.a.clone(), spec.b.clone()),
            c: Polynomial::constant(spec.c.clone()),
            c_inv: spec.c.recip(),
            terms: Mutex::new(Terms {
                forward: vec![p0, p1],
                backward: Vec::new(),
            }),
            spec,
        }
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    pub fn term(&self, n: i64) -> Polynomial {
        let mut terms = self.terms.lock().expect("sequence cache poisoned");
        if n >= 0 {
            let idx = n as usize;
            while terms.forward.len() <= idx {
                let len = terms.forward.len();
                let next = &(&self.step * &terms.forward[len - 1]) + &(&self.c * &terms.forward[len - 2]);
                terms.forward.push(next);
            }
            terms.forward[idx].clone()
        } else {
            let idx = (-n - 1) as usize;
            while terms.backward.len() <= idx {
                // P_k = (P_{k+2} - (a x + b) P_{k+1}) / c
                let k = -(terms.backward.len() as i64) - 1;
                let next = {
                    let at = |j: i64| -> &Polynomial {
                        if j >= 0 {
                            &terms.forward[j as usize]
                        } else {
                            &terms.backward[(-j - 1) as usize]
                        }
                    };
                    (at(k + 2) - &(&self.step * at(k + 1))).scale(&self.c_inv)
                };
                terms.backward.push(next);
            }
            terms.backward[idx].clone()
        }
    }

    /// `P_n P_{n+1} ... P_{n+m-1}`; the empty product is 1.
    pub fn rising_power(&self, n: i64, m: usize) -> Polynomial {
        (0..m as i64).map(|t| self.term(n + t)).product()
    }

    /// `P_n` evaluated at `point`.
    pub fn specialize(&self, point: &Rational, n: i64) -> Rational {
        self.term(n).eval(point)
    }
}

impl fmt::Debug for PolySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolySequence").field("spec", &self.spec).finish_non_exhaustive()
    }
}

/// Access to a companion sequence `U` (with `U_0 = 0`, `U_1 = 1`) through an
/// index shift, `U_n = seq_{n + shift}`.
#[derive(Clone, Debug)]
pub struct Companion {
    seq: Arc<PolySequence>,
    shift: i64,
}

impl Companion {
    /// The companion `(0, 0, 1; a, b, c)` of `spec`.
    pub fn of(spec: &RecurrenceSpec) -> Self {
        Companion {
            seq: Arc::new(PolySequence::new(spec.companion())),
            shift: 0,
        }
    }

    pub fn shifted(seq: Arc<PolySequence>, shift: i64) -> Self {
        Companion { seq, shift }
    }

    pub fn term(&self, n: i64) -> Polynomial {
        self.seq.term(n + self.shift)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn fib() -> PolySequence {
        PolySequence::new(NamedFamily::Fibonacci.spec())
    }

    #[test]
    fn fibonacci_terms() {
        let f = fib();
        assert_eq!(f.term(4), p(&[0, 2, 0, 1]));
        assert_eq!(f.term(-1), p(&[1]));
        assert_eq!(f.term(-2), p(&[0, -1]));
        assert_eq!(f.term(0), Polynomial::zero());
        assert_eq!(f.term(1), p(&[1]));
    }

    #[test]
    fn base_cases_follow_the_spec() {
        let spec = RecurrenceSpec::new(rational(3, 2), integer(-2), rational(1, 3), integer(1), integer(4), integer(5)).unwrap();
        let s = PolySequence::new(spec);
        assert_eq!(s.term(0), Polynomial::constant(rational(3, 2)));
        assert_eq!(s.term(1), Polynomial::linear(integer(-2), rational(1, 3)));
    }

    #[test]
    fn printed_discriminants() {
        assert_eq!(NamedFamily::Fibonacci.spec().discriminant(), p(&[1]));
        assert_eq!(NamedFamily::Lucas.spec().discriminant(), p(&[-4, 0, -1]));
        assert_eq!(NamedFamily::ChebyshevT.spec().discriminant(), p(&[1, 0, -1]));
        // the second-kind family has discriminant 1, not -2x^2 + 1
        assert_eq!(NamedFamily::ChebyshevS.spec().discriminant(), p(&[1]));
    }

    #[test]
    fn rising_powers() {
        let f = fib();
        assert_eq!(f.rising_power(1, 3), p(&[0, 1, 0, 1]));
        assert_eq!(f.rising_power(7, 0), Polynomial::one());
        assert_eq!(f.rising_power(0, 2), Polynomial::zero());
    }

    #[test]
    fn integer_specializations() {
        let f = fib();
        let at = |s: &PolySequence, x: i64, n: i64| s.specialize(&integer(x), n);
        let fib_numbers: Vec<_> = (0..=6).map(|n| at(&f, 1, n)).collect();
        assert_eq!(fib_numbers, [0, 1, 1, 2, 3, 5, 8].map(integer));
        let pell: Vec<_> = (0..=5).map(|n| at(&f, 2, n)).collect();
        assert_eq!(pell, [0, 1, 2, 5, 12, 29].map(integer));
        let lucas = PolySequence::new(NamedFamily::Lucas.spec());
        let lucas_numbers: Vec<_> = (0..=5).map(|n| at(&lucas, 1, n)).collect();
        assert_eq!(lucas_numbers, [2, 1, 3, 4, 7, 11].map(integer));
    }

    #[test]
    fn family_literals() {
        assert_eq!("0,0,1;1,0,1".parse::<RecurrenceSpec>().unwrap(), NamedFamily::Fibonacci.spec());
        assert_eq!("chebT".parse::<NamedFamily>().unwrap(), NamedFamily::ChebyshevT);
        assert_eq!("1/2,0,1;1,0,-1/3".parse::<RecurrenceSpec>().unwrap().to_string(), "1/2,0,1;1,0,-1/3");
        assert_eq!("0,0,1;1,0,0".parse::<RecurrenceSpec>(), Err(SpecError::ZeroC));
        assert!("0,0;1,0,1".parse::<RecurrenceSpec>().is_err());
        assert_eq!("favard:0,1,1,1".parse::<NamedFamily>(), Err(SpecError::ZeroQ));
        assert_eq!("favard:2,1,1,-1".parse::<NamedFamily>().unwrap().spec().to_string(), "1,2,1;1,1,-1");
        assert_eq!(NamedFamily::favard(integer(1), integer(0), integer(0), integer(0)), Err(SpecError::ZeroC));
    }

    fn pool() -> Vec<RecurrenceSpec> {
        vec![
            NamedFamily::Fibonacci.spec(),
            NamedFamily::Lucas.spec(),
            NamedFamily::ChebyshevT.spec(),
            NamedFamily::ChebyshevS.spec(),
            "1/2,-2/3,3;3/2,-1,2/3".parse().unwrap(),
            "1,1,2;1,3,-2".parse().unwrap(),
            "-3,0,1/5;0,7,-1/2".parse().unwrap(),
        ]
    }

    #[test]
    fn recurrence_holds_in_both_directions() {
        for spec in pool() {
            let s = PolySequence::new(spec.clone());
            let step = Polynomial::linear(spec.a().clone(), spec.b().clone());
            let c = Polynomial::constant(spec.c().clone());
            for n in -10..=10 {
                assert_eq!(s.term(n + 2), &(&step * &s.term(n + 1)) + &(&c * &s.term(n)), "{spec} at n={n}");
            }
        }
    }

    #[test]
    fn backward_then_forward_agrees() {
        for spec in pool() {
            let s = PolySequence::new(spec.clone());
            let (m5, m4) = (s.term(-5), s.term(-4));
            let step = Polynomial::linear(spec.a().clone(), spec.b().clone());
            let c = Polynomial::constant(spec.c().clone());
            let (mut prev, mut cur) = (m5, m4);
            for _ in -4..5 {
                let next = &(&step * &cur) + &(&c * &prev);
                prev = cur;
                cur = next;
            }
            assert_eq!(cur, s.term(5));
        }
    }

    #[test]
    fn discriminant_matches_first_terms() {
        for spec in pool() {
            let s = PolySequence::new(spec.clone());
            assert_eq!(spec.discriminant(), &s.term(1).pow(2) - &(&s.term(0) * &s.term(2)));
        }
    }

    #[test]
    fn companion_starts_at_zero_one() {
        for spec in pool() {
            let u = Companion::of(&spec);
            assert_eq!(u.term(0), Polynomial::zero());
            assert_eq!(u.term(1), Polynomial::one());
        }
    }

    #[test]
    fn chebyshev_companion_is_shifted_second_kind() {
        let u = PolySequence::new(NamedFamily::companion_u(integer(2), integer(0), integer(-1)).unwrap().spec());
        let s = PolySequence::new(NamedFamily::ChebyshevS.spec());
        let via_family = NamedFamily::ChebyshevT.companion();
        for n in -5..=10 {
            assert_eq!(u.term(n), s.term(n - 1));
            assert_eq!(via_family.term(n), u.term(n));
        }
    }

    #[test]
    fn shared_sequence_across_threads() {
        let f = Arc::new(fib());
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let f = Arc::clone(&f);
                std::thread::spawn(move || f.term(if t % 2 == 0 { 15 } else { -15 }))
            })
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got[0], fib().term(15));
        assert_eq!(got[1], fib().term(-15));
    }
}
