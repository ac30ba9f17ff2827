//! Sweeps over parameter grids, the corollary families, and adjudication of
//! competing readings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::check::{catalan, check, corollary1_j, corollary1_sij, CheckOptions, DetTheorem};
use super::lemmas::{lemma1_check, lemma25_check, lemma2_check, lemma3_check};
use super::sampling::{random_poly, random_poly_matrix, random_profile, random_rat_matrix, random_ratfun};
use super::{IdentityError, Params, Status, Subject, Thm4Variant, Verdict};
use crate::exact::{rational, Polynomial, RationalFunction};
use crate::matrix::{IdentityCase, IndexProfile};
use crate::sequences::{NamedFamily, RecurrenceSpec};

/// How product-matrix profiles are chosen at each grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileStrategy {
    /// `None` means `d = (0, ..., 0)`, `e = (1, ..., 1)` for every `m`. A
    /// given profile is used only at points whose `m` equals its length.
    Fixed(Option<IndexProfile>),
    /// `count` profiles per point, entries uniform in `[-bound, bound]`.
    Random { count: usize, bound: i64 },
}

impl Default for ProfileStrategy {
    fn default() -> Self {
        ProfileStrategy::Fixed(None)
    }
}

impl ProfileStrategy {
    fn profiles<R: Rng>(&self, m: usize, rng: &mut R) -> Vec<IndexProfile> {
        match self {
            ProfileStrategy::Fixed(None) => vec![IndexProfile::new(vec![0; m], vec![1; m]).expect("m >= 1")],
            ProfileStrategy::Fixed(Some(p)) if p.len() == m => vec![p.clone()],
            ProfileStrategy::Fixed(Some(_)) => Vec::new(),
            ProfileStrategy::Random { count, bound } => (0..*count).map(|_| random_profile(rng, m, *bound)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub s: Vec<i64>,
    pub k: Vec<i64>,
    pub n: Vec<i64>,
    pub m: Vec<usize>,
    /// Rising-power sizes; `None` means `1..=m+1` at each `m`.
    pub d: Option<Vec<usize>>,
    pub profiles: ProfileStrategy,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            s: (-3..=3).collect(),
            k: (-2..=2).collect(),
            n: (-3..=3).collect(),
            m: vec![1, 2, 3],
            d: None,
            profiles: ProfileStrategy::default(),
        }
    }
}

impl Grid {
    fn sizes(&self, m: usize) -> Vec<usize> {
        match &self.d {
            Some(ds) => ds.iter().copied().filter(|&d| d >= 1 && d <= m + 1).collect(),
            None => (1..=m + 1).collect(),
        }
    }

    fn windows(&self) -> impl Iterator<Item = (i64, i64, i64, usize)> + '_ {
        self.s.iter().flat_map(move |&s| {
            self.k
                .iter()
                .flat_map(move |&k| self.n.iter().flat_map(move |&n| self.m.iter().map(move |&m| (s, k, n, m))))
        })
    }
}

/// Runs one determinant family over a grid. Grid order is deterministic, and
/// random profiles are drawn in that order.
pub fn determinant_suite<R: Rng>(theorem: DetTheorem, subject: &Subject, grid: &Grid, opts: &CheckOptions, rng: &mut R) -> Vec<Verdict> {
    let mut out = Vec::new();
    match theorem {
        DetTheorem::Rising(_) => {
            for &n in &grid.n {
                for &m in &grid.m {
                    for d in grid.sizes(m) {
                        out.push(check(theorem, subject, &IdentityCase::new(0, 1, n, m).with_d(d), opts));
                    }
                }
            }
        }
        DetTheorem::Product => {
            for (s, k, n, m) in grid.windows() {
                for profile in grid.profiles.profiles(m, rng) {
                    out.push(check(theorem, subject, &IdentityCase::new(s, k, n, m).with_profile(profile), opts));
                }
            }
        }
        DetTheorem::Power | DetTheorem::Reciprocal => {
            for (s, k, n, m) in grid.windows() {
                out.push(check(theorem, subject, &IdentityCase::new(s, k, n, m), opts));
            }
        }
    }
    out
}

/// A second sequence on the same recurrence: `(1, -2, 1/2; a, b, c)`.
fn partner(subject: &Subject) -> Subject {
    let spec = subject.spec();
    let q = RecurrenceSpec::new(rational(1, 1), rational(-2, 1), rational(1, 2), spec.a().clone(), spec.b().clone(), spec.c().clone())
        .expect("q and c are nonzero");
    Subject::from_spec(q)
}

/// The scalar identities over `s, i, j` in `range`: Catalan with `Q = P` and
/// with a second sequence on the same recurrence, plus both discriminant
/// forms.
pub fn catalan_suite(subject: &Subject, range: &[i64], opts: &CheckOptions) -> Vec<Verdict> {
    let other = partner(subject);
    let mut out = Vec::new();
    for &j in range {
        out.push(corollary1_j(subject, j, opts));
    }
    for &s in range {
        for &i in range {
            for &j in range {
                out.push(catalan(subject, subject, s, i, j, opts).expect("same recurrence"));
                out.push(catalan(subject, &other, s, i, j, opts).expect("same recurrence"));
                out.push(corollary1_sij(subject, s, i, j, opts));
            }
        }
    }
    out
}

/// The corollaries that specialize the determinant theorems to one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corollary {
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl Corollary {
    pub const ALL: [Corollary; 5] = [Corollary::C2, Corollary::C3, Corollary::C4, Corollary::C5, Corollary::C6];

    pub fn name(self) -> &'static str {
        match self {
            Corollary::C2 => "C2",
            Corollary::C3 => "C3",
            Corollary::C4 => "C4",
            Corollary::C5 => "C5",
            Corollary::C6 => "C6",
        }
    }

    fn expected(self) -> &'static str {
        match self {
            Corollary::C2 => "fib",
            Corollary::C3 => "lucas",
            Corollary::C4 => "chebT",
            Corollary::C5 => "chebS",
            Corollary::C6 => "favard:q,r,b,c",
        }
    }

    /// The corollary stated for `family`, if any.
    pub fn for_family(family: &NamedFamily) -> Option<Corollary> {
        match family {
            NamedFamily::Fibonacci => Some(Corollary::C2),
            NamedFamily::Lucas => Some(Corollary::C3),
            NamedFamily::ChebyshevT => Some(Corollary::C4),
            NamedFamily::ChebyshevS => Some(Corollary::C5),
            NamedFamily::Favard { .. } => Some(Corollary::C6),
            _ => None,
        }
    }

    /// Whether the printed discriminant can differ from the derived one.
    pub fn has_printed_constant(self) -> bool {
        matches!(self, Corollary::C5 | Corollary::C6)
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Corollary {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Corollary::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown corollary {s:?} (expected C2..C6)"))
    }
}

/// The discriminant as it appears in the corollary's statement. For C2-C4 it
/// agrees with the derived one. C5 prints `-2x^2 + 1`; C6 prints
/// `(q^2 - q)x^2 + (qr - r - bq)x + (r^2 - br - c)`.
pub fn printed_discriminant(corollary: Corollary, spec: &RecurrenceSpec) -> Polynomial {
    match corollary {
        Corollary::C2 | Corollary::C3 | Corollary::C4 => spec.discriminant(),
        Corollary::C5 => Polynomial::from_ints(&[1, 0, -2]),
        Corollary::C6 => {
            let (q, r, b, c) = (spec.q(), spec.r(), spec.b(), spec.c());
            Polynomial::from_coeffs(vec![r * r - b * r - c, q * r - r - b * q, q * q - q])
        }
    }
}

fn expect_mismatch(mut v: Verdict) -> Verdict {
    if v.status == Status::Unequal {
        v.status = Status::ExpectedMismatch;
    }
    v
}

/// Runs the four determinant shapes of a corollary through the general
/// closed forms. Theorem tags read `C5:2`, `C5:3`, `C5:3.5`, `C5:4`. For C5
/// and C6 every point is also evaluated with the printed discriminant, under
/// variant `printed` (mismatches there are expected); the derived runs carry
/// variant `derived`.
///
/// C6 states its first, second and fourth identities for `s = 0`, `k = 1`,
/// `n >= 0` only; the third uses the grid's `s` and `k`. Its `n` range is
/// clipped to `n >= 0` throughout.
pub fn corollary_suite<R: Rng>(
    which: Corollary,
    subject: &Subject,
    grid: &Grid,
    opts: &CheckOptions,
    rng: &mut R,
) -> Result<Vec<Verdict>, IdentityError> {
    if Corollary::for_family(subject.family()) != Some(which) {
        return Err(IdentityError::FamilyMismatch {
            which: which.name().into(),
            expected: which.expected(),
            got: subject.label(),
        });
    }
    let mut narrow = grid.clone();
    if which == Corollary::C6 {
        narrow.n.retain(|&n| n >= 0);
    }
    let mut fixed = narrow.clone();
    if which == Corollary::C6 {
        fixed.s = vec![0];
        fixed.k = vec![1];
    }

    let mut subjects = vec![(subject.clone(), None)];
    if which.has_printed_constant() {
        subjects[0].1 = Some("derived");
        subjects.push((subject.with_discriminant(printed_discriminant(which, subject.spec())), Some("printed")));
    }
    let shapes = [
        (DetTheorem::Power, &fixed),
        (DetTheorem::Product, &fixed),
        (DetTheorem::Reciprocal, &narrow),
        (DetTheorem::Rising(Thm4Variant::Corrected), &fixed),
    ];
    let mut out = Vec::new();
    for (theorem, g) in shapes {
        // profiles are shared between the derived and printed runs
        if theorem == DetTheorem::Product && matches!(g.profiles, ProfileStrategy::Random { .. }) {
            let mut table = Vec::new();
            for (_, _, _, m) in g.windows() {
                table.push(g.profiles.profiles(m, rng));
            }
            for (subj, variant) in &subjects {
                let mut it = table.iter();
                for (s, k, n, m) in g.windows() {
                    for profile in it.next().expect("one entry per window") {
                        let case = IdentityCase::new(s, k, n, m).with_profile(profile.clone());
                        out.push(tag(which, theorem, check(theorem, subj, &case, opts), *variant));
                    }
                }
            }
            continue;
        }
        for (subj, variant) in &subjects {
            for v in determinant_suite(theorem, subj, g, opts, rng) {
                out.push(tag(which, theorem, v, *variant));
            }
        }
    }
    Ok(out)
}

fn tag(which: Corollary, theorem: DetTheorem, mut v: Verdict, variant: Option<&str>) -> Verdict {
    v.theorem = format!("{}:{}", which.name(), theorem.tag());
    v.variant = variant.map(str::to_string);
    if variant == Some("printed") {
        v = expect_mismatch(v);
    }
    v
}

/// Which of two readings the engine determinants support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Support {
    /// No nondegenerate comparisons were made.
    NoEvidence,
    Both,
    Neither,
    /// Only this variant matches at every nondegenerate point.
    Only(String),
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Support::NoEvidence => f.write_str("none"),
            Support::Both => f.write_str("both"),
            Support::Neither => f.write_str("neither"),
            Support::Only(v) => f.write_str(v),
        }
    }
}

/// Compares variants `a` and `b` over the verdicts selected by `filter`,
/// ignoring errors and points where the determinant is zero.
pub fn adjudicate(verdicts: &[Verdict], filter: impl Fn(&Verdict) -> bool, a: &str, b: &str) -> Support {
    let holds = |variant: &str| -> Option<bool> {
        let mut seen = false;
        let mut all = true;
        for v in verdicts.iter().filter(|v| filter(v) && v.variant.as_deref() == Some(variant)) {
            if v.status == Status::Error || v.lhs_is_zero() {
                continue;
            }
            seen = true;
            all &= v.equal;
        }
        seen.then_some(all)
    };
    match (holds(a), holds(b)) {
        (None, None) => Support::NoEvidence,
        (Some(true), Some(true)) => Support::Both,
        (Some(true), _) => Support::Only(a.to_string()),
        (_, Some(true)) => Support::Only(b.to_string()),
        _ => Support::Neither,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaKind {
    Lemma1,
    Lemma2,
    Lemma25,
    /// Desnanot-Jacobi on random matrices of sizes 3 to 6.
    Lemma3,
}

impl FromStr for LemmaKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" => Ok(LemmaKind::Lemma1),
            "2" => Ok(LemmaKind::Lemma2),
            "2.5" => Ok(LemmaKind::Lemma25),
            "3" => Ok(LemmaKind::Lemma3),
            _ => Err(format!("unknown lemma {s:?} (expected 1, 2, 2.5 or 3)")),
        }
    }
}

const DEG: usize = 2;
const BOUND: i64 = 3;

/// `count` random instances with `m` in `1..=3`, entries of degree at most
/// 2 with coefficients in `[-3, 3]`. Lemma 3 alternates polynomial and
/// rational-function matrices.
pub fn lemma_suite<R: Rng>(kind: LemmaKind, count: usize, opts: &CheckOptions, rng: &mut R) -> Vec<Verdict> {
    (0..count)
        .map(|t| {
            let result = match kind {
                LemmaKind::Lemma1 => {
                    let m = rng.gen_range(1..=3);
                    let a = ratfuns(rng, m + 1);
                    let b = polys(rng, m + 1);
                    let c = ratfuns(rng, m + 1);
                    let d = polys(rng, m + 1);
                    lemma1_check(&a, &b, &c, &d, m, opts)
                }
                LemmaKind::Lemma2 => {
                    let m = rng.gen_range(1..=3);
                    let profile = random_profile(rng, m, BOUND);
                    let mut a = BTreeMap::new();
                    let mut c = BTreeMap::new();
                    for &idx in profile.d_seq().iter().chain(profile.e_seq()) {
                        if let std::collections::btree_map::Entry::Vacant(slot) = a.entry(idx) {
                            slot.insert(random_ratfun(rng, DEG, BOUND));
                            c.insert(idx, random_ratfun(rng, DEG, BOUND));
                        }
                    }
                    let b = polys(rng, m + 1);
                    let d = polys(rng, m + 1);
                    lemma2_check(&a, &b, &c, &d, &profile, m, opts)
                }
                LemmaKind::Lemma25 => {
                    let m = rng.gen_range(1..=3);
                    loop {
                        let a = polys(rng, m + 1);
                        let b = polys(rng, m + 1);
                        let c = ratfuns(rng, m + 1);
                        let d = ratfuns(rng, m + 1);
                        match lemma25_check(&a, &b, &c, &d, m, opts) {
                            Err(IdentityError::ZeroDenominator(_)) => continue,
                            other => break other,
                        }
                    }
                }
                LemmaKind::Lemma3 => {
                    let size = rng.gen_range(3..=6);
                    if t % 2 == 0 {
                        lemma3_check(&random_poly_matrix(rng, size, DEG, BOUND))
                    } else {
                        lemma3_check(&random_rat_matrix(rng, size, 1, BOUND))
                    }
                }
            };
            result.unwrap_or_else(|e| Verdict::new(lemma_tag(kind), "generic", Params::default()).failed(e))
        })
        .collect()
}

fn lemma_tag(kind: LemmaKind) -> &'static str {
    match kind {
        LemmaKind::Lemma1 => "lemma1",
        LemmaKind::Lemma2 => "lemma2",
        LemmaKind::Lemma25 => "lemma2.5",
        LemmaKind::Lemma3 => "lemma3",
    }
}

fn polys<R: Rng>(rng: &mut R, len: usize) -> Vec<Polynomial> {
    (0..len).map(|_| random_poly(rng, DEG, BOUND)).collect()
}

fn ratfuns<R: Rng>(rng: &mut R, len: usize) -> Vec<RationalFunction> {
    (0..len).map(|_| random_ratfun(rng, DEG, BOUND)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::sampling::seeded;

    fn small() -> Grid {
        Grid {
            s: vec![-1, 0, 1],
            k: vec![-1, 0, 2],
            n: vec![-1, 1],
            m: vec![1, 2],
            d: None,
            profiles: ProfileStrategy::Random { count: 2, bound: 3 },
        }
    }

    fn no_failures(vs: &[Verdict]) {
        for v in vs {
            assert!(!v.is_failure(), "{v:?}");
        }
    }

    #[test]
    fn suites_pass_on_named_families() {
        let mut rng = seeded(3);
        for family in [NamedFamily::Fibonacci, NamedFamily::ChebyshevS] {
            let subject = Subject::new(family);
            for theorem in [DetTheorem::Power, DetTheorem::Product, DetTheorem::Reciprocal, DetTheorem::Rising(Thm4Variant::Corrected)] {
                let vs = determinant_suite(theorem, &subject, &small(), &CheckOptions::default(), &mut rng);
                assert!(!vs.is_empty());
                no_failures(&vs);
                assert!(vs.iter().all(|v| v.status != Status::ExpectedMismatch));
            }
        }
    }

    #[test]
    fn zero_k_is_degenerate() {
        let grid = Grid {
            k: vec![0],
            ..small()
        };
        let vs = determinant_suite(DetTheorem::Power, &Subject::new(NamedFamily::Lucas), &grid, &CheckOptions::default(), &mut seeded(0));
        assert!(vs.iter().all(|v| v.status == Status::DegenerateOk));
    }

    #[test]
    fn fixed_profile_only_at_its_size() {
        let prof = IndexProfile::new(vec![0, 1], vec![2, -1]).unwrap();
        let grid = Grid {
            profiles: ProfileStrategy::Fixed(Some(prof.clone())),
            ..small()
        };
        let vs = determinant_suite(DetTheorem::Product, &Subject::new(NamedFamily::Lucas), &grid, &CheckOptions::default(), &mut seeded(0));
        assert_eq!(vs.len(), 9 * 2);
        assert!(vs.iter().all(|v| v.params.d_seq.as_deref() == Some(prof.d_seq())));
    }

    #[test]
    fn catalan_suite_is_clean() {
        let vs = catalan_suite(&Subject::new(NamedFamily::ChebyshevT), &[-1, 0, 2], &CheckOptions::default());
        assert_eq!(vs.len(), 3 + 27 * 3);
        no_failures(&vs);
        assert!(vs.iter().any(|v| v.family.contains(" x ")));
    }

    #[test]
    fn corollary_family_must_match() {
        let err = corollary_suite(Corollary::C3, &Subject::new(NamedFamily::Fibonacci), &small(), &CheckOptions::default(), &mut seeded(0));
        assert!(matches!(err, Err(IdentityError::FamilyMismatch { .. })));
    }

    #[test]
    fn chebyshev_s_constant() {
        let subject = Subject::new(NamedFamily::ChebyshevS);
        assert_eq!(subject.delta(), &Polynomial::from_ints(&[1]));
        let vs = corollary_suite(Corollary::C5, &subject, &small(), &CheckOptions::default(), &mut seeded(9)).unwrap();
        no_failures(&vs);
        let support = adjudicate(&vs, |v| v.theorem.starts_with("C5:"), "derived", "printed");
        assert_eq!(support, Support::Only("derived".into()));
        assert!(vs.iter().any(|v| v.status == Status::ExpectedMismatch));
    }

    #[test]
    fn favard_printed_term_differs_only_with_r() {
        let with_r = NamedFamily::favard(rational(2, 1), rational(1, 1), rational(1, 1), rational(-1, 1)).unwrap();
        let spec = with_r.spec();
        assert_ne!(printed_discriminant(Corollary::C6, &spec), spec.discriminant());
        let without = NamedFamily::favard(rational(2, 1), rational(0, 1), rational(1, 1), rational(-1, 1)).unwrap();
        assert_eq!(printed_discriminant(Corollary::C6, &without.spec()), without.spec().discriminant());

        let grid = Grid {
            n: vec![-1, 0, 2],
            ..small()
        };
        let vs = corollary_suite(Corollary::C6, &Subject::new(with_r), &grid, &CheckOptions::default(), &mut seeded(2)).unwrap();
        no_failures(&vs);
        assert!(vs.iter().all(|v| v.params.n.unwrap() >= 0));
        assert!(vs.iter().filter(|v| v.theorem == "C6:2").all(|v| v.params.s == Some(0) && v.params.k == Some(1)));
        assert!(vs.iter().any(|v| v.theorem == "C6:3.5" && v.params.k == Some(2)));
        assert_eq!(adjudicate(&vs, |v| v.theorem.starts_with("C6:"), "derived", "printed"), Support::Only("derived".into()));
    }

    #[test]
    fn adjudication_outcomes() {
        let mk = |variant: &str, equal: bool| {
            let rhs = if equal { 1 } else { 2 };
            Verdict::new("4", "fib", Params::default())
                .variant(variant)
                .compare(Polynomial::from_ints(&[1]).into(), Polynomial::from_ints(&[rhs]).into(), false)
        };
        let all = |_: &Verdict| true;
        assert_eq!(adjudicate(&[], all, "a", "b"), Support::NoEvidence);
        assert_eq!(adjudicate(&[mk("a", true), mk("b", true)], all, "a", "b"), Support::Both);
        assert_eq!(adjudicate(&[mk("a", true), mk("b", false)], all, "a", "b"), Support::Only("a".into()));
        assert_eq!(adjudicate(&[mk("a", false), mk("b", false)], all, "a", "b"), Support::Neither);
    }

    #[test]
    fn lemma_suites_are_clean() {
        let mut rng = seeded(5);
        for kind in [LemmaKind::Lemma1, LemmaKind::Lemma2, LemmaKind::Lemma25, LemmaKind::Lemma3] {
            let vs = lemma_suite(kind, 6, &CheckOptions::default(), &mut rng);
            assert_eq!(vs.len(), 6);
            for v in &vs {
                assert!(v.equal, "{v:?}");
            }
        }
    }
}
