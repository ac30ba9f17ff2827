//! Seeded random inputs for sweeps and tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{rational, Polynomial, Rational, RationalFunction};
use crate::matrix::{IndexProfile, Matrix};
use crate::sequences::RecurrenceSpec;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A fraction with numerator in `[-bound, bound]` and denominator in `[1, den]`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64, den: i64) -> Rational {
    rational(rng.gen_range(-bound..=bound), rng.gen_range(1..=den))
}

/// A spec with entries from [`random_rational`]`(3, 3)`, redrawn until `c` is nonzero.
pub fn random_spec<R: Rng>(rng: &mut R) -> RecurrenceSpec {
    loop {
        let mut v = || random_rational(rng, 3, 3);
        let (p, q, r, a, b, c) = (v(), v(), v(), v(), v(), v());
        if let Ok(spec) = RecurrenceSpec::new(p, q, r, a, b, c) {
            return spec;
        }
    }
}

pub fn random_profile<R: Rng>(rng: &mut R, m: usize, bound: i64) -> IndexProfile {
    let mut draw = |_| rng.gen_range(-bound..=bound);
    let d_seq = (0..m).map(&mut draw).collect();
    let e_seq = (0..m).map(&mut draw).collect();
    IndexProfile::new(d_seq, e_seq).expect("lengths agree")
}

/// Integer coefficients in `[-bound, bound]`, degree at most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize, bound: i64) -> Polynomial {
    let coeffs: Vec<i64> = (0..=max_deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    Polynomial::from_ints(&coeffs)
}

pub fn random_nonzero_poly<R: Rng>(rng: &mut R, max_deg: usize, bound: i64) -> Polynomial {
    loop {
        let p = random_poly(rng, max_deg, bound);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfun<R: Rng>(rng: &mut R, max_deg: usize, bound: i64) -> RationalFunction {
    let numer = random_poly(rng, max_deg, bound);
    let denom = random_nonzero_poly(rng, max_deg, bound);
    RationalFunction::new(numer, denom).expect("nonzero denominator")
}

pub fn random_poly_matrix<R: Rng>(rng: &mut R, size: usize, max_deg: usize, bound: i64) -> Matrix<Polynomial> {
    Matrix::from_fn(size, |_, _| random_poly(rng, max_deg, bound))
}

pub fn random_rat_matrix<R: Rng>(rng: &mut R, size: usize, max_deg: usize, bound: i64) -> Matrix<RationalFunction> {
    Matrix::from_fn(size, |_, _| random_ratfun(rng, max_deg, bound))
}
