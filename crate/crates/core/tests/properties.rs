use proptest::prelude::*;

use recdet::det::{det_bareiss, det_condensation, det_field_gauss, det_laplace, desnanot_jacobi_residual};
use recdet::exact::{integer, Polynomial, RationalFunction};
use recdet::identities::sampling::{random_nonzero_poly, random_poly_matrix, random_profile, random_rat_matrix, seeded};
use recdet::identities::{check, CheckOptions, DetTheorem, Subject, Thm4Variant};
use recdet::matrix::{power_matrix, reciprocal_matrix, rising_matrix, IdentityCase};
use recdet::sequences::{PolySequence, RecurrenceSpec};

fn spec() -> impl Strategy<Value = RecurrenceSpec> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3, prop_oneof![-3i64..=-1, 1i64..=3])
        .prop_map(|(p, q, r, a, b, c)| RecurrenceSpec::from_ints(p, q, r, a, b, c).unwrap())
}

fn linear(a: &recdet::exact::Rational, b: &recdet::exact::Rational) -> Polynomial {
    Polynomial::linear(a.clone(), b.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recurrence_holds_in_both_directions(spec in spec()) {
        let seq = PolySequence::new(spec.clone());
        let step = linear(spec.a(), spec.b());
        let c = Polynomial::constant(spec.c().clone());
        for n in -10..=10 {
            prop_assert_eq!(seq.term(n + 2), &(&step * &seq.term(n + 1)) + &(&c * &seq.term(n)));
        }
    }

    #[test]
    fn extending_backwards_first_gives_the_same_terms(spec in spec()) {
        let forward = PolySequence::new(spec.clone()).term(5);
        let other = PolySequence::new(spec);
        let _ = other.term(-5);
        prop_assert_eq!(other.term(5), forward);
    }

    #[test]
    fn discriminant_is_the_first_catalan_defect(spec in spec()) {
        let seq = PolySequence::new(spec.clone());
        let expected = &seq.term(1).pow(2) - &(&seq.term(0) * &seq.term(2));
        prop_assert_eq!(spec.discriminant(), expected);
    }

    #[test]
    fn companion_starts_at_zero_one(spec in spec()) {
        let u = PolySequence::new(spec.companion());
        prop_assert!(u.term(0).is_zero());
        prop_assert!(u.term(1).is_one());
    }

    #[test]
    fn symmetric_builders(spec in spec(), s in -3i64..=3, k in -2i64..=2, n in -3i64..=3, m in 1usize..=3) {
        let seq = PolySequence::new(spec);
        let power = power_matrix(&seq, &IdentityCase::new(s, k, n, m)).unwrap();
        prop_assert_eq!(power.transpose(), power.clone());
        let rising = rising_matrix(&seq, &IdentityCase::new(0, 1, n, m).with_d(m + 1)).unwrap();
        prop_assert_eq!(rising.transpose(), rising);
        if k == 0 {
            prop_assert!(power.entries().iter().all(|e| e == power.get(0, 0)));
            prop_assert!(det_bareiss(&power).unwrap().is_zero());
        }
    }

    #[test]
    fn reciprocal_entries_invert_terms(spec in spec(), s in -3i64..=3, k in -2i64..=2, n in -3i64..=3, m in 1usize..=2) {
        let seq = PolySequence::new(spec);
        let case = IdentityCase::new(s, k, n, m);
        let Ok(mat) = reciprocal_matrix(&seq, &case) else {
            return Ok(());
        };
        for i in 0..=m {
            for j in 0..=m {
                let term = RationalFunction::from(seq.term(s + k * (n + (i + j) as i64)));
                prop_assert_eq!(mat.get(i, j) * &term, RationalFunction::one());
            }
        }
    }

    #[test]
    fn theorems_hold_at_random_points(spec in spec(), s in -3i64..=3, k in -2i64..=2, n in -3i64..=3, m in 1usize..=3, seed in any::<u64>()) {
        let subject = Subject::from_spec(spec);
        let opts = CheckOptions::default();
        let plain = IdentityCase::new(s, k, n, m);
        prop_assert!(check(DetTheorem::Power, &subject, &plain, &opts).equal);
        let profile = random_profile(&mut seeded(seed), m, 3);
        prop_assert!(check(DetTheorem::Product, &subject, &plain.clone().with_profile(profile), &opts).equal);
        let reciprocal = check(DetTheorem::Reciprocal, &subject, &plain, &opts);
        prop_assert!(reciprocal.equal || reciprocal.error.is_some());
        let rising = IdentityCase::new(0, 1, n, m).with_d(1 + seed as usize % (m + 1));
        prop_assert!(check(DetTheorem::Rising(Thm4Variant::Corrected), &subject, &rising, &opts).equal);
    }

    #[test]
    fn power_determinant_ignores_transposition(spec in spec(), s in -3i64..=3, k in -2i64..=2, n in -3i64..=3, m in 1usize..=3) {
        let mat = power_matrix(&PolySequence::new(spec), &IdentityCase::new(s, k, n, m)).unwrap();
        prop_assert_eq!(det_bareiss(&mat.transpose()).unwrap(), det_bareiss(&mat).unwrap());
    }

    #[test]
    fn specialization_commutes_with_determinants(spec in spec(), s in -2i64..=2, k in -2i64..=2, n in -2i64..=2, m in 1usize..=3, x in -3i64..=3) {
        let seq = PolySequence::new(spec);
        let x = integer(x);
        let power = power_matrix(&seq, &IdentityCase::new(s, k, n, m)).unwrap();
        prop_assert_eq!(det_bareiss(&power).unwrap().eval(&x), det_bareiss(&power.eval(&x)).unwrap());
        let rising = rising_matrix(&seq, &IdentityCase::new(0, 1, n, m).with_d(m)).unwrap();
        prop_assert_eq!(det_bareiss(&rising).unwrap().eval(&x), det_bareiss(&rising.eval(&x)).unwrap());
        if let Ok(recip) = reciprocal_matrix(&seq, &IdentityCase::new(s, k, n, m)) {
            if let (Ok(at), Ok(det)) = (recip.eval(&x), det_field_gauss(&recip).unwrap().eval(&x)) {
                prop_assert_eq!(det, det_field_gauss(&at).unwrap());
            }
        }
    }

    #[test]
    fn engines_are_transpose_invariant_and_multilinear(seed in any::<u64>(), size in 1usize..=5, row in 0usize..5) {
        let mut rng = seeded(seed);
        let mat = random_poly_matrix(&mut rng, size, 2, 4);
        let f = random_nonzero_poly(&mut rng, 2, 3);
        let scaled = mat.scale_row(row % size, &f);
        let base = det_bareiss(&mat).unwrap();
        prop_assert_eq!(det_bareiss(&mat.transpose()).unwrap(), base.clone());
        prop_assert_eq!(det_laplace(&mat.transpose()).unwrap(), base.clone());
        prop_assert_eq!(det_condensation(&mat.transpose()).unwrap().value, base.clone());
        let expected = &base * &f;
        prop_assert_eq!(det_bareiss(&scaled).unwrap(), expected.clone());
        prop_assert_eq!(det_laplace(&scaled).unwrap(), expected.clone());
        prop_assert_eq!(det_condensation(&scaled).unwrap().value, expected);
    }

    #[test]
    fn desnanot_jacobi_over_both_domains(seed in any::<u64>(), size in 3usize..=6) {
        let mut rng = seeded(seed);
        prop_assert!(desnanot_jacobi_residual(&random_poly_matrix(&mut rng, size, 2, 3)).unwrap().is_zero());
        prop_assert!(desnanot_jacobi_residual(&random_rat_matrix(&mut rng, size.min(5), 1, 3)).unwrap().is_zero());
    }
}
