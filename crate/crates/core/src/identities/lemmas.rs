//! The generic factorization identities over arbitrary polynomial and
//! rational-function inputs.

use std::collections::BTreeMap;

use super::check::{CheckOptions, EngineChoice};
use super::{binomial, IdentityError, Params, Verdict};
use crate::det::{determinant, determinant_all, minor, DetEntry, MinorRef};
use crate::exact::{Polynomial, Rational, RationalFunction};
use crate::matrix::{IndexProfile, Matrix};

fn expect_len<T>(items: &[T], m: usize) -> Result<(), IdentityError> {
    if items.len() != m + 1 {
        return Err(IdentityError::LengthMismatch {
            expected: m + 1,
            got: items.len(),
        });
    }
    Ok(())
}

fn rf(p: &Polynomial) -> RationalFunction {
    p.clone().into()
}

fn det_lhs(mat: &Matrix<RationalFunction>, opts: &CheckOptions) -> Result<(RationalFunction, bool), IdentityError> {
    match opts.engine {
        EngineChoice::One(e) => {
            let d = determinant(mat, e)?;
            Ok((d.value, d.fallback_used))
        }
        EngineChoice::All => {
            let (runs, consistent) = determinant_all(mat);
            if !consistent {
                return Err(IdentityError::InvalidCase("engines disagree".into()));
            }
            let mut fallback = false;
            let mut value = None;
            for (_, run) in runs {
                let d = run?;
                fallback |= d.fallback_used;
                value.get_or_insert(d.value);
            }
            Ok((value.expect("engines ran"), fallback))
        }
    }
}

fn finish(theorem: &str, params: Params, opts: &CheckOptions, lhs: (RationalFunction, bool), rhs: RationalFunction) -> Verdict {
    let rhs = if opts.corrupt_rhs { &rhs + &RationalFunction::one() } else { rhs };
    let mut v = Verdict::new(theorem, "generic", params).engine(opts.engine.to_string()).compare(lhs.0, rhs, false);
    v.fallback_used = lhs.1;
    v
}

fn vandermonde_like(b: &[Polynomial], d: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::one();
    for j in 0..b.len() {
        for i in 0..j {
            acc = &acc * &(&(&b[i] * &d[j]) - &(&b[j] * &d[i]));
        }
    }
    acc
}

/// `det[(A_j B_i + C_j D_i)^m] = prod_{i<j} (B_i D_j - B_j D_i)(A_i C_j - A_j C_i) * prod_i binom(m, i)`.
pub fn lemma1_check(
    a: &[RationalFunction],
    b: &[Polynomial],
    c: &[RationalFunction],
    d: &[Polynomial],
    m: usize,
    opts: &CheckOptions,
) -> Result<Verdict, IdentityError> {
    for len in [a.len(), b.len(), c.len(), d.len()] {
        if len != m + 1 {
            return Err(IdentityError::LengthMismatch { expected: m + 1, got: len });
        }
    }
    let mat = Matrix::from_fn(m + 1, |i, j| (&(&a[j] * &rf(&b[i])) + &(&c[j] * &rf(&d[i]))).pow(m as u32));
    let lhs = det_lhs(&mat, opts)?;
    let mut rhs = RationalFunction::from(vandermonde_like(b, d));
    for j in 0..=m {
        for i in 0..j {
            rhs = &rhs * &(&(&a[i] * &c[j]) - &(&a[j] * &c[i]));
        }
    }
    let binoms: Rational = (0..=m).map(|i| Rational::from_integer(binomial(m as u64, i as u64))).product();
    rhs = &rhs * &RationalFunction::from(binoms);
    let params = Params {
        m: Some(m),
        ..Params::default()
    };
    Ok(finish("lemma1", params, opts, lhs, rhs))
}

/// `det[prod_{f>j} (A_{d_f} B_i + C_{d_f} D_i) prod_{g<=j} (A_{e_g} B_i + C_{e_g} D_i)]
///  = prod_{i<j} (B_i D_j - B_j D_i) * prod_{1<=i<=j<=m} (C_{e_i} A_{d_j} - A_{e_i} C_{d_j})`.
pub fn lemma2_check(
    a: &BTreeMap<i64, RationalFunction>,
    b: &[Polynomial],
    c: &BTreeMap<i64, RationalFunction>,
    d: &[Polynomial],
    profile: &IndexProfile,
    m: usize,
    opts: &CheckOptions,
) -> Result<Verdict, IdentityError> {
    expect_len(b, m)?;
    expect_len(d, m)?;
    if profile.len() != m {
        return Err(IdentityError::LengthMismatch {
            expected: m,
            got: profile.len(),
        });
    }
    let at = |family: &BTreeMap<i64, RationalFunction>, idx: i64| family.get(&idx).cloned().ok_or(IdentityError::UndefinedIndex(idx));
    let factor = |idx: i64, i: usize| -> Result<RationalFunction, IdentityError> {
        Ok(&(&at(a, idx)? * &rf(&b[i])) + &(&at(c, idx)? * &rf(&d[i])))
    };
    let mat = Matrix::try_from_fn(m + 1, |i, j| -> Result<RationalFunction, IdentityError> {
        let mut entry = RationalFunction::one();
        for f in j + 1..=m {
            entry = &entry * &factor(profile.d(f), i)?;
        }
        for g in 1..=j {
            entry = &entry * &factor(profile.e(g), i)?;
        }
        Ok(entry)
    })?;
    let lhs = det_lhs(&mat, opts)?;
    let mut rhs = RationalFunction::from(vandermonde_like(b, d));
    for j in 1..=m {
        for i in 1..=j {
            let (e, dj) = (profile.e(i), profile.d(j));
            rhs = &rhs * &(&(&at(c, e)? * &at(a, dj)?) - &(&at(a, e)? * &at(c, dj)?));
        }
    }
    let params = Params {
        m: Some(m),
        d_seq: Some(profile.d_seq().to_vec()),
        e_seq: Some(profile.e_seq().to_vec()),
        ..Params::default()
    };
    Ok(finish("lemma2", params, opts, lhs, rhs))
}

/// `det[1 / (A_i D_j + B_i C_j)] = prod_{i<j} (A_i B_j - A_j B_i)(C_i D_j - D_i C_j) / prod_{i,j} (A_i D_j + B_i C_j)`.
pub fn lemma25_check(
    a: &[Polynomial],
    b: &[Polynomial],
    c: &[RationalFunction],
    d: &[RationalFunction],
    m: usize,
    opts: &CheckOptions,
) -> Result<Verdict, IdentityError> {
    for len in [a.len(), b.len(), c.len(), d.len()] {
        if len != m + 1 {
            return Err(IdentityError::LengthMismatch { expected: m + 1, got: len });
        }
    }
    let size = m + 1;
    let denoms = Matrix::from_fn(size, |i, j| &(&rf(&a[i]) * &d[j]) + &(&rf(&b[i]) * &c[j]));
    if let Some(flat) = denoms.entries().iter().position(RationalFunction::is_zero) {
        return Err(IdentityError::ZeroDenominator(flat));
    }
    let mat = denoms.map(|v| v.recip().expect("nonzero"));
    let lhs = det_lhs(&mat, opts)?;
    let mut numer = RationalFunction::from(vandermonde_like(a, b));
    for j in 0..size {
        for i in 0..j {
            numer = &numer * &(&(&c[i] * &d[j]) - &(&d[i] * &c[j]));
        }
    }
    let denom = denoms.entries().iter().fold(RationalFunction::one(), |acc, v| &acc * v);
    let rhs = numer.checked_div(&denom).expect("nonzero");
    let params = Params {
        m: Some(m),
        ..Params::default()
    };
    Ok(finish("lemma2.5", params, opts, lhs, rhs))
}

/// `A_m(1,1) A_{m-2}(2,2)` against `A_{m-1}(1,1) A_{m-1}(2,2) - A_{m-1}(2,1) A_{m-1}(1,2)`.
pub fn lemma3_check<T: DetEntry + Into<RationalFunction>>(mat: &Matrix<T>) -> Result<Verdict, IdentityError> {
    let m = mat.size()?;
    if m < 2 {
        return Err(IdentityError::InvalidCase("condensation identity needs size >= 2".into()));
    }
    let a = |k: usize, i: usize, j: usize| minor(mat, MinorRef { k, i, j });
    let lhs: RationalFunction = a(m, 1, 1)?.mul(&a(m - 2, 2, 2)?).into();
    let rhs: RationalFunction = a(m - 1, 1, 1)?.mul(&a(m - 1, 2, 2)?).sub(&a(m - 1, 2, 1)?.mul(&a(m - 1, 1, 2)?)).into();
    let params = Params {
        m: Some(m),
        ..Params::default()
    };
    Ok(Verdict::new("lemma3", "generic", params).engine("minors").compare(lhs, rhs, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::identities::Status;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn r(c: &[i64]) -> RationalFunction {
        p(c).into()
    }

    #[test]
    fn lemma1_hand_case() {
        let v = lemma1_check(&[r(&[1]), r(&[1])], &[p(&[1]), p(&[0, 1])], &[r(&[1]), r(&[2])], &[p(&[1]), p(&[1])], 1, &CheckOptions::default()).unwrap();
        assert_eq!(v.lhs, Some(r(&[1, -1])));
        assert_eq!(v.status, Status::Equal);
        let degenerate = lemma1_check(&[r(&[1]), r(&[3])], &[p(&[2]), p(&[2])], &[r(&[1]), r(&[2])], &[p(&[1]), p(&[1])], 1, &CheckOptions::default()).unwrap();
        assert_eq!(degenerate.status, Status::DegenerateOk);
        assert!(matches!(
            lemma1_check(&[r(&[1])], &[p(&[1])], &[r(&[1])], &[p(&[1])], 1, &CheckOptions::default()),
            Err(IdentityError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn lemma2_cases() {
        let a: BTreeMap<i64, RationalFunction> = [(0, r(&[1])), (1, r(&[0, 1])), (2, r(&[3, 1]))].into();
        let c: BTreeMap<i64, RationalFunction> = [(0, r(&[2])), (1, r(&[1, 1])), (2, RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap())].into();
        let b = [p(&[1]), p(&[0, 2]), p(&[1, 0, 1])];
        let d = [p(&[2, 1]), p(&[1]), p(&[0, -1])];
        let prof = IndexProfile::new(vec![0, 2], vec![1, 1]).unwrap();
        assert!(lemma2_check(&a, &b, &c, &d, &prof, 2, &CheckOptions::default()).unwrap().equal);
        let same = IndexProfile::new(vec![1, 2], vec![1, 2]).unwrap();
        assert_eq!(lemma2_check(&a, &b, &c, &d, &same, 2, &CheckOptions::default()).unwrap().status, Status::DegenerateOk);
        let missing = IndexProfile::new(vec![0, 5], vec![1, 1]).unwrap();
        assert_eq!(lemma2_check(&a, &b, &c, &d, &missing, 2, &CheckOptions::default()), Err(IdentityError::UndefinedIndex(5)));
    }

    #[test]
    fn lemma25_hand_case() {
        let v = lemma25_check(&[p(&[]), p(&[1])], &[p(&[1]), p(&[1])], &[r(&[1]), r(&[2])], &[r(&[1]), r(&[1])], 1, &CheckOptions::default()).unwrap();
        assert_eq!(v.lhs, Some(RationalFunction::from(rational(1, 12))));
        assert_eq!(v.status, Status::Equal);
        let twin = lemma25_check(&[p(&[1]), p(&[1])], &[p(&[2]), p(&[2])], &[r(&[1]), r(&[0, 1])], &[r(&[1]), r(&[3])], 1, &CheckOptions::default()).unwrap();
        assert_eq!(twin.status, Status::DegenerateOk);
        assert_eq!(
            lemma25_check(&[p(&[]), p(&[1])], &[p(&[1]), p(&[1])], &[r(&[]), r(&[2])], &[r(&[1]), r(&[1])], 1, &CheckOptions::default()),
            Err(IdentityError::ZeroDenominator(0))
        );
    }

    #[test]
    fn lemma3_on_a_fixed_matrix() {
        let mat = Matrix::from_fn(4, |i, j| p(&[(i * 3 + j) as i64 % 5, 1, (i + j) as i64 % 2]));
        let v = lemma3_check(&mat).unwrap();
        assert!(v.equal);
        let two = Matrix::from_fn(2, |i, j| p(&[(i + 2 * j) as i64]));
        assert_eq!(lemma3_check(&two).unwrap().lhs, Some(r(&[-2])));
    }
}
