//! Closed forms of the four determinant families.

use num_traits::One;

use super::{binom, binomial, IdentityError, Subject, Thm4Variant};
use crate::exact::{pow_signed, Polynomial, Rational, RationalFunction};
use crate::matrix::IdentityCase;

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn power(base: &Rational, e: i64) -> Rational {
    pow_signed(base, e).expect("c is nonzero")
}

fn to_u32(e: i64) -> u32 {
    u32::try_from(e).expect("nonnegative exponent")
}

/// `(-1)^{(s+kn+1)C} D^C c^{(s+kn)C + 2k C3} prod_i binom(m,i) U_{k(i+1)}^{2(m-i)}`
/// with `C = binom(m+1, 2)` and `C3 = binom(m+1, 3)`.
pub fn rhs_theorem2(subject: &Subject, case: &IdentityCase) -> Result<Polynomial, IdentityError> {
    case.validate()?;
    let (m, k) = (case.m, case.k);
    let t = case.s + k * case.n;
    let cc = binom(m + 1, 2);
    let c3 = binom(m + 1, 3);
    let mut scalar = sign((t + 1) * cc) * power(subject.c(), t * cc + 2 * k * c3);
    for i in 0..=m {
        scalar *= Rational::from_integer(binomial(m as u64, i as u64));
    }
    let mut poly = subject.delta().pow(to_u32(cc));
    for i in 0..=m {
        poly = &poly * &subject.u(k * (i as i64 + 1)).pow(2 * (m - i) as u32);
    }
    Ok(poly.scale(&scalar))
}

/// `(-D)^C (-c)^{(s+kn)C + k C3} prod_l U_{kl}^{m+1-l} prod_{i<=j} (-c)^{k d_j} U_{k(e_i - d_j)}`.
pub fn rhs_theorem3(subject: &Subject, case: &IdentityCase) -> Result<Polynomial, IdentityError> {
    case.validate()?;
    let profile = case.profile()?;
    let (m, k) = (case.m, case.k);
    let t = case.s + k * case.n;
    let cc = binom(m + 1, 2);
    let c3 = binom(m + 1, 3);
    let neg_c = -subject.c();
    let mut c_exp = t * cc + k * c3;
    let mut poly = subject.delta().pow(to_u32(cc));
    for l in 1..=m {
        poly = &poly * &subject.u(k * l as i64).pow((m + 1 - l) as u32);
    }
    for j in 1..=m {
        for i in 1..=j {
            c_exp += k * profile.d(j);
            poly = &poly * &subject.u(k * (profile.e(i) - profile.d(j)));
        }
    }
    let scalar = sign(cc) * power(&neg_c, c_exp);
    Ok(poly.scale(&scalar))
}

/// `(-1)^{(s+kn)C} c^{(s+kn)C + 2k C3} D^C prod_i U_{k(i+1)}^{2(m-i)} / prod_{i,j} P_{s+k(n+i+j)}`.
pub fn rhs_theorem35(subject: &Subject, case: &IdentityCase) -> Result<RationalFunction, IdentityError> {
    case.validate()?;
    let (m, k) = (case.m, case.k);
    let size = m + 1;
    let window: Vec<Polynomial> = (0..=2 * m as i64).map(|t| subject.term(case.index(t))).collect();
    if let Some(flat) = (0..size * size).find(|f| window[f / size + f % size].is_zero()) {
        return Err(IdentityError::ZeroDenominator(flat));
    }
    let t = case.s + k * case.n;
    let cc = binom(m + 1, 2);
    let c3 = binom(m + 1, 3);
    let scalar = sign(t * cc) * power(subject.c(), t * cc + 2 * k * c3);
    let mut numer = subject.delta().pow(to_u32(cc));
    for i in 0..=m {
        numer = &numer * &subject.u(k * (i as i64 + 1)).pow(2 * (m - i) as u32);
    }
    // P at i + j = t appears min(t, 2m - t) + 1 times
    let denom: Polynomial = window
        .iter()
        .enumerate()
        .map(|(t, p)| p.pow((t.min(2 * m - t) + 1) as u32))
        .product();
    Ok(RationalFunction::new(numer.scale(&scalar), denom).expect("window terms are nonzero"))
}

/// `(-1)^{n B + B3} c^{(n+d-2) B} D^B prod_{i=1}^{d-1} (U_i U_{m+1-i})^{d-i} prod_{i=d-1}^{2(d-1)} P_{n+i}^<m+1-d>`
/// with `B = binom(d, 2)`, `B3 = binom(d+1, 3)`. The printed variant reads
/// `U_{r+1-i}` and `P_{n+1}` instead.
pub fn rhs_theorem4(subject: &Subject, case: &IdentityCase, variant: Thm4Variant) -> Result<Polynomial, IdentityError> {
    case.validate()?;
    let (n, m, d) = (case.n, case.m, case.d);
    if d > m + 1 {
        return Err(IdentityError::InvalidCase(format!("d = {d} exceeds m + 1 = {}", m + 1)));
    }
    let pair_index = |i: i64| -> Result<i64, IdentityError> {
        match variant {
            Thm4Variant::Corrected => Ok(m as i64 + 1 - i),
            Thm4Variant::AsPrinted => {
                let r = subject.spec().r();
                if !r.is_integer() {
                    return Err(IdentityError::NonIntegerR(r.clone()));
                }
                let r = i64::try_from(r.to_integer()).map_err(|_| IdentityError::NonIntegerR(r.clone()))?;
                Ok(r + 1 - i)
            }
        }
    };
    let b = binom(d, 2);
    let b3 = binom(d + 1, 3);
    let scalar = sign(n * b + b3) * power(subject.c(), (n + d as i64 - 2) * b);
    let mut poly = subject.delta().pow(to_u32(b));
    for i in 1..d as i64 {
        let pair = &subject.u(i) * &subject.u(pair_index(i)?);
        poly = &poly * &pair.pow(to_u32(d as i64 - i));
    }
    let width = m + 1 - d;
    for i in d as i64 - 1..=2 * (d as i64 - 1) {
        let start = match variant {
            Thm4Variant::Corrected => n + i,
            Thm4Variant::AsPrinted => n + 1,
        };
        poly = &poly * &subject.sequence().rising_power(start, width);
    }
    Ok(poly.scale(&scalar))
}
