//! Kernels on dense integer coefficient vectors.
//!
//! Vectors are stored lowest degree first with no trailing zeros; the empty
//! vector is the zero polynomial. Large products and exact quotients go
//! through Kronecker substitution: both operands are packed into a single big
//! integer, multiplied (or divided) once, and unpacked again.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Below this operand length the quadratic schoolbook loops win.
const KRONECKER_MIN_LEN: usize = 10;

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Nonnegative gcd of all coefficients; zero for the empty vector.
pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
/// Returns the signed factor that was removed.
pub(crate) fn make_primitive(v: &mut [BigInt]) -> BigInt {
    let Some(lead) = v.last() else {
        return BigInt::zero();
    };
    let mut g = content(v);
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    g
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KRONECKER_MIN_LEN {
        mul_schoolbook(a, b)
    } else {
        mul_kronecker(a, b)
    }
}

pub(crate) fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let terms = a.len().min(b.len()) as u64;
    let width = max_bits(a) + max_bits(b) + bit_len(terms) + 1;
    let product = pack(a, width) * pack(b, width);
    let mut out = unpack(&product, width, a.len() + b.len() - 1);
    trim(&mut out);
    out
}

/// Exact quotient `a / b` over the integers, or `None` when `b` does not
/// divide `a` in `Z[x]`. `b` must be nonzero.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    if b.len() == 1 {
        let mut out = Vec::with_capacity(a.len());
        for c in a {
            let (q, r) = c.div_rem(&b[0]);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        return Some(out);
    }
    let quotient_len = a.len() - b.len() + 1;
    if quotient_len.min(b.len()) < KRONECKER_MIN_LEN {
        div_exact_schoolbook(a, b)
    } else {
        div_exact_kronecker(a, b)
    }
}

fn div_exact_schoolbook(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let lb = b.len();
    let lead = &b[lb - 1];
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - lb + 1];
    for i in (0..q.len()).rev() {
        let top = &rem[i + lb - 1];
        if top.is_zero() {
            continue;
        }
        let (qq, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &qq * bj;
        }
        q[i] = qq;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

fn div_exact_kronecker(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let quotient_len = a.len() - b.len() + 1;
    // Any integer factor q of a satisfies |q|_inf <= 2^deg(q) * |a|_2.
    let norm_bits = max_bits(a) + bit_len(a.len() as u64) / 2 + 1;
    let quotient_bits = norm_bits + quotient_len as u64;
    let width = quotient_bits.max(max_bits(b)).max(max_bits(a)) + 2;
    let (q, r) = pack(a, width).div_rem(&pack(b, width));
    if !r.is_zero() {
        return None;
    }
    let mut out = unpack(&q, width, quotient_len + 1);
    trim(&mut out);
    if out.len() != quotient_len || mul(b, &out) != a {
        return None;
    }
    Some(out)
}

/// Pseudo-remainder of `f` by `g`, scaled to a primitive vector.
fn prem_primitive(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let lg = g.len();
    let lead_g = &g[lg - 1];
    let mut r = f.to_vec();
    while r.len() >= lg {
        let lead_r = r[r.len() - 1].clone();
        let shift = r.len() - lg;
        let h = lead_r.gcd(lead_g);
        let scale_r = lead_g / &h;
        let scale_g = &lead_r / &h;
        for c in r.iter_mut() {
            *c *= &scale_r;
        }
        for (j, gj) in g.iter().enumerate() {
            r[shift + j] -= &scale_g * gj;
        }
        trim(&mut r);
        make_primitive(&mut r);
    }
    r
}

/// Primitive gcd (positive leading coefficient) of two primitive nonzero
/// vectors. Tries the heuristic gcd first and falls back to the primitive
/// remainder sequence.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    gcd_heuristic(a, b).unwrap_or_else(|| gcd_prs(a, b))
}

/// Evaluates both inputs at `2^width`, takes one integer gcd and reads the
/// candidate off its balanced digits. Since `2^width` exceeds twice either
/// coefficient bound, a primitive candidate dividing both inputs is the gcd.
fn gcd_heuristic(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut width = max_bits(a).max(max_bits(b)) + 2;
    for _ in 0..2 {
        let value = pack(a, width).gcd(&pack(b, width));
        let count = (value.bits() / width) as usize + 2;
        let mut g = unpack(&value, width, count);
        trim(&mut g);
        if !g.is_empty() && g.len() <= a.len().min(b.len()) {
            make_primitive(&mut g);
            if div_exact(a, &g).is_some() && div_exact(b, &g).is_some() {
                return Some(g);
            }
        }
        width *= 2;
    }
    None
}

fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut f, mut g) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    if g.len() == 1 {
        return vec![BigInt::one()];
    }
    while !g.is_empty() {
        let r = prem_primitive(&f, &g);
        f = g;
        g = r;
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
    }
    make_primitive(&mut f);
    f
}

fn bit_len(x: u64) -> u64 {
    u64::from(64 - x.leading_zeros())
}

fn max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(BigInt::bits).max().unwrap_or(0)
}

/// Evaluates `v` at `2^width`. Every coefficient must be below `2^(width-1)`
/// in magnitude.
fn pack(v: &[BigInt], width: u64) -> BigInt {
    let limbs = (width * v.len() as u64 / 32 + 2) as usize;
    let mut pos = vec![0u32; limbs];
    let mut neg = vec![0u32; limbs];
    let mut has_neg = false;
    for (i, c) in v.iter().enumerate() {
        let target = if c.is_negative() {
            has_neg = true;
            &mut neg
        } else {
            &mut pos
        };
        write_bits(target, i as u64 * width, &c.magnitude().to_u32_digits());
    }
    let pos = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if has_neg {
        pos - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        pos
    }
}

fn write_bits(target: &mut [u32], offset: u64, digits: &[u32]) {
    let shift = (offset % 32) as u32;
    let base = (offset / 32) as usize;
    for (t, &d) in digits.iter().enumerate() {
        target[base + t] |= d << shift;
        if shift > 0 {
            target[base + t + 1] |= d >> (32 - shift);
        }
    }
}

fn read_bits(digits: &[u32], offset: u64, width: u64) -> BigUint {
    let out_limbs = width.div_ceil(32) as usize;
    let shift = (offset % 32) as u32;
    let base = (offset / 32) as usize;
    let get = |i: usize| digits.get(i).copied().unwrap_or(0);
    let mut out = Vec::with_capacity(out_limbs);
    for o in 0..out_limbs {
        let lo = get(base + o);
        let word = if shift == 0 {
            lo
        } else {
            (lo >> shift) | (get(base + o + 1) << (32 - shift))
        };
        out.push(word);
    }
    let spare = (out_limbs as u64 * 32 - width) as u32;
    if spare > 0 {
        if let Some(last) = out.last_mut() {
            *last &= u32::MAX >> spare;
        }
    }
    BigUint::new(out)
}

/// Inverse of [`pack`]: recovers `count` signed digits of width `width`.
fn unpack(value: &BigInt, width: u64, count: usize) -> Vec<BigInt> {
    let digits = value.magnitude().to_u32_digits();
    let half = BigUint::one() << (width - 1);
    let full = BigUint::one() << width;
    let mut carry = false;
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut u = read_bits(&digits, k as u64 * width, width);
        if carry {
            u += 1u32;
        }
        if u >= half {
            out.push(BigInt::from_biguint(Sign::Plus, u) - BigInt::from_biguint(Sign::Plus, full.clone()));
            carry = true;
        } else {
            out.push(BigInt::from_biguint(Sign::Plus, u));
            carry = false;
        }
    }
    if value.is_negative() {
        for c in &mut out {
            *c = -std::mem::take(c);
        }
    }
    out
}
