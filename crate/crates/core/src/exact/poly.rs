use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{zpoly, ArithError, Rational};

/// Univariate polynomial in `x` with rational coefficients.
///
/// Stored as `content * primitive`, where `primitive` is an integer
/// coefficient vector with gcd 1 and a positive leading coefficient, and the
/// rational `content` carries the sign. The decomposition is unique, so
/// structural equality is value equality. The zero polynomial has an empty
/// primitive part and zero content.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    primitive: Vec<BigInt>,
    content: Rational,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            primitive: Vec::new(),
            content: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut primitive = vec![BigInt::zero(); power + 1];
        primitive[power] = BigInt::one();
        Polynomial {
            primitive,
            content: c,
        }
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    /// Builds a polynomial from coefficients, index `i` holding the
    /// coefficient of `x^i`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut lcm = BigInt::one();
        for c in &coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints = coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        Self::from_parts(ints, Rational::new(BigInt::one(), lcm))
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_parts(coeffs.iter().map(|&c| BigInt::from(c)).collect(), Rational::one())
    }

    fn from_parts(mut ints: Vec<BigInt>, scale: Rational) -> Self {
        zpoly::trim(&mut ints);
        if ints.is_empty() || scale.is_zero() {
            return Self::zero();
        }
        let g = zpoly::make_primitive(&mut ints);
        Polynomial {
            primitive: ints,
            content: scale * Rational::from_integer(g),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.primitive.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.primitive.len() == 1 && self.content.is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.primitive.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.primitive.len() <= 1
    }

    pub fn coeff(&self, power: usize) -> Rational {
        match self.primitive.get(power) {
            Some(c) => &self.content * Rational::from_integer(c.clone()),
            None => Rational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.primitive.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> Rational {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => Rational::zero(),
        }
    }

    /// The constant term if the polynomial has degree zero (or is zero).
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Polynomial {
            primitive: self.primitive.clone(),
            content: &self.content * factor,
        }
    }

    pub fn monic(&self) -> Self {
        match self.primitive.last() {
            None => Self::zero(),
            Some(lead) => Polynomial {
                primitive: self.primitive.clone(),
                content: Rational::new(BigInt::one(), lead.clone()),
            },
        }
    }

    fn combine(&self, rhs: &Self, negate_rhs: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_rhs { -rhs } else { rhs.clone() };
        }
        let (na, da) = (self.content.numer(), self.content.denom());
        let (nb, db) = (rhs.content.numer(), rhs.content.denom());
        let lcm = da.lcm(db);
        let mut fa = na * (&lcm / da);
        let mut fb = nb * (&lcm / db);
        if negate_rhs {
            fb = -fb;
        }
        let h = fa.gcd(&fb);
        fa /= &h;
        fb /= &h;
        let len = self.primitive.len().max(rhs.primitive.len());
        let mut sum = Vec::with_capacity(len);
        for i in 0..len {
            let mut acc = BigInt::zero();
            if let Some(a) = self.primitive.get(i) {
                acc += if fa.is_one() { a.clone() } else { a * &fa };
            }
            if let Some(b) = rhs.primitive.get(i) {
                acc += if fb.is_one() { b.clone() } else { b * &fb };
            }
            sum.push(acc);
        }
        Self::from_parts(sum, Rational::new(h, lcm))
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // Gauss's lemma: the product of primitive vectors is primitive, and
        // both leading coefficients are positive.
        Polynomial {
            primitive: zpoly::mul(&self.primitive, &rhs.primitive),
            content: &self.content * &rhs.content,
        }
    }

    /// Quotient `self / divisor` when the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Over Q[x] a primitive divisor of a primitive polynomial leaves an
        // integer quotient, so the division can run entirely over Z.
        let quotient =
            zpoly::div_exact(&self.primitive, &divisor.primitive).ok_or(ArithError::NotDivisible)?;
        Ok(Polynomial {
            primitive: quotient,
            content: &self.content / &divisor.content,
        })
    }

    /// Quotient and remainder of long division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        let Some(dd) = divisor.degree() else {
            return Err(ArithError::DivisionByZero);
        };
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs();
        let dcoeffs = divisor.coeffs();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let t = &rem[i + dd] / &lead;
            if t.is_zero() {
                continue;
            }
            for (j, dj) in dcoeffs.iter().enumerate() {
                rem[i + j] -= &t * dj;
            }
            quot[i] = t;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `self^exp`, with `0^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(ArithError::BothZero),
            (true, false) => Ok(other.monic()),
            (false, true) => Ok(self.monic()),
            (false, false) => {
                let g = zpoly::gcd_primitive(&self.primitive, &other.primitive);
                Ok(Polynomial {
                    primitive: g,
                    content: Rational::one(),
                }
                .monic())
            }
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, point: &Rational) -> Rational {
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        // sum a_i p^i q^(deg-i) over the integers, then divide by q^deg
        let (p, q) = (point.numer(), point.denom());
        let mut acc = self.primitive[deg].clone();
        let mut qpow = BigInt::one();
        for i in (0..deg).rev() {
            qpow *= q;
            acc = acc * p + &self.primitive[i] * &qpow;
        }
        &self.content * Rational::new(acc, qpow)
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::from_ints(&[c])
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            primitive: self.primitive.clone(),
            content: -&self.content,
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        self.content = -self.content;
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $body(self, rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $body(&self, rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Polynomial, b: &Polynomial| a.combine(b, false));
forward_binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a.combine(b, true));
forward_binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a.product(b));

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}

impl<'a> std::iter::Product<&'a Polynomial> for Polynomial {
    fn product<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}
