use std::fmt::Debug;

use num_traits::{One, Zero};

use super::{ArithError, Polynomial, Rational, RationalFunction};

/// Commutative ring with exact division, the entry domain of every
/// determinant engine.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The quotient `self / rhs`, provided `rhs` divides `self` in the ring.
    fn div_exact(&self, rhs: &Self) -> Result<Self, ArithError>;
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ArithError>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, ArithError> {
        if Zero::is_zero(rhs) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self, ArithError> {
        if Zero::is_zero(self) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.recip())
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.exact_div(rhs)
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.checked_div(rhs)
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Result<Self, ArithError> {
        self.recip()
    }
}
