use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{ArithError, Polynomial, Rational};

/// Quotient of two polynomials in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numer: Polynomial,
    denom: Polynomial,
}

impl RationalFunction {
    pub fn new(numer: Polynomial, denom: Polynomial) -> Result<Self, ArithError> {
        if denom.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::zero());
        }
        let g = numer.gcd(&denom)?;
        let (numer, denom) = if g.is_one() {
            (numer, denom)
        } else {
            (numer.exact_div(&g)?, denom.exact_div(&g)?)
        };
        Ok(Self::normalize_lead(numer, denom))
    }

    /// Moves the denominator's leading coefficient into the numerator.
    fn normalize_lead(numer: Polynomial, denom: Polynomial) -> Self {
        let lead = denom.leading_coeff();
        if lead.is_one() {
            return RationalFunction { numer, denom };
        }
        RationalFunction {
            numer: numer.scale(&lead.recip()),
            denom: denom.monic(),
        }
    }

    pub fn zero() -> Self {
        Polynomial::zero().into()
    }

    pub fn one() -> Self {
        Polynomial::one().into()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    /// The polynomial value when the denominator is 1.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        self.is_polynomial().then(|| self.numer.clone())
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.numer.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize_lead(self.denom.clone(), self.numer.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        // powers of coprime polynomials stay coprime
        RationalFunction {
            numer: self.numer.pow(exp),
            denom: self.denom.pow(exp),
        }
    }

    pub fn eval(&self, point: &Rational) -> Result<Rational, ArithError> {
        let d = self.denom.eval(point);
        if num_traits::Zero::is_zero(&d) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.numer.eval(point) / d)
    }

    fn combine(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let rhs_numer = if negate_rhs { -&rhs.numer } else { rhs.numer.clone() };
        if self.is_polynomial() && rhs.is_polynomial() {
            return (&self.numer + &rhs_numer).into();
        }
        if self.denom == rhs.denom {
            let numer = &self.numer + &rhs_numer;
            return Self::new(numer, self.denom.clone()).expect("nonzero denominator");
        }
        // Henrici: with g = gcd(b, d), a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)),
        // and any common factor of that fraction already divides g.
        let g = self.denom.gcd(&rhs.denom).expect("denominators are nonzero");
        let (bg, dg) = if g.is_one() {
            (self.denom.clone(), rhs.denom.clone())
        } else {
            (
                self.denom.exact_div(&g).expect("gcd divides"),
                rhs.denom.exact_div(&g).expect("gcd divides"),
            )
        };
        let numer = &(&self.numer * &dg) + &(&rhs_numer * &bg);
        let denom = &self.denom * &dg;
        if numer.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return RationalFunction { numer, denom };
        }
        let h = numer.gcd(&g).expect("nonzero");
        if h.is_one() {
            RationalFunction { numer, denom }
        } else {
            RationalFunction {
                numer: numer.exact_div(&h).expect("gcd divides"),
                denom: denom.exact_div(&h).expect("gcd divides"),
            }
        }
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return (&self.numer * &rhs.numer).into();
        }
        let cancel = |n: &Polynomial, d: &Polynomial| -> (Polynomial, Polynomial) {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d).expect("nonzero");
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).expect("gcd divides"), d.exact_div(&g).expect("gcd divides"))
            }
        };
        let (n1, d2) = cancel(&self.numer, &rhs.denom);
        let (n2, d1) = cancel(&rhs.numer, &self.denom);
        Self::normalize_lead(&n1 * &n2, &d1 * &d2)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            numer: p,
            denom: Polynomial::one(),
        }
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c).into()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $body(self, rhs)
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RationalFunction, b: &RationalFunction| a.combine(b, false));
forward_binop!(Sub, sub, |a: &RationalFunction, b: &RationalFunction| a.combine(b, true));
forward_binop!(Mul, mul, |a: &RationalFunction, b: &RationalFunction| a.product(b));
