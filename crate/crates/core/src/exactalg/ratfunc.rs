//! Reduced rational functions `num/den` over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::BigRational;
use crate::error::{Error, Result};

/// An element of ℚ(z) in canonical form.
///
/// `gcd(num, den) = 1` and `den` is monic, with zero stored as `0/1`. Two
/// values are equal exactly when their fields are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomialDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            let n = num.div_exact(&g)?.expect("gcd divides numerator");
            let d = den.div_exact(&g)?.expect("gcd divides denominator");
            (n, d)
        };
        let lc = den.leading_coeff().expect("denominator is nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn z() -> Self {
        Self::from_poly(Polynomial::z())
    }

    pub fn from_poly(num: Polynomial) -> Self {
        Self {
            num,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some` exactly when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// Value at `z = 0`, or `None` if `z = 0` is a pole.
    pub fn value_at_zero(&self) -> Option<BigRational> {
        let d0 = self.den.constant_term();
        (!d0.is_zero()).then(|| self.num.constant_term() / d0)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroRationalDivisor);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroRationalDivisor);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// The same fraction rescaled so both polynomials have coprime integer
    /// coefficients, e.g. `(5z^2-6z+1)/(4z^2-7z+1)`. Not canonical; for display.
    pub fn integral_parts(&self) -> (Polynomial, Polynomial) {
        let coeffs = || self.num.coeffs().iter().chain(self.den.coeffs());
        let l = coeffs().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = coeffs().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&l / c.denom()))));
        let factor = BigRational::new(l, g);
        (self.num.scale(&factor), self.den.scale(&factor))
    }

    /// Like `Display`, but written over [`integral_parts`](Self::integral_parts)
    /// unless the value is a polynomial.
    pub fn display_integral(&self) -> String {
        if self.den.is_one() {
            return self.num.to_string();
        }
        let (num, den) = self.integral_parts();
        format!("({num})/({den})")
    }

    fn add_sub(&self, rhs: &Self, negate: bool) -> Self {
        let rhs_num = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs_num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs_num * &self.den);
        Self::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_sub(rhs, false)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_sub(rhs, true)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add add, Sub sub, Mul mul);

/// `(num)/(den)`, or just the numerator when the denominator is 1.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_cancels_and_makes_monic() {
        // (2z^2 - 2z)/(2 - 2z) = -z
        let r = rf(&[0, -2, 2], &[2, -2]);
        assert_eq!(r.numer(), &p(&[0, -1]));
        assert_eq!(r.denom(), &p(&[1]));
    }

    #[test]
    fn normalize_zero() {
        let r = rf(&[0], &[1, -1]);
        assert!(r.is_zero());
        assert_eq!(r.denom(), &Polynomial::one());
    }

    #[test]
    fn normalize_makes_denominator_monic() {
        // (4z^2 - 7z + 1)/(1 - z)^2
        let r = rf(&[1, -7, 4], &[1, -2, 1]);
        assert_eq!(r.numer(), &p(&[1, -7, 4]));
        assert_eq!(r.denom(), &p(&[1, -2, 1]));
        let r = rf(&[1], &[1, -1]);
        assert_eq!(r.numer(), &p(&[-1]));
        assert_eq!(r.denom(), &p(&[-1, 1]));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(Error::ZeroPolynomialDivisor)
        );
        assert_eq!(rf(&[1], &[1]).checked_div(&RationalFunction::zero()), Err(Error::ZeroRationalDivisor));
        assert_eq!(RationalFunction::zero().inv(), Err(Error::ZeroRationalDivisor));
    }

    #[test]
    fn field_examples() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[2], &[1, -1]);
        assert_eq!(&a + &b, rf(&[3], &[1, -1]));
        assert_eq!(&a * &rf(&[1], &[1, 1]), rf(&[1], &[1, 0, -1]));
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn value_at_zero() {
        assert_eq!(rf(&[3, 1], &[2, 1]).value_at_zero(), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(rf(&[1], &[0, 1]).value_at_zero(), None);
    }

    #[test]
    fn integral_display() {
        let half = BigRational::new(1.into(), 4.into());
        let f = rf(&[1, -6, 5], &[1, -7, 4]);
        assert_eq!(f.display_integral(), "(5z^2-6z+1)/(4z^2-7z+1)");
        assert_eq!(RationalFunction::from_poly(p(&[0, 1]).scale(&half)).display_integral(), "(1/4)z");
        assert_eq!(rf(&[1], &[1, -1]).display_integral(), "(-1)/(z-1)");
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1, -7, 4], &[1, -2, 1]).to_string(), "(4z^2-7z+1)/(z^2-2z+1)");
        assert_eq!(rf(&[0, -1], &[1]).to_string(), "-z");
    }
}
