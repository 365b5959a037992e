//! Dense univariate polynomials over ℚ in the indeterminate `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::BigRational;
use crate::error::{Error, Result};

/// A polynomial stored as coefficients in ascending powers of `z`.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty
/// coefficient list and structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from small integers, ascending order.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Value at `z = 0`.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Scales to leading coefficient 1. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over ℚ: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomialDivisor)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact; `None` when a remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Euclid with content normalization: both inputs are scaled to primitive
    /// integer polynomials and each pseudo-remainder is made primitive again.
    pub fn gcd(&self, other: &Self) -> Self {
        super::intpoly::gcd(self, other)
    }

    /// Monic least common multiple; zero if either side is zero.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let q = self
            .div_exact(&g)
            .expect("gcd is nonzero")
            .expect("gcd divides its argument");
        (&q * other).monic()
    }

    /// Keeps the coefficients of `z^0..z^{len-1}`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(len).cloned().collect())
    }
}

impl From<BigRational> for Polynomial {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Writes `c` as a coefficient of `z^k`, without its sign.
fn write_term(f: &mut fmt::Formatter<'_>, c: &BigRational, k: usize) -> fmt::Result {
    let mag = c.abs();
    let coeff = if mag.is_integer() {
        mag.to_integer().to_string()
    } else {
        format!("({mag})")
    };
    match k {
        0 => write!(f, "{coeff}"),
        _ => {
            if !mag.is_one() {
                write!(f, "{coeff}")?;
            }
            if k == 1 {
                write!(f, "z")
            } else {
                write!(f, "z^{k}")
            }
        }
    }
}

/// Descending powers, e.g. `4z^2-7z+1`; non-integral coefficients in parentheses.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            write_term(f, c, k)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        // z^3 - 1 = (z - 1)(z^2 + z + 1)
        let (q, r) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, Polynomial::monomial(BigRational::new(1.into(), 2.into()), 0).shift(1));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(p(&[1]).div_rem(&Polynomial::zero()), Err(Error::ZeroPolynomialDivisor));
    }

    #[test]
    fn gcd_is_monic() {
        // 2(z-1)(z+2) and 6(z-1)(z-3)
        let a = p(&[-4, 2, 2]);
        let b = p(&[18, -24, 6]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.gcd(&Polynomial::zero()), p(&[-2, 1, 1]));
        assert!(Polynomial::zero().gcd(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn lcm_of_coprime_is_product() {
        assert_eq!(p(&[1, -1]).lcm(&p(&[1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, -2, 1]).lcm(&p(&[-1, 1])), p(&[1, -2, 1]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, -7, 4]).to_string(), "4z^2-7z+1");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
        assert_eq!(p(&[0, 3, 0, -1]).to_string(), "-z^3+3z");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let half = Polynomial::constant(BigRational::new((-1).into(), 2.into())).shift(1);
        assert_eq!(half.to_string(), "-(1/2)z");
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p(&[1, -1]);
        assert_eq!(a.pow(3), &(&a * &a) * &a);
        assert_eq!(a.pow(0), Polynomial::one());
    }
}
