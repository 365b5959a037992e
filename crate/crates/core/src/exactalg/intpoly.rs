//! Integer-coefficient kernels behind the ℚ[z] gcd and determinant.
//!
//! Rational arithmetic reduces a fraction on every operation, which dominates
//! the cost of elimination and Euclid's algorithm. Both are run here on
//! `Vec<BigInt>` (ascending, no trailing zeros) and mapped back to ℚ once.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::BigRational;

pub(crate) type IntPoly = Vec<BigInt>;

fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

/// `(lcm of coefficient denominators, that multiple of p as integers)`.
pub(crate) fn clear_denominators(p: &Polynomial) -> (BigInt, IntPoly) {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    (l, ints)
}

pub(crate) fn to_polynomial(a: &[BigInt], divisor: &BigInt) -> Polynomial {
    Polynomial::from_coeffs(
        a.iter()
            .map(|c| BigRational::new(c.clone(), divisor.clone()))
            .collect(),
    )
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive(a: IntPoly) -> IntPoly {
    let Some(lead) = a.last() else { return a };
    let mut c = content(&a);
    if lead.is_negative() {
        c = -c;
    }
    if c.is_one() {
        return a;
    }
    a.into_iter().map(|x| x / &c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
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
    trim(out)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

/// `a / b`, panicking unless the quotient exists in ℤ[z].
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let lead = b.last().expect("divisor is nonzero");
    if a.is_empty() {
        return Vec::new();
    }
    assert!(a.len() >= b.len(), "inexact polynomial division");
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + b.len() - 1].div_rem(lead);
        assert!(rem.is_zero(), "inexact polynomial division");
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                r[k + j] -= &c * y;
            }
        }
        q[k] = c;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(q)
}

/// Remainder of `lc(b)^e · a` by `b` for the smallest `e` that keeps it integral.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let lead = b.last().expect("divisor is nonzero");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let top = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        let g = top.gcd(lead);
        let (mr, mb) = (lead / &g, top / &g);
        for x in r.iter_mut() {
            *x *= &mr;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &mb * y;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd of two rational polynomials by the primitive remainder sequence.
pub(crate) fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut a = primitive(clear_denominators(a).1);
    let mut b = primitive(clear_denominators(b).1);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(pseudo_rem(&a, &b));
        a = std::mem::replace(&mut b, r);
    }
    match a.last() {
        None => Polynomial::zero(),
        Some(lead) => to_polynomial(&a, &lead.clone()),
    }
}

/// Determinant of a square matrix over ℤ[z] by Bareiss elimination with row swaps.
pub(crate) fn bareiss_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev: IntPoly = vec![BigInt::one()];
    for k in 0..n {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&i| !m[i][k].is_empty()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = sub(&mul(&m[k][k], &m[i][j]), &mul(&m[i][k], &m[k][j]));
                m[i][j] = div_exact(&t, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m.pop().and_then(|mut row| row.pop()).unwrap_or_else(|| vec![BigInt::one()]);
    if negate {
        det.into_iter().map(|c| -c).collect()
    } else {
        det
    }
}

/// Determinant of a square matrix over ℚ[z]: each row is scaled to integer
/// coefficients, eliminated over ℤ[z], and the scalings divided back out.
pub fn polynomial_det(m: &[Vec<Polynomial>]) -> Polynomial {
    if m.is_empty() {
        return Polynomial::one();
    }
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .flat_map(|e| e.coeffs())
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter()
                .map(|e| e.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect())
                .collect()
        })
        .collect();
    to_polynomial(&bareiss_det(rows), &scale)
}
