#![allow(dead_code)]

use kneadgen::{BigRational, CoeffMatrix, Polynomial, RationalFunction, RecurrenceSpec};
use rand::Rng;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

pub fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::new(poly(n), poly(d)).unwrap()
}

pub fn example1() -> RecurrenceSpec {
    RecurrenceSpec::new(2, 1, vec![CoeffMatrix::from_i64s(&[&[1, 2], &[3, 4]]).unwrap()]).unwrap()
}

pub fn example2() -> RecurrenceSpec {
    RecurrenceSpec::new(2, 1, vec![CoeffMatrix::from_i64s(&[&[1, 1], &[1, 1]]).unwrap()]).unwrap()
}

/// Random rational with numerator and denominator in [-5, 5], denominator nonzero.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let d = loop {
        let d = rng.gen_range(-5..=5);
        if d != 0 {
            break d;
        }
    };
    q(rng.gen_range(-5..=5), d)
}

pub fn random_spec(rng: &mut impl Rng, p: usize, s: usize) -> RecurrenceSpec {
    let coeffs = (0..s)
        .map(|_| {
            CoeffMatrix::from_rows(
                (0..p)
                    .map(|_| (0..p).map(|_| random_rational(rng)).collect())
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    RecurrenceSpec::new(p, s, coeffs).unwrap()
}
