//! Periodic recurrences and their kneading data.
//!
//! For an `s`-periodic recurrence `x_{n+1} = Σ_{i≥0} A_i x_{n-i}` every
//! kneading increment is a series with period `s`, hence of the form
//! `(c_0 + c_1 z + … + c_{s-1} z^{s-1}) / (1 − z^s)`. The kneading matrix,
//! its extensions and their determinants `det(I − zK)` are then finite
//! computations over ℚ(z).
//!
//! Indices `alpha` and `beta` are 1-based, matching the standard basis
//! `e_1, e_2, …` of the initial-condition space (`e_{kp+j}` puts `e_j` in
//! slot `k`).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{polynomial_det, BigRational, Polynomial, RatFuncMatrix, RationalFunction};

/// Square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl CoeffMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {dim}",
                i + 1,
                r.len()
            )));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry.
    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    /// `self · v`.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, x)| !a.is_zero() && !x.is_zero())
                    .fold(BigRational::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }
}

/// An `s`-periodic recurrence with `p×p` coefficient matrices `A_0..A_{s-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    p: usize,
    s: usize,
    coeffs: Vec<CoeffMatrix>,
}

impl RecurrenceSpec {
    pub fn new(p: usize, s: usize, coeffs: Vec<CoeffMatrix>) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidSpec("p must be ≥ 1".into()));
        }
        if s == 0 {
            return Err(Error::InvalidSpec("s must be ≥ 1".into()));
        }
        if coeffs.len() != s {
            return Err(Error::InvalidSpec(format!(
                "expected {s} matrices, found {}",
                coeffs.len()
            )));
        }
        if let Some((k, m)) = coeffs.iter().enumerate().find(|(_, m)| m.dim() != p) {
            return Err(Error::InvalidSpec(format!(
                "matrix {k} is {d}x{d}, expected {p}x{p}",
                d = m.dim()
            )));
        }
        Ok(Self { p, s, coeffs })
    }

    /// The recurrence with every `A_n = 0`.
    pub fn zero(p: usize, s: usize) -> Result<Self> {
        Self::new(p, s, vec![CoeffMatrix::zeros(p); s])
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn coeffs(&self) -> &[CoeffMatrix] {
        &self.coeffs
    }

    /// `A_n`, extended periodically.
    pub fn coeff_at(&self, n: usize) -> &CoeffMatrix {
        &self.coeffs[n % self.s]
    }

    /// Number of generating functions `G(e_1..e_{(s+1)p})` that span the space.
    pub fn spanning_len(&self) -> usize {
        (self.s + 1) * self.p
    }

    /// Same recurrence with a single entry of `A_k` replaced.
    pub fn with_entry(&self, k: usize, row: usize, col: usize, value: BigRational) -> Self {
        let mut out = self.clone();
        out.coeffs[k].set(row, col, value);
        out
    }

    fn check_alpha(&self, alpha: usize) -> Result<()> {
        if alpha == 0 || alpha > self.p {
            return Err(Error::AlphaOutOfRange { alpha, p: self.p });
        }
        Ok(())
    }
}

/// Where the series of `K(α, β)` reads from: column `col` (1-based) of
/// `A_{n+shift}`.
///
/// With `β = qp + r`, `0 ≤ r < p`: `(col, shift) = (r, q)` for `r ≠ 0` and
/// `(p, q − 1)` when `p` divides `β`.
pub fn increment_source(p: usize, beta: usize) -> (usize, usize) {
    let (q, r) = (beta / p, beta % p);
    if r == 0 {
        (p, q - 1)
    } else {
        (r, q)
    }
}

/// The one-period numerator `Σ_{k<s} A_{k+shift}(α, col) z^k` of `K(α, β)`.
pub fn increment_numerator(spec: &RecurrenceSpec, alpha: usize, beta: usize) -> Result<Polynomial> {
    spec.check_alpha(alpha)?;
    if beta == 0 {
        return Err(Error::BetaOutOfRange);
    }
    let (col, shift) = increment_source(spec.p, beta);
    Ok(Polynomial::from_coeffs(
        (0..spec.s)
            .map(|k| spec.coeff_at(k + shift).get(alpha - 1, col - 1).clone())
            .collect(),
    ))
}

/// `1 − z^s`.
pub fn period_denominator(s: usize) -> Polynomial {
    let mut c = vec![BigRational::zero(); s + 1];
    c[0] = BigRational::from_integer(1.into());
    c[s] = BigRational::from_integer((-1).into());
    Polynomial::from_coeffs(c)
}

/// The `(α, β)` kneading increment in reduced form.
pub fn kneading_increment(spec: &RecurrenceSpec, alpha: usize, beta: usize) -> Result<RationalFunction> {
    let num = increment_numerator(spec, alpha, beta)?;
    RationalFunction::new(num, period_denominator(spec.s))
}

/// `K = (K(α, β))_{α,β ≤ p}`.
pub fn kneading_matrix(spec: &RecurrenceSpec) -> RatFuncMatrix {
    RatFuncMatrix::from_fn(spec.p, spec.p, |i, j| {
        kneading_increment(spec, i + 1, j + 1).expect("indices within 1..=p")
    })
}

/// `K_α(β)`: `K` bordered by the column `K(·, β)` and the row
/// `(δ(α,1), …, δ(α,p), δ(α,β))`.
pub fn extended_kneading_matrix(spec: &RecurrenceSpec, alpha: usize, beta: usize) -> Result<RatFuncMatrix> {
    spec.check_alpha(alpha)?;
    if beta == 0 {
        return Err(Error::BetaOutOfRange);
    }
    let k = kneading_matrix(spec);
    extend(spec, &k, alpha, beta)
}

fn delta(i: usize, j: usize) -> RationalFunction {
    if i == j {
        RationalFunction::one()
    } else {
        RationalFunction::zero()
    }
}

/// Builds `K_α(β)` from an already computed `K`.
pub(crate) fn extend(spec: &RecurrenceSpec, k: &RatFuncMatrix, alpha: usize, beta: usize) -> Result<RatFuncMatrix> {
    let p = spec.p;
    let column: Vec<RationalFunction> = (1..=p)
        .map(|a| kneading_increment(spec, a, beta))
        .collect::<Result<_>>()?;
    Ok(RatFuncMatrix::from_fn(p + 1, p + 1, |i, j| match (i < p, j < p) {
        (true, true) => k.get(i, j).clone(),
        (true, false) => column[i].clone(),
        (false, true) => delta(alpha, j + 1),
        (false, false) => delta(alpha, beta),
    }))
}

/// `Δ = det(I − zK)`.
pub fn kneading_determinant(spec: &RecurrenceSpec) -> RationalFunction {
    determinant_of(&kneading_matrix(spec))
}

/// `Δ_α(β) = det(I − zK_α(β))`.
pub fn extended_kneading_determinant(spec: &RecurrenceSpec, alpha: usize, beta: usize) -> Result<RationalFunction> {
    Ok(determinant_of(&extended_kneading_matrix(spec, alpha, beta)?))
}

pub(crate) fn determinant_of(k: &RatFuncMatrix) -> RationalFunction {
    k.identity_minus_z_times()
        .and_then(|m| m.det())
        .expect("kneading matrices are square")
}

/// `(1 − z^s)^p · Δ`, a polynomial of degree at most `ps`.
///
/// Every increment has denominator dividing `1 − z^s`, so scaling the first
/// `p` rows of `I − zK` by it leaves a polynomial matrix.
pub fn cleared_kneading_determinant(spec: &RecurrenceSpec) -> Polynomial {
    let p = spec.p;
    let nums: Vec<Vec<Polynomial>> = (1..=p)
        .map(|a| (1..=p).map(|b| increment_numerator(spec, a, b).expect("indices within 1..=p")).collect())
        .collect();
    polynomial_det(&cleared_rows(spec, &nums, None))
}

/// `(1 − z^s)^p · Δ_α(β)`, a polynomial of degree at most `ps + 1`.
pub fn cleared_extended_determinant(spec: &RecurrenceSpec, alpha: usize, beta: usize) -> Result<Polynomial> {
    spec.check_alpha(alpha)?;
    if beta == 0 {
        return Err(Error::BetaOutOfRange);
    }
    let p = spec.p;
    let nums: Vec<Vec<Polynomial>> = (1..=p)
        .map(|a| {
            (1..=p)
                .chain([beta])
                .map(|b| increment_numerator(spec, a, b))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(polynomial_det(&cleared_rows(spec, &nums, Some((alpha, beta)))))
}

/// Rows `δ(1 − z^s) − z·num` of the cleared matrix, plus the border row
/// `δ − z·δ(α, ·)` when extending.
fn cleared_rows(spec: &RecurrenceSpec, nums: &[Vec<Polynomial>], border: Option<(usize, usize)>) -> Vec<Vec<Polynomial>> {
    let denom = period_denominator(spec.s);
    let z = Polynomial::z();
    let n = nums[0].len();
    let mut rows: Vec<Vec<Polynomial>> = nums
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, num)| {
                    let diag = if i == j { denom.clone() } else { Polynomial::zero() };
                    &diag - &(&z * num)
                })
                .collect()
        })
        .collect();
    if let Some((alpha, beta)) = border {
        let mut last: Vec<Polynomial> = (1..=spec.p)
            .map(|j| if j == alpha { -&z } else { Polynomial::zero() })
            .collect();
        last.push(&Polynomial::one() - &(if alpha == beta { z.clone() } else { Polynomial::zero() }));
        debug_assert_eq!(last.len(), n);
        rows.push(last);
    }
    rows
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

    fn example1() -> RecurrenceSpec {
        RecurrenceSpec::new(2, 1, vec![CoeffMatrix::from_i64s(&[&[1, 2], &[3, 4]]).unwrap()]).unwrap()
    }

    fn example2() -> RecurrenceSpec {
        RecurrenceSpec::new(2, 1, vec![CoeffMatrix::from_i64s(&[&[1, 1], &[1, 1]]).unwrap()]).unwrap()
    }

    fn three_periodic() -> RecurrenceSpec {
        let m = |x: i64| CoeffMatrix::from_i64s(&[&[x, x + 1], &[x + 2, x + 3]]).unwrap();
        RecurrenceSpec::new(2, 3, vec![m(0), m(10), m(20)]).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(RecurrenceSpec::new(2, 2, vec![CoeffMatrix::zeros(2)]).is_err());
        assert!(RecurrenceSpec::new(2, 1, vec![CoeffMatrix::zeros(3)]).is_err());
        assert!(RecurrenceSpec::new(0, 1, vec![]).is_err());
        assert!(RecurrenceSpec::new(1, 0, vec![]).is_err());
        assert!(CoeffMatrix::from_i64s(&[&[1, 2], &[3]]).is_err());
    }

    #[test]
    fn coeff_at_is_periodic() {
        let e1 = example1();
        assert_eq!(e1.coeff_at(7), &CoeffMatrix::from_i64s(&[&[1, 2], &[3, 4]]).unwrap());
        let t = three_periodic();
        assert_eq!(t.coeff_at(5), &t.coeffs()[2]);
        assert_eq!(t.coeff_at(0), &t.coeffs()[0]);
    }

    #[test]
    fn source_follows_basis_listing() {
        // p = 3: e_1..e_3 slot 0, e_4..e_6 slot 1, ...
        assert_eq!(increment_source(3, 1), (1, 0));
        assert_eq!(increment_source(3, 3), (3, 0));
        assert_eq!(increment_source(3, 4), (1, 1));
        assert_eq!(increment_source(3, 6), (3, 1));
        assert_eq!(increment_source(3, 8), (2, 2));
        assert_eq!(increment_source(1, 1), (1, 0));
        assert_eq!(increment_source(1, 5), (1, 4));
    }

    #[test]
    fn example1_increments() {
        let s = example1();
        assert_eq!(kneading_increment(&s, 1, 2).unwrap(), rf(&[2], &[1, -1]));
        assert_eq!(kneading_increment(&s, 2, 3).unwrap(), rf(&[3], &[1, -1]));
        for beta in 1..10 {
            let even = beta % 2 == 0;
            let k1 = if even { 2 } else { 1 };
            let k2 = if even { 4 } else { 3 };
            assert_eq!(kneading_increment(&s, 1, beta).unwrap(), rf(&[k1], &[1, -1]));
            assert_eq!(kneading_increment(&s, 2, beta).unwrap(), rf(&[k2], &[1, -1]));
        }
    }

    #[test]
    fn increment_range_errors() {
        let s = example1();
        assert_eq!(kneading_increment(&s, 0, 1), Err(Error::AlphaOutOfRange { alpha: 0, p: 2 }));
        assert_eq!(kneading_increment(&s, 3, 1), Err(Error::AlphaOutOfRange { alpha: 3, p: 2 }));
        assert_eq!(kneading_increment(&s, 1, 0), Err(Error::BetaOutOfRange));
        assert!(extended_kneading_matrix(&s, 3, 1).is_err());
        assert!(extended_kneading_determinant(&s, 0, 1).is_err());
    }

    #[test]
    fn zero_spec() {
        let z = RecurrenceSpec::zero(2, 3).unwrap();
        assert!(kneading_increment(&z, 2, 7).unwrap().is_zero());
        assert_eq!(kneading_matrix(&z), RatFuncMatrix::zeros(2, 2));
        assert!(kneading_determinant(&z).is_one());
        assert!(extended_kneading_determinant(&z, 1, 5).unwrap().is_one());
    }

    #[test]
    fn kneading_matrix_examples() {
        let k = kneading_matrix(&example1());
        let expect = [[1, 2], [3, 4]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(k.get(i, j), &rf(&[x], &[1, -1]));
            }
        }
        let k = kneading_matrix(&example2());
        assert!(k.entries().iter().all(|e| *e == rf(&[1], &[1, -1])));
    }

    #[test]
    fn small_beta_matches_direct_series() {
        // K(α, β) for β ≤ p is Σ A_n(α, β) z^n
        let t = three_periodic();
        for a in 1..=2 {
            for b in 1..=2 {
                let num = Polynomial::from_coeffs(
                    (0..3).map(|n| t.coeff_at(n).get(a - 1, b - 1).clone()).collect(),
                );
                let direct = RationalFunction::new(num, period_denominator(3)).unwrap();
                assert_eq!(kneading_increment(&t, a, b).unwrap(), direct);
            }
        }
    }

    #[test]
    fn three_periodic_shifted_increment() {
        // β = 4, p = 2: column 2 of A_{n+1}, i.e. numerator A_1(α,2) + A_2(α,2) z + A_0(α,2) z^2
        let t = three_periodic();
        let k = kneading_increment(&t, 1, 4).unwrap();
        assert_eq!(k, rf(&[11, 21, 1], &[1, 0, 0, -1]));
        // β = 5: column 1 of A_{n+2}
        let k = kneading_increment(&t, 2, 5).unwrap();
        assert_eq!(k, rf(&[22, 2, 12], &[1, 0, 0, -1]));
    }

    #[test]
    fn extended_matrix_layout() {
        let s = example1();
        let m = extended_kneading_matrix(&s, 1, 2).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.get(0, 2), &rf(&[2], &[1, -1]));
        assert_eq!(m.get(1, 2), &rf(&[4], &[1, -1]));
        assert!(m.get(2, 2).is_zero());
        assert!(m.get(2, 0).is_one());
        assert!(m.get(2, 1).is_zero());

        let m = extended_kneading_matrix(&s, 1, 3).unwrap();
        assert!(m.get(2, 0).is_one() && m.get(2, 1).is_zero() && m.get(2, 2).is_zero());

        let m = extended_kneading_matrix(&s, 2, 2).unwrap();
        assert_eq!(m.get(0, 2), m.get(0, 1));
        assert_eq!(m.get(1, 2), m.get(1, 1));
        assert!(m.get(2, 2).is_one());
    }

    #[test]
    fn determinants_of_examples() {
        assert_eq!(kneading_determinant(&example1()), rf(&[1, -7, 4], &[1, -2, 1]));
        assert_eq!(kneading_determinant(&example2()), rf(&[1, -3], &[1, -1]));
        assert_eq!(
            extended_kneading_determinant(&example1(), 1, 2).unwrap(),
            rf(&[1, -7, 2, 2], &[1, -2, 1])
        );
        // odd branch with δ(1,1) = 1, δ(1,2) = 0
        assert_eq!(
            extended_kneading_determinant(&example1(), 1, 1).unwrap(),
            rf(&[1, -8, 10, -5], &[1, -2, 1])
        );
    }
}
