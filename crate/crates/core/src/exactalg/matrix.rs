//! Dense matrices of rational functions and their determinants.

use std::fmt;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Row-major matrix over ℚ(z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFuncMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl RatFuncMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| RationalFunction::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &RationalFunction {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RationalFunction) {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[RationalFunction] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.map(|e| e * c)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Ok(Self { entries, ..*self })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Self { entries, ..*self })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(RationalFunction::zero(), |acc, k| acc + self.get(i, k) * rhs.get(k, j))
        }))
    }

    /// `I − z·self`, the operand of every kneading determinant.
    pub fn identity_minus_z_times(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        Self::identity(self.rows).checked_sub(&self.scale(&RationalFunction::z()))
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    /// Exact determinant.
    ///
    /// Each row is first multiplied through by the lcm of its denominators,
    /// giving a polynomial matrix. Fraction-free Bareiss elimination over ℤ[z]
    /// then yields its determinant, and the product of the row multipliers is
    /// divided back out at the end. There is no size cap; the cost is
    /// polynomial in the size and the entry degrees.
    pub fn det(&self) -> Result<RationalFunction> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RationalFunction::one());
        }

        let mut scale = Polynomial::one();
        let mut m: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = row
                .iter()
                .fold(Polynomial::one(), |acc, e| acc.lcm(e.denom()));
            m.push(
                row.iter()
                    .map(|e| {
                        let cofactor = l
                            .div_exact(e.denom())
                            .expect("denominator is nonzero")
                            .expect("lcm is a multiple of every denominator");
                        e.numer() * &cofactor
                    })
                    .collect(),
            );
            scale = &scale * &l;
        }

        let det = super::intpoly::polynomial_det(&m);
        RationalFunction::new(det, scale)
    }
}

/// One bracketed row per line.
impl fmt::Display for RatFuncMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
