//! Rank and greedy basis selection over ℚ.

use num_traits::Zero;

use super::rational::BigRational;
use crate::error::{Error, Result};

/// Outcome of [`rank_and_select`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    /// Indices, ascending, of the lexicographically first maximal independent subset.
    pub indices: Vec<usize>,
    pub rank: usize,
}

/// Scans the vectors left to right, keeping each one that is independent of
/// those already kept.
///
/// Kept vectors are stored in reduced echelon form, so membership of a new
/// vector in their span is decided by reducing it against each pivot.
pub fn rank_and_select(vectors: &[Vec<BigRational>]) -> Result<Selection> {
    let Some(first) = vectors.first() else {
        return Ok(Selection { indices: Vec::new(), rank: 0 });
    };
    let len = first.len();
    if let Some(bad) = vectors.iter().position(|v| v.len() != len) {
        return Err(Error::DimensionMismatch(format!(
            "vector {bad} has length {}, expected {len}",
            vectors[bad].len()
        )));
    }

    // (pivot column, row scaled so the pivot entry is 1)
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut indices = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (col, row) in &echelon {
            if w[*col].is_zero() {
                continue;
            }
            let f = w[*col].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let Some(col) = w.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = w[col].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        // Keep earlier rows reduced at the new pivot column.
        for (_, row) in echelon.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        echelon.push((col, w));
        indices.push(idx);
    }
    let rank = indices.len();
    Ok(Selection { indices, rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn standard_basis() {
        let s = rank_and_select(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2]);
        assert_eq!(s.rank, 3);
    }

    #[test]
    fn duplicate_is_dropped() {
        let s = rank_and_select(&[v(&[2, 3]), v(&[2, 3])]).unwrap();
        assert_eq!(s.indices, vec![0]);
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn empty_and_zero_inputs() {
        assert_eq!(rank_and_select(&[]).unwrap().rank, 0);
        let s = rank_and_select(&[v(&[0, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(s.indices, vec![1]);
    }

    #[test]
    fn dependent_combination_is_skipped() {
        let s = rank_and_select(&[v(&[1, 2, 0]), v(&[0, 1, 1]), v(&[2, 5, 1]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(s.indices, vec![0, 1, 3]);
    }

    #[test]
    fn ragged_input_is_rejected() {
        assert!(rank_and_select(&[v(&[1]), v(&[1, 2])]).is_err());
    }
}
