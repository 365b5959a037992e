//! Brute-force ground truth: iterate the recurrence directly and compare the
//! orbit with the power-series expansion of the closed-form generating
//! functions.
//!
//! Nothing here goes through kneading matrices or determinants; the only
//! shared input is the recurrence itself.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{BigRational, RationalFunction};
use crate::genfun::{GeneratingFunctionVector, GeneratingFunctions};
use crate::kneading::RecurrenceSpec;

/// `e_β` sits in slot `(β − 1) / p` as the standard vector of component
/// `(β − 1) % p + 1`.
pub fn decode_basis_index(beta: usize, p: usize) -> Result<(usize, usize)> {
    if beta == 0 {
        return Err(Error::BetaOutOfRange);
    }
    Ok(((beta - 1) / p, (beta - 1) % p + 1))
}

/// Inverse of [`decode_basis_index`].
pub fn encode_basis_index(slot: usize, component: usize, p: usize) -> usize {
    slot * p + component
}

/// A finitely supported initial condition `u = (u_0, u_1, …)`, `u_n ∈ ℚ^p`.
///
/// Slot `n` holds `v_{-n}` of the solution it generates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialCondition {
    p: usize,
    support: BTreeMap<usize, Vec<BigRational>>,
}

impl InitialCondition {
    pub fn zero(p: usize) -> Self {
        Self {
            p,
            support: BTreeMap::new(),
        }
    }

    /// The standard basis vector `e_β`.
    pub fn basis(p: usize, beta: usize) -> Result<Self> {
        let (slot, component) = decode_basis_index(beta, p)?;
        let mut v = vec![BigRational::zero(); p];
        v[component - 1] = BigRational::from_integer(1.into());
        let mut u = Self::zero(p);
        u.set_slot(slot, v)?;
        Ok(u)
    }

    pub fn from_slots(p: usize, slots: impl IntoIterator<Item = (usize, Vec<BigRational>)>) -> Result<Self> {
        let mut u = Self::zero(p);
        for (slot, v) in slots {
            u.set_slot(slot, v)?;
        }
        Ok(u)
    }

    pub fn set_slot(&mut self, slot: usize, v: Vec<BigRational>) -> Result<()> {
        if v.len() != self.p {
            return Err(Error::DimensionMismatch(format!(
                "slot {slot} has {} components, expected {}",
                v.len(),
                self.p
            )));
        }
        if v.iter().all(Zero::is_zero) {
            self.support.remove(&slot);
        } else {
            self.support.insert(slot, v);
        }
        Ok(())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// `u_slot`, zero outside the support.
    pub fn slot(&self, slot: usize) -> Vec<BigRational> {
        self.support
            .get(&slot)
            .cloned()
            .unwrap_or_else(|| vec![BigRational::zero(); self.p])
    }

    pub fn max_slot(&self) -> Option<usize> {
        self.support.keys().next_back().copied()
    }

    /// Nonzero coordinates `(β, c_β)` in the standard basis.
    pub fn coordinates(&self) -> impl Iterator<Item = (usize, BigRational)> + '_ {
        self.support.iter().flat_map(move |(&slot, v)| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (encode_basis_index(slot, j + 1, self.p), c.clone()))
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.combine(c, &Self::zero(self.p), &BigRational::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let one = BigRational::from_integer(1.into());
        self.combine(&one, other, &one)
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &BigRational, other: &Self, b: &BigRational) -> Self {
        assert_eq!(self.p, other.p, "initial conditions of different dimension");
        let mut out = Self::zero(self.p);
        let slots: std::collections::BTreeSet<usize> =
            self.support.keys().chain(other.support.keys()).copied().collect();
        for slot in slots {
            let v = self
                .slot(slot)
                .iter()
                .zip(other.slot(slot))
                .map(|(x, y)| a * x + b * y)
                .collect();
            out.set_slot(slot, v).expect("dimension checked");
        }
        out
    }
}

/// `v_0, …, v_N` of the solution generated by an initial condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSegment {
    pub values: Vec<Vec<BigRational>>,
}

/// Runs `v_{n+1} = Σ_{i≥0} A_i v_{n−i}` with `v_{−k} = u_k`.
///
/// The sum reaches back to `v_{−max_slot}`. Since `A_i` depends only on
/// `i mod s`, terms are grouped by residue: with `R_m = Σ_{j ≤ m, j ≡ m (mod s)} v_j`,
/// `v_{n+1} = Σ_{k<s} A_k R_{n−k}`, and `R_m = v_m + R_{m−s}`.
pub fn iterate(spec: &RecurrenceSpec, u: &InitialCondition, terms: usize) -> OrbitSegment {
    let p = spec.p();
    let s = spec.s();
    assert_eq!(u.p(), p, "initial condition has the wrong dimension");
    let depth = u.max_slot().unwrap_or(0);
    // running[j] holds R_{j − depth}
    let mut running: Vec<Vec<BigRational>> = Vec::with_capacity(depth + terms + 1);
    let push = |running: &mut Vec<Vec<BigRational>>, v: &[BigRational]| {
        let j = running.len();
        let r = if j >= s {
            running[j - s].iter().zip(v).map(|(a, b)| a + b).collect()
        } else {
            v.to_vec()
        };
        running.push(r);
    };
    for k in (1..=depth).rev() {
        push(&mut running, &u.slot(k));
    }
    let mut values: Vec<Vec<BigRational>> = Vec::with_capacity(terms + 1);
    values.push(u.slot(0));
    push(&mut running, &values[0]);
    for n in 0..terms {
        let mut next = vec![BigRational::zero(); p];
        for k in 0..s {
            let Some(j) = (n + depth).checked_sub(k) else { break };
            let r = &running[j];
            if r.iter().all(Zero::is_zero) {
                continue;
            }
            for (acc, x) in next.iter_mut().zip(spec.coeffs()[k].apply(r)) {
                *acc += x;
            }
        }
        push(&mut running, &next);
        values.push(next);
    }
    OrbitSegment { values }
}

/// Power-series coefficients `c_0..c_N` of `num/den`, solving `num = den·Σ c_n z^n`.
///
/// Runs over the integer form `a/b` of the fraction on `e_n = b_0^{n+1} c_n`,
/// which satisfies `e_n = b_0^n a_n − Σ_{k≥1} b_k b_0^{k−1} e_{n−k}`.
pub fn taylor_series(f: &RationalFunction, terms: usize) -> Result<Vec<BigRational>> {
    if f.value_at_zero().is_none() {
        return Err(Error::NotExpandable);
    }
    let (num, den) = f.integral_parts();
    let integer = |c: &BigRational| {
        debug_assert!(c.is_integer());
        c.to_integer()
    };
    let a: Vec<BigInt> = num.coeffs().iter().map(integer).collect();
    let b: Vec<BigInt> = den.coeffs().iter().map(integer).collect();
    let b0 = &b[0];
    // powers[k] = b_0^k
    let mut powers = vec![BigInt::one()];
    for k in 1..=terms + 1 {
        powers.push(&powers[k - 1] * b0);
    }
    let mut e: Vec<BigInt> = Vec::with_capacity(terms + 1);
    let mut out = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut acc = a.get(n).map_or_else(BigInt::zero, |an| an * &powers[n]);
        for (k, bk) in b.iter().enumerate().skip(1).take(n) {
            if !bk.is_zero() {
                acc -= bk * &powers[k - 1] * &e[n - k];
            }
        }
        out.push(BigRational::new(acc.clone(), powers[n + 1].clone()));
        e.push(acc);
    }
    Ok(out)
}

/// Coefficient vectors `v_0..v_N` of a generating-function vector.
pub fn taylor(g: &GeneratingFunctionVector, terms: usize) -> Result<Vec<Vec<BigRational>>> {
    let series = g
        .components()
        .iter()
        .map(|c| taylor_series(c, terms))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=terms)
        .map(|n| series.iter().map(|s| s[n].clone()).collect())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Power of `z` at which the two sequences first differ.
    pub index: usize,
    /// `v_index` from direct iteration.
    pub expected: Vec<BigRational>,
    /// Coefficient of `z^index` in the closed form.
    pub actual: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub beta: usize,
    pub terms: usize,
    pub pass: bool,
    pub mismatch: Option<Mismatch>,
}

/// Default verification depth.
pub const DEFAULT_TERMS: usize = 40;

/// Compares the closed-form `G(e_β)` with the iterated orbit of `e_β` up to `z^terms`.
pub fn verify(spec: &RecurrenceSpec, beta: usize, terms: usize) -> Result<VerificationReport> {
    verify_against(spec, spec, beta, terms)
}

/// As [`verify`], with the generating functions taken from `closed_form`
/// and the orbit from `reference`. Lets a test corrupt one side only.
pub fn verify_against(
    closed_form: &RecurrenceSpec,
    reference: &RecurrenceSpec,
    beta: usize,
    terms: usize,
) -> Result<VerificationReport> {
    let g = GeneratingFunctions::new(closed_form).generating_function(beta)?;
    compare(reference, &g, beta, terms)
}

/// Verifies every `β` in `betas`, reusing one set of kneading data.
pub fn verify_all(spec: &RecurrenceSpec, betas: &[usize], terms: usize) -> Result<Vec<VerificationReport>> {
    verify_all_against(spec, spec, betas, terms)
}

pub fn verify_all_against(
    closed_form: &RecurrenceSpec,
    reference: &RecurrenceSpec,
    betas: &[usize],
    terms: usize,
) -> Result<Vec<VerificationReport>> {
    let gf = GeneratingFunctions::new(closed_form);
    betas
        .par_iter()
        .map(|&beta| compare(reference, &gf.generating_function(beta)?, beta, terms))
        .collect()
}

fn compare(
    reference: &RecurrenceSpec,
    g: &GeneratingFunctionVector,
    beta: usize,
    terms: usize,
) -> Result<VerificationReport> {
    let series = taylor(g, terms)?;
    let orbit = iterate(reference, &InitialCondition::basis(reference.p(), beta)?, terms);
    let mismatch = series
        .into_iter()
        .zip(orbit.values)
        .enumerate()
        .find(|(_, (a, e))| a != e)
        .map(|(index, (actual, expected))| Mismatch { index, expected, actual });
    Ok(VerificationReport {
        beta,
        terms,
        pass: mismatch.is_none(),
        mismatch,
    })
}
