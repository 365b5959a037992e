//! Generating functions of the standard basis and a basis of the space they span.
//!
//! Each component is obtained from the kneading determinants through
//! `z·G_α(e_β) = 1 − Δ_α(β)/Δ`, i.e. `G_α(e_β) = (Δ − Δ_α(β)) / (zΔ)`.
//! Because `G(e_{β+sp}) = G(e_β)` whenever `β > p`, the vectors
//! `G(e_1), …, G(e_{(s+1)p})` already span every generating function.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{rank_and_select, BigRational, Polynomial, RatFuncMatrix, RationalFunction};
use crate::kneading::{self, RecurrenceSpec};
use crate::oracle::InitialCondition;

/// `(G_1, …, G_p)`, each expandable as a power series at `z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratingFunctionVector {
    components: Vec<RationalFunction>,
}

impl GeneratingFunctionVector {
    pub fn new(components: Vec<RationalFunction>) -> Result<Self> {
        if components.iter().any(|c| c.value_at_zero().is_none()) {
            return Err(Error::NotExpandable);
        }
        Ok(Self { components })
    }

    pub fn zero(p: usize) -> Self {
        Self {
            components: vec![RationalFunction::zero(); p],
        }
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.components
    }

    pub fn into_components(self) -> Vec<RationalFunction> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RationalFunction::is_zero)
    }

    /// `self + c·other`, componentwise.
    pub fn add_scaled(&self, c: &BigRational, other: &Self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + &b.scale(c))
                .collect(),
        }
    }
}

/// The finite spanning set together with the greedily selected basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    /// `G(e_1), …, G(e_{(s+1)p})`; entry `i` belongs to `β = i + 1`.
    pub spanning: Vec<GeneratingFunctionVector>,
    /// Ascending `β` values whose generating functions form the basis.
    pub selected_betas: Vec<usize>,
    pub dimension: usize,
}

/// Kneading data of one recurrence, with `K` and `Δ` computed once.
///
/// Determinants are kept as `(1 − z^s)^p` multiples, which are polynomials,
/// so each component `(Δ − Δ_α(β)) / (zΔ)` needs a single reduction.
#[derive(Clone, Debug)]
pub struct GeneratingFunctions<'a> {
    spec: &'a RecurrenceSpec,
    kneading: RatFuncMatrix,
    cleared_delta: Polynomial,
    clearing: Polynomial,
    delta: RationalFunction,
}

impl<'a> GeneratingFunctions<'a> {
    pub fn new(spec: &'a RecurrenceSpec) -> Self {
        let kneading = kneading::kneading_matrix(spec);
        let cleared_delta = kneading::cleared_kneading_determinant(spec);
        let clearing = kneading::period_denominator(spec.s()).pow(spec.p() as u32);
        let delta = RationalFunction::new(cleared_delta.clone(), clearing.clone()).expect("1 − z^s is nonzero");
        Self { spec, kneading, cleared_delta, clearing, delta }
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        self.spec
    }

    pub fn kneading_matrix(&self) -> &RatFuncMatrix {
        &self.kneading
    }

    /// `Δ`.
    pub fn kneading_determinant(&self) -> &RationalFunction {
        &self.delta
    }

    /// `Δ_α(β)`.
    pub fn extended_determinant(&self, alpha: usize, beta: usize) -> Result<RationalFunction> {
        let q = kneading::cleared_extended_determinant(self.spec, alpha, beta)?;
        RationalFunction::new(q, self.clearing.clone())
    }

    /// `G(e_β)`.
    pub fn generating_function(&self, beta: usize) -> Result<GeneratingFunctionVector> {
        if beta == 0 {
            return Err(Error::BetaOutOfRange);
        }
        let components = (1..=self.spec.p())
            .map(|alpha| {
                let q = kneading::cleared_extended_determinant(self.spec, alpha, beta)?;
                let diff = &self.cleared_delta - &q;
                if !diff.constant_term().is_zero() {
                    return Err(Error::NotDivisibleByZ { alpha, beta });
                }
                let num = Polynomial::from_coeffs(diff.into_coeffs().into_iter().skip(1).collect());
                RationalFunction::new(num, self.cleared_delta.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratingFunctionVector::new(components)
    }

    /// `G(e_1), …, G(e_{(s+1)p})`, computed in parallel.
    pub fn spanning_set(&self) -> Result<Vec<GeneratingFunctionVector>> {
        (1..=self.spec.spanning_len())
            .into_par_iter()
            .map(|beta| self.generating_function(beta))
            .collect()
    }

    pub fn basis_and_dimension(&self) -> Result<BasisReport> {
        let spanning = self.spanning_set()?;
        let vectors = flatten(self.spec, &spanning);
        let sel = rank_and_select(&vectors)?;
        Ok(BasisReport {
            selected_betas: sel.indices.iter().map(|i| i + 1).collect(),
            dimension: sel.rank,
            spanning,
        })
    }

    /// `G(u) = Σ_β c_β G(e_β)`, with every `β` folded into `1..=(s+1)p`.
    pub fn generating_function_of(&self, u: &InitialCondition) -> Result<GeneratingFunctionVector> {
        let p = self.spec.p();
        if u.p() != p {
            return Err(Error::DimensionMismatch(format!(
                "initial condition has dimension {}, recurrence has {p}",
                u.p()
            )));
        }
        let mut coords: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (beta, c) in u.coordinates() {
            *coords.entry(fold_beta(self.spec, beta)).or_insert_with(BigRational::zero) += c;
        }
        let mut acc = GeneratingFunctionVector::zero(p);
        for (beta, c) in coords.into_iter().filter(|(_, c)| !c.is_zero()) {
            acc = acc.add_scaled(&c, &self.generating_function(beta)?);
        }
        Ok(acc)
    }
}

/// Smallest `β' ≡ β (mod sp)` with `β' ≤ (s+1)p`, for `β > (s+1)p`; identity otherwise.
pub fn fold_beta(spec: &RecurrenceSpec, beta: usize) -> usize {
    let top = spec.spanning_len();
    if beta <= top {
        return beta;
    }
    let period = spec.s() * spec.p();
    beta - (beta - top).div_ceil(period) * period
}

/// Puts all vectors over the lcm `L` of their denominators and lists the
/// coefficients of the `p` numerators, each padded to `deg L + ps + 1`.
pub fn flatten(spec: &RecurrenceSpec, vectors: &[GeneratingFunctionVector]) -> Vec<Vec<BigRational>> {
    let lcm = vectors
        .iter()
        .flat_map(|v| v.components())
        .fold(Polynomial::one(), |acc, c| acc.lcm(c.denom()));
    let width = lcm.degree().unwrap_or(0) + spec.p() * spec.s() + 1;
    vectors
        .iter()
        .map(|v| {
            let mut flat = Vec::with_capacity(width * v.len());
            for c in v.components() {
                let cofactor = lcm
                    .div_exact(c.denom())
                    .expect("denominator is nonzero")
                    .expect("lcm is a multiple of every denominator");
                let num = c.numer() * &cofactor;
                assert!(num.coeffs().len() <= width, "numerator degree exceeds the bound");
                flat.extend(num.coeffs().iter().cloned());
                flat.resize(flat.len() + width - num.coeffs().len(), BigRational::zero());
            }
            flat
        })
        .collect()
}

pub fn generating_function(spec: &RecurrenceSpec, beta: usize) -> Result<GeneratingFunctionVector> {
    GeneratingFunctions::new(spec).generating_function(beta)
}

pub fn spanning_set(spec: &RecurrenceSpec) -> Result<Vec<GeneratingFunctionVector>> {
    GeneratingFunctions::new(spec).spanning_set()
}

pub fn basis_and_dimension(spec: &RecurrenceSpec) -> Result<BasisReport> {
    GeneratingFunctions::new(spec).basis_and_dimension()
}

pub fn generating_function_of(spec: &RecurrenceSpec, u: &InitialCondition) -> Result<GeneratingFunctionVector> {
    GeneratingFunctions::new(spec).generating_function_of(u)
}
