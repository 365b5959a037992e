//! Exact generating functions of periodic infinite-order vector recurrences
//!
//! A recurrence `x_{n+1} = Σ_{i≥0} A_i x_{n-i}` with `p×p` rational matrices
//! satisfying `A_{n+s} = A_n` has rational generating functions. This crate
//! computes them in closed form from kneading determinants, extracts a basis of
//! the space they span, and checks every result against direct iteration of
//! the recurrence.
//!
//! Layers, bottom up:
//!
//! - [`exactalg`]: rationals, polynomials over ℚ, reduced rational functions,
//!   matrices of rational functions, determinants and rank.
//! - [`kneading`]: recurrence description, kneading increments, kneading
//!   matrices and determinants.
//! - [`genfun`]: generating functions of the standard basis, the finite
//!   spanning set, and the basis/dimension report.
//! - [`oracle`]: brute-force orbits and Taylor expansion used as an
//!   independent check.
//! - [`cli`]: spec-file parsing and the command-line front end.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod genfun;
pub mod kneading;
pub mod oracle;

pub use error::{Error, Result};
pub use exactalg::{BigRational, Polynomial, RatFuncMatrix, RationalFunction};
pub use genfun::{BasisReport, GeneratingFunctionVector, GeneratingFunctions};
pub use kneading::{CoeffMatrix, RecurrenceSpec};
pub use oracle::{InitialCondition, OrbitSegment, VerificationReport};
