//! Exact algebra over ℚ: rationals, polynomials in `z`, rational functions,
//! matrices of rational functions, determinants and rank.

mod intpoly;
mod matrix;
mod poly;
mod rank;
mod ratfunc;
mod rational;

pub use intpoly::polynomial_det;
pub use matrix::RatFuncMatrix;
pub use poly::Polynomial;
pub use rank::{rank_and_select, Selection};
pub use ratfunc::RationalFunction;
pub use rational::{format_rational, parse_rational, BigRational, ParseRationalError};
