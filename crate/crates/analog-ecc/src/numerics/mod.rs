//! Scalar tower and dense matrix/vector kernels shared by every other module.
//!
//! All linear algebra in this crate is generic over [`Scalar`], which has
//! exactly two implementations: `f64` for fast campaigns and [`Rational`]
//! (arbitrary-precision `p/q`) for exact certificates. A computation runs
//! entirely in one mode; mixing modes is a type error.

mod matrix;
mod scalar;

pub use matrix::{Matrix, Vector};
pub use scalar::{ExtendedScalar, Rational, Scalar};
