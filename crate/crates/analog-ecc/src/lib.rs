//! Single-error detection for linear codes over the reals.
//!
//! A real `[n, k]` code is a `k`-dimensional subspace of `ℝⁿ`, given here by a
//! full-row-rank parity-check matrix. The library computes the code's 1-height
//! (the largest ratio between the biggest and second-biggest absolute
//! coordinate over all nonzero codewords) and the derived detection threshold,
//! builds the block constructions that attain the known lower bounds exactly,
//! simulates the bounded-noise-plus-outlier channel with a sound detector, and
//! applies the same codes as checksums in a partitioned fault-tolerant GEMM.
//!
//! Everything is generic over a scalar type: `f64` for fast campaigns and
//! arbitrary-precision rationals for exact tightness certificates. See the
//! `examples/` directory for one runnable program per capability.

pub mod abft;
pub mod channel;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod heights;
pub mod lp;
pub mod numerics;
pub mod zonotope;

pub use error::{Error, Result};
pub use heights::{CodeSpec, ExtendedScalar, HeightReport, Method};
pub use numerics::{Matrix, Rational, Scalar, Vector};
