//! Directed cycle counting in tournaments and step tournamentons.
//!
//! The crate is split along the lines of the computation:
//!
//! - [`tournament`]: the combinatorial side. Generators, exact cycle counts
//!   by subset dynamic programming, the degree-sequence formula for 3-cycles
//!   and the census of 4-vertex subtournaments.
//! - [`spectral`]: dense real matrices, traces of powers and eigenvalue
//!   solvers (Hessenberg/QR for general matrices, Jacobi for the symmetric
//!   square of a skew-symmetric matrix).
//! - [`cyclic_index`]: ±1 skew-symmetric sign matrices, their cyclic index,
//!   sign-equivalence and the exhaustive searches over orders 4 and 8.
//! - [`tournamenton`]: step tournamentons, the carousel limit object, cycle
//!   densities in the limit and numeric checkers for the trace inequalities.

#![allow(clippy::needless_range_loop)]

pub mod cyclic_index;
mod error;
pub mod numfmt;
pub mod spectral;
pub mod tournament;
pub mod tournamenton;

pub use error::{Error, Result};
