//! Exact computational verification of graded section algebras attached to
//! linear systems of quadrics.
//!
//! The crate is organized around a small stack of exact tools:
//!
//! - [`linalg`]: arbitrary-precision rational sparse linear algebra (ranks,
//!   kernels, subspace arithmetic) — everything downstream reduces to it.
//! - [`partitions`]: Young diagram combinatorics, Schur polynomial characters,
//!   and character decomposition in the dominance order.
//! - [`clifford`]: quadric families, exact Clifford multiplication of graded
//!   sections, cohomology dimension tables.
//! - [`graded`]: a generic engine for graded algebras presented by generators
//!   and relations — Hilbert series, minimal relations, quadratic duals,
//!   Koszul and Frobenius certificates.
//! - [`maximal`] / [`minimal`]: the verification suites for the two families
//!   of interest (the complete linear system of quadrics, and n-dimensional
//!   base-point-free systems), emitting [`report`] records.
//!
//! All arithmetic is exact; no operation introduces rounding. Heavy inner
//! loops are data-parallel and run on rayon when the `parallel` feature
//! (default) is enabled; disabling it yields a bit-identical sequential
//! build.

pub mod clifford;
pub mod graded;
pub mod linalg;
pub mod maximal;
pub mod minimal;
pub mod par;
pub mod partitions;
pub mod report;

mod error;

pub use error::{Error, Result};
