//! Sum-rank metric codes built from Hamming-metric ingredient codes.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf`]: exact arithmetic in finite field towers `GF(p) ⊂ GF(q) ⊂ GF(q^m)`.
//! - [`matrix`]: dense matrices over a [`gf::Field`] and Gaussian elimination.
//! - [`spaces`]: the sum-rank metric space for an arbitrary block profile, rank
//!   counts and exact ball volumes.
//! - [`hamming`]: linear and cyclic codes in the Hamming metric, with exact
//!   minimum-distance and covering-radius engines.
//! - [`construct`]: sum-rank codes from ingredient codes (row-matrix covering
//!   construction, linearized-polynomial construction, full-block extension,
//!   Plotkin sum) and named parameter families.
//! - [`certify`]: exact sum-rank invariants by enumeration, bound evaluation and
//!   certificates.
//! - [`descriptor`]: JSON descriptors for fields, codes and certificates.

pub mod certify;
pub mod construct;
pub mod descriptor;
pub mod gf;
pub mod hamming;
pub mod matrix;
pub mod spaces;
pub mod syndrome;

mod arith;



pub use gf::{Field, FieldElement};

pub use matrix::Matrix;
pub use certify::{certify, Budgets, Certificate, Property, Verdict};
pub use construct::SumRankCode;
pub use hamming::LinearCode;
pub use spaces::{MatrixProfile, SumRankWord};


/// Version string recorded in certificates.
pub const TOOLCHAIN_VERSION: &str = concat!("sumrank ", env!("CARGO_PKG_VERSION"));
