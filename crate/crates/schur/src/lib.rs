//! Exact-arithmetic toolkit for generalized (q-)Schur algebras.
//!
//! Starting from a finite-type root datum and a saturated set of dominant
//! weights, this crate constructs the finite point variety attached to the
//! orbit set, the vanishing-ideal generators and interpolation idempotents of
//! its coordinate ring, classical and quantized presentation data, character
//! and dimension counts, and a concrete matrix model (type A, classical) that
//! cross-checks the dimension identity. All arithmetic is exact: Laurent
//! polynomials in `v` over arbitrary-precision rationals, big-integer weight
//! multiplicities, and rational linear algebra.

pub mod characters;
pub mod error;
pub mod exec;
pub mod idealgen;
pub mod laurent;
pub mod linalg;
pub mod matrixoracle;
pub mod rootdata;
pub mod spinb;
pub mod weylgroup;

pub use error::SchurError;
pub use laurent::{KPolynomial, VLaurent};
pub use rootdata::{CartanDatum, RootDatum, Weight};
pub use weylgroup::{SaturatedSet, WeightSet};
