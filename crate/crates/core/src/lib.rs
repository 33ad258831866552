//! Analog subspace codes over the real and complex fields.
//!
//! The crate covers the squared projection distance on the set of all
//! subspaces of `L^n`, the analog operator channel (erasures, interference
//! and its noisy extension), character-polynomial codes built from additive
//! characters of finite fields, minimum-distance decoding together with its
//! closed-form decodability conditions, and the classical rate/distance bound
//! calculators used to compare code families.

pub mod bounds;
pub mod channel;
pub mod codes;
pub mod decoder;
pub mod error;
pub mod field;
pub mod linalg;
pub mod rng;
pub mod subspace;

pub use error::{Error, Result};
pub use linalg::{CMatrix, Scalar, ScalarField};
pub use subspace::{Projection, Subspace};

/// Orthonormality tolerance for bases and projections.
pub const TOL_ORTH: f64 = 1e-10;
/// Relative singular-value threshold below which a direction is treated as null.
pub const TOL_RANK: f64 = 1e-9;
/// Distances below this count as equal subspaces.
pub const TOL_EQUAL: f64 = 1e-9;
