use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{gaussian, CMatrix, Scalar, ScalarField};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixChannelSpec {
    /// Rows received.
    pub l: usize,
    /// Rows transmitted.
    pub m: usize,
    /// Interference rows.
    pub t: usize,
    pub noise_sigma: f64,
    /// Use `H = I` instead of a random transfer matrix.
    #[serde(default)]
    pub identity_transfer: bool,
    #[serde(default = "complex_field")]
    pub field: ScalarField,
}

fn complex_field() -> ScalarField {
    ScalarField::Complex
}

#[derive(Debug, Clone)]
pub struct MatrixChannelOutput {
    /// `Y = HX + GE + N`.
    pub y: CMatrix,
    /// The noiseless signal `A = HX + GE`.
    pub a: CMatrix,
}

/// Samples `H`, `G`, `E` and `N` with i.i.d. Gaussian entries and returns `Y` and `A`.
pub fn apply_matrix_channel<R: Rng + ?Sized>(x: &CMatrix, spec: &MatrixChannelSpec, rng: &mut R) -> Result<MatrixChannelOutput> {
    if spec.l == 0 || spec.m == 0 {
        return Err(Error::InvalidArgument("l and m must be positive".into()));
    }
    if spec.noise_sigma.is_nan() || spec.noise_sigma < 0.0 {
        return Err(Error::InvalidArgument(format!("noise sigma must be nonnegative, got {}", spec.noise_sigma)));
    }
    if x.nrows() != spec.m {
        return Err(Error::DimensionMismatch(x.nrows(), spec.m));
    }
    let n = x.ncols();
    let h = if spec.identity_transfer {
        CMatrix::identity(spec.l, spec.m)
    } else {
        gaussian(spec.l, spec.m, spec.field, rng)
    };
    let g = gaussian(spec.l, spec.t, spec.field, rng);
    let e = gaussian(spec.t, n, spec.field, rng);
    let noise = gaussian(spec.l, n, spec.field, rng) * Scalar::new(spec.noise_sigma, 0.0);
    let a = h * x + g * e;
    Ok(MatrixChannelOutput { y: &a + noise, a })
}

/// Edge gains of the two-path example network: the first path reaches the
/// sink through one edge (gain `h1`) and shares it with an interferer (gain
/// `g`); the second path crosses two edges (gains `h2`, `h3`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure1Gains {
    pub h1: Scalar,
    pub h2: Scalar,
    pub h3: Scalar,
    pub g: Scalar,
}

/// `Y = [h1; h2·h3]·x + [g; 0]·e` for a single transmitted row `x` and interference row `e`.
pub fn figure1_channel(x: &CMatrix, e: &CMatrix, gains: Figure1Gains) -> Result<CMatrix> {
    if x.nrows() != 1 || e.nrows() != 1 {
        return Err(Error::InvalidArgument("expected single-row source and interference".into()));
    }
    if x.ncols() != e.ncols() {
        return Err(Error::AmbientMismatch(x.ncols(), e.ncols()));
    }
    let h = CMatrix::from_column_slice(2, 1, &[gains.h1, gains.h2 * gains.h3]);
    let g = CMatrix::from_column_slice(2, 1, &[gains.g, Scalar::new(0.0, 0.0)]);
    Ok(h * x + g * e)
}
