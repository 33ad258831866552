//! Dense real/complex matrix helpers built on `nalgebra`, with singular value
//! decompositions delegated to `faer`.
//!
//! Both fields share one representation: complex entries stored as pairs of
//! reals. Real-mode matrices simply carry zero imaginary parts.

use faer::Mat;
use nalgebra::{Complex, DMatrix, QR};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::TOL_RANK;

pub type Scalar = Complex<f64>;
pub type CMatrix = DMatrix<Scalar>;

/// Underlying field of the ambient space, `β = 1` for ℝ and `β = 2` for ℂ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
}

impl ScalarField {
    pub fn beta(self) -> u8 {
        match self {
            ScalarField::Real => 1,
            ScalarField::Complex => 2,
        }
    }

    pub fn from_beta(beta: u8) -> Option<Self> {
        match beta {
            1 => Some(ScalarField::Real),
            2 => Some(ScalarField::Complex),
            _ => None,
        }
    }

    /// Least upper field of two operands; a real subspace lives inside ℂⁿ too.
    pub fn join(self, other: Self) -> Self {
        if self == ScalarField::Complex || other == ScalarField::Complex {
            ScalarField::Complex
        } else {
            ScalarField::Real
        }
    }
}

pub fn zeros(rows: usize, cols: usize) -> CMatrix {
    CMatrix::zeros(rows, cols)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Builds a real matrix from row-major entries.
pub fn from_real_rows(rows: usize, cols: usize, entries: &[f64]) -> CMatrix {
    assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
    CMatrix::from_fn(rows, cols, |i, j| Scalar::new(entries[i * cols + j], 0.0))
}

/// I.i.d. standard Gaussian entries; complex entries get independent real
/// and imaginary parts.
pub fn gaussian<R: Rng + ?Sized>(rows: usize, cols: usize, field: ScalarField, rng: &mut R) -> CMatrix {
    let mut m = CMatrix::zeros(rows, cols);
    // Fill row-major so the draw order does not depend on storage layout.
    for i in 0..rows {
        for j in 0..cols {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = match field {
                ScalarField::Real => 0.0,
                ScalarField::Complex => rng.sample(StandardNormal),
            };
            m[(i, j)] = Scalar::new(re, im);
        }
    }
    m
}

/// Squared Frobenius norm.
pub fn frobenius_sq(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

pub fn frobenius(m: &CMatrix) -> f64 {
    frobenius_sq(m).sqrt()
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn is_real(m: &CMatrix) -> bool {
    m.iter().all(|z| z.im == 0.0)
}

pub fn drop_imaginary(m: &mut CMatrix) {
    for z in m.iter_mut() {
        z.im = 0.0;
    }
}

/// Singular values in nonincreasing order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s = to_faer(m).singular_values().expect("SVD converges");
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Number of singular values above `TOL_RANK` times the largest one.
pub fn rank_of_values(values: &[f64]) -> usize {
    let Some(&top) = values.first() else { return 0 };
    if top <= 0.0 {
        return 0;
    }
    values.iter().filter(|&&s| s > TOL_RANK * top).count()
}

pub fn numerical_rank(m: &CMatrix) -> usize {
    rank_of_values(&singular_values(m))
}

/// Spectral norm `‖M‖₂ = σ_max`.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// `‖M⁺‖₂ = 1/σ_min` over the numerically nonzero singular values; zero for
/// the zero matrix.
pub fn pinv_spectral_norm(m: &CMatrix) -> f64 {
    let s = singular_values(m);
    let r = rank_of_values(&s);
    if r == 0 {
        0.0
    } else {
        1.0 / s[r - 1]
    }
}

/// Spectral condition number `κ(M) = ‖M‖₂‖M⁺‖₂`.
pub fn condition_number(m: &CMatrix) -> f64 {
    spectral_norm(m) * pinv_spectral_norm(m)
}

/// Orthonormal basis (as rows) of the row space of `raw`, one row per
/// singular value above the relative rank threshold.
pub fn row_space_basis(raw: &CMatrix) -> CMatrix {
    leading_row_space(raw, None)
}

/// The `count` leading right singular vectors of `raw`, as rows.
pub fn dominant_row_space(raw: &CMatrix, count: usize) -> CMatrix {
    leading_row_space(raw, Some(count))
}

fn leading_row_space(raw: &CMatrix, count: Option<usize>) -> CMatrix {
    let n = raw.ncols();
    if raw.nrows() == 0 || n == 0 || count == Some(0) {
        return CMatrix::zeros(0, n);
    }
    let svd = to_faer(raw).thin_svd().expect("SVD converges");
    let (values, v) = (svd.S().column_vector(), svd.V());
    let mut order: Vec<usize> = (0..values.nrows()).collect();
    order.sort_by(|&a, &b| values[b].re.total_cmp(&values[a].re));
    let sorted: Vec<f64> = order.iter().map(|&i| values[i].re).collect();
    let rank = count.unwrap_or_else(|| rank_of_values(&sorted)).min(sorted.len());
    // Rows of Vᴴ.
    CMatrix::from_fn(rank, n, |i, j| v[(j, order[i])].conj())
}

// nalgebra's complex SVD can return an inaccurate factorization for
// rank-deficient wide inputs, so decompositions go through faer.
fn to_faer(m: &CMatrix) -> Mat<Scalar> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Factorizes a full-row-rank `l × n` matrix as `A = R Q` with `R` upper
/// triangular with positive diagonal and `Q` having orthonormal rows.
///
/// Computed from the QR decomposition of the row-reversed adjoint
/// `(J A)ᴴ = Q₁ R₁`, which gives `A = (J R₁ᴴ J)(J Q₁ᴴ)`.
pub fn rq_factorize(a: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    let (l, n) = a.shape();
    let rank = numerical_rank(a);
    if l == 0 || rank < l || l > n {
        return Err(Error::RankDeficient { rank, rows: l });
    }
    let flipped = CMatrix::from_fn(n, l, |i, j| a[(l - 1 - j, i)].conj());
    let qr = QR::new(flipped);
    let q1 = qr.q();
    let r1 = qr.r();
    let mut r = CMatrix::from_fn(l, l, |i, j| r1[(l - 1 - j, l - 1 - i)].conj());
    let mut q = CMatrix::from_fn(l, n, |i, j| q1[(j, l - 1 - i)].conj());
    for i in 0..l {
        let d = r[(i, i)];
        let modulus = d.norm();
        if modulus == 0.0 {
            return Err(Error::RankDeficient { rank: i, rows: l });
        }
        let phase = d / modulus;
        for row in 0..l {
            r[(row, i)] *= phase.conj();
        }
        for col in 0..n {
            q[(i, col)] *= phase;
        }
        r[(i, i)] = Scalar::new(modulus, 0.0);
    }
    Ok((r, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    #[test]
    fn rank_of_duplicated_rows() {
        let m = from_real_rows(2, 3, &[1.0, 2.0, 3.0, 1.0, 2.0, 3.0]);
        assert_eq!(numerical_rank(&m), 1);
        assert_eq!(numerical_rank(&zeros(3, 3)), 0);
    }

    #[test]
    fn rq_of_orthonormal_rows_is_trivial() {
        let mut rng = seeded(1);
        let q0 = row_space_basis(&gaussian(3, 6, ScalarField::Complex, &mut rng));
        let (r, q) = rq_factorize(&q0).unwrap();
        assert!(max_abs_diff(&r, &identity(3)) < 1e-12);
        assert!(max_abs_diff(&q, &q0) < 1e-12);
    }

    #[test]
    fn rq_of_scaled_orthonormal_rows() {
        let mut rng = seeded(2);
        let q0 = rq_factorize(&gaussian(3, 6, ScalarField::Complex, &mut rng)).unwrap().1;
        let (r, q) = rq_factorize(&(q0.clone() * Scalar::new(2.0, 0.0))).unwrap();
        assert!(max_abs_diff(&r, &(identity(3) * Scalar::new(2.0, 0.0))) < 1e-12);
        assert!(max_abs_diff(&q, &q0) < 1e-12);
    }

    #[test]
    fn rq_reconstructs_random_gaussian() {
        let mut rng = seeded(3);
        for field in [ScalarField::Real, ScalarField::Complex] {
            let a = gaussian(3, 6, field, &mut rng);
            let (r, q) = rq_factorize(&a).unwrap();
            assert!(frobenius(&(&a - &r * &q)) <= 1e-9 * frobenius(&a));
            for i in 0..3 {
                assert!(r[(i, i)].re > 0.0 && r[(i, i)].im == 0.0);
                for j in 0..i {
                    assert!(r[(i, j)].norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn rq_rejects_rank_deficient() {
        let a = from_real_rows(2, 3, &[1.0, 0.0, 0.0, 2.0, 0.0, 0.0]);
        assert!(matches!(rq_factorize(&a), Err(Error::RankDeficient { rank: 1, rows: 2 })));
    }

    #[test]
    fn norms_of_diagonal() {
        let m = from_real_rows(2, 3, &[3.0, 0.0, 0.0, 0.0, 0.5, 0.0]);
        assert!((spectral_norm(&m) - 3.0).abs() < 1e-14);
        assert!((pinv_spectral_norm(&m) - 2.0).abs() < 1e-14);
        assert!((condition_number(&m) - 6.0).abs() < 1e-13);
    }
}
