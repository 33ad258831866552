use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{frobenius, numerical_rank, pinv_spectral_norm, spectral_norm, CMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Perturbation {
    pub epsilon: f64,
    /// `2ε + ε²`.
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralPerturbation {
    /// Rank deficiency `l − rank(A)`.
    pub r_d: usize,
    /// Rows of `A` forming the full-row-rank block `A₁`.
    pub rows: Vec<usize>,
    pub epsilon: f64,
    /// `2ε + ε²`.
    pub delta: f64,
    /// `(√r_d + √Δ)²`.
    pub total: f64,
}

/// Bound on `d(⟨A⟩, ⟨A + N⟩)` for a full-row-rank `A`.
pub fn perturbation_bound(a: &CMatrix, noise: &CMatrix) -> Result<Perturbation> {
    if a.shape() != noise.shape() {
        return Err(Error::InvalidArgument(format!("A is {:?} but N is {:?}", a.shape(), noise.shape())));
    }
    let rank = numerical_rank(a);
    if rank < a.nrows() {
        return Err(Error::RankDeficient { rank, rows: a.nrows() });
    }
    let epsilon = epsilon(a, noise)?;
    Ok(Perturbation { epsilon, bound: 2.0 * epsilon + epsilon * epsilon })
}

/// Bound on `d(⟨A⟩, ⟨A + N⟩)` for any `A`, splitting the noise into an
/// interference of dimension `r_d` and a perturbation of a full-row-rank block.
pub fn general_perturbation_bound(a: &CMatrix, noise: &CMatrix) -> Result<GeneralPerturbation> {
    if a.shape() != noise.shape() {
        return Err(Error::InvalidArgument(format!("A is {:?} but N is {:?}", a.shape(), noise.shape())));
    }
    let rank = numerical_rank(a);
    let mut rows = Vec::with_capacity(rank);
    for i in 0..a.nrows() {
        if rows.len() == rank {
            break;
        }
        let mut trial = rows.clone();
        trial.push(i);
        if numerical_rank(&a.select_rows(&trial)) == trial.len() {
            rows = trial;
        }
    }
    let epsilon = if rows.is_empty() { 0.0 } else { epsilon(&a.select_rows(&rows), noise)? };
    let r_d = a.nrows() - rank;
    let delta = 2.0 * epsilon + epsilon * epsilon;
    let total = ((r_d as f64).sqrt() + delta.sqrt()).powi(2);
    Ok(GeneralPerturbation { r_d, rows, epsilon, delta, total })
}

/// `((1+√2)κ(A)/(1 − ‖A⁺‖₂‖N‖₂) · ‖N‖/‖A‖₂)²`.
fn epsilon(a: &CMatrix, noise: &CMatrix) -> Result<f64> {
    let pinv = pinv_spectral_norm(a);
    let gap = pinv * spectral_norm(noise);
    if gap >= 1.0 {
        return Err(Error::PreconditionViolated(format!("‖A⁺‖₂‖N‖₂ = {gap} is not below 1")));
    }
    let a2 = spectral_norm(a);
    let kappa = a2 * pinv;
    let root = (1.0 + 2f64.sqrt()) * kappa / (1.0 - gap) * frobenius(noise) / a2;
    Ok(root * root)
}
