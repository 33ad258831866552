//! Minimum-distance decoding and its correctness conditions.

use serde::Serialize;

use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::subspace::Subspace;
use crate::TOL_EQUAL;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecodeResult {
    pub codeword_index: usize,
    pub distance_to_received: f64,
    /// Second smallest distance, or infinity for a one-codeword code.
    pub runner_up_distance: f64,
    /// Whether the nearest codeword beats the runner-up by more than `TOL_EQUAL`.
    pub unique: bool,
}

/// The codeword nearest to `received`, ties going to the lowest index.
pub fn decode(code: &SubspaceCode, received: &Subspace) -> Result<DecodeResult> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    if received.ambient_dim() != code.ambient_dim() {
        return Err(Error::AmbientMismatch(code.ambient_dim(), received.ambient_dim()));
    }
    let target = received.projection();
    let distances = code.projections().iter().map(|p| p.distance(&target)).collect::<Result<Vec<f64>>>()?;
    let nearest = distances.iter().copied().fold(f64::INFINITY, f64::min);
    // Distances within TOL_EQUAL of the minimum count as ties.
    let best = distances.iter().position(|&d| d <= nearest + TOL_EQUAL).expect("code is nonempty");
    let best_d = distances[best];
    let second_d = distances
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, &d)| d)
        .fold(f64::INFINITY, f64::min)
        .max(best_d);
    Ok(DecodeResult {
        codeword_index: best,
        distance_to_received: best_d,
        runner_up_distance: second_d,
        unique: second_d - best_d > TOL_EQUAL,
    })
}

/// `2(ρ + t) < d_min`.
pub fn guarantee_noiseless(d_min: f64, rho: f64, t: f64) -> bool {
    2.0 * (rho + t) < d_min
}

/// `4(√ρ + √t)² < d_min`, the condition obtained from the chordal metric.
pub fn guarantee_chordal(d_min: f64, rho: f64, t: f64) -> bool {
    4.0 * (rho.sqrt() + t.sqrt()).powi(2) < d_min
}

/// `ρ + t + (√(ρ+t+Δ) + √Δ + 2√r_d)² < d_min`.
pub fn guarantee_noisy(d_min: f64, rho: f64, t: f64, delta: f64, r_d: f64) -> bool {
    noisy_radius(rho, t, delta, r_d) < d_min
}

/// Left-hand side of the noisy decoding condition.
pub fn noisy_radius(rho: f64, t: f64, delta: f64, r_d: f64) -> f64 {
    rho + t + ((rho + t + delta).sqrt() + delta.sqrt() + 2.0 * r_d.sqrt()).powi(2)
}

/// Largest `Δ` for which `guarantee_noisy` can still hold at the given
/// `(ρ, t, r_d)`, or `None` when it fails already at `Δ = 0`.
pub fn max_noisy_delta(d_min: f64, rho: f64, t: f64, r_d: f64) -> Option<f64> {
    if !guarantee_noisy(d_min, rho, t, 0.0, r_d) {
        return None;
    }
    // The radius grows without bound in Δ, so a doubling search brackets the root.
    let mut hi = 1.0;
    while noisy_radius(rho, t, hi, r_d) < d_min {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if noisy_radius(rho, t, mid, r_d) < d_min {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}
