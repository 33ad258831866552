use rand::Rng;
use rayon::prelude::*;

use crate::bounds::random_coding_rate;
use crate::error::{Error, Result};
use crate::linalg::ScalarField;
use crate::rng::trial_rng;
use crate::subspace::{Projection, Subspace};
use crate::TOL_EQUAL;

use super::SubspaceCode;

/// Fresh draws allowed per codeword before giving up on distinctness.
const RETRIES_PER_CODEWORD: usize = 64;

/// `size` independent uniform `m`-dimensional subspaces of an `n`-dimensional space.
pub fn random_ensemble_code<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    size: usize,
    field: ScalarField,
    rng: &mut R,
) -> Result<SubspaceCode> {
    if size < 2 {
        return Err(Error::InvalidArgument(format!("ensemble needs at least 2 codewords, got {size}")));
    }
    if m > n {
        return Err(Error::DimensionOverflow { needed: m, ambient: n });
    }
    let mut codewords: Vec<Subspace> = Vec::with_capacity(size);
    let mut projections: Vec<Projection> = Vec::with_capacity(size);
    while codewords.len() < size {
        let mut accepted = false;
        for _ in 0..RETRIES_PER_CODEWORD {
            let candidate = Subspace::random(n, m, field, rng)?;
            let p = candidate.projection();
            let fresh = projections.iter().all(|c| c.distance(&p).map(|d| d > TOL_EQUAL).unwrap_or(false));
            if fresh {
                codewords.push(candidate);
                projections.push(p);
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::DegenerateEnsemble { wanted: size });
        }
    }
    SubspaceCode::new(codewords)
}

/// Outcome of drawing many random codes at the random-coding rate.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct EnsembleReport {
    pub n: usize,
    pub m: usize,
    pub size: usize,
    pub delta_target: f64,
    pub trials: usize,
    pub successes: usize,
    pub frequency: f64,
    pub mean_delta: f64,
}

/// Draws `trials` codes with `M = max(2, ⌊exp(nR)⌋)` codewords, where `R` is the
/// random-coding rate for `delta_target`, and counts how often the normalized
/// minimum distance reaches the target.
pub fn ensemble_success_frequency(
    n: usize,
    m: usize,
    field: ScalarField,
    delta_target: f64,
    epsilon: f64,
    trials: usize,
    seed: u64,
) -> Result<EnsembleReport> {
    let rate = random_coding_rate(m, delta_target, field.beta(), epsilon)?;
    let size = ((n as f64 * rate).exp().floor() as usize).max(2);
    let deltas = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            random_ensemble_code(n, m, size, field, &mut rng)?.parameters_with_cap(usize::MAX).map(|p| p.delta)
        })
        .collect::<Result<Vec<f64>>>()?;
    let successes = deltas.iter().filter(|&&d| d >= delta_target).count();
    Ok(EnsembleReport {
        n,
        m,
        size,
        delta_target,
        trials,
        successes,
        frequency: successes as f64 / trials.max(1) as f64,
        mean_delta: deltas.iter().sum::<f64>() / trials.max(1) as f64,
    })
}
