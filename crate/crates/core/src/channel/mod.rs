//! The operator channel, its noisy extension, and the matrix channel beneath them.

mod matrix;
mod perturbation;

pub use matrix::{apply_matrix_channel, figure1_channel, Figure1Gains, MatrixChannelOutput, MatrixChannelSpec};
pub use perturbation::{general_perturbation_bound, perturbation_bound, GeneralPerturbation, Perturbation};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::gaussian;
use crate::subspace::{distance, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorChannelSpec {
    /// Dimension kept by the erasure operator.
    pub k: usize,
    /// Dimension of the inserted error subspace.
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoisyChannelSpec {
    pub base: OperatorChannelSpec,
    /// Rotation budget on the distance scale.
    pub delta: f64,
    /// Dimension of the noise interference.
    pub r_d: usize,
}

#[derive(Debug, Clone)]
pub struct ChannelOutput {
    pub received: Subspace,
    pub rho: usize,
    pub t: usize,
    /// Distance actually moved by the rotation, 0 for the noiseless channel.
    pub delta_rot: f64,
    pub r_d: usize,
}

/// A uniformly random `k`-dimensional subspace of `u`, or `u` itself when `dim u ≤ k`.
pub fn erase<R: Rng + ?Sized>(u: &Subspace, k: usize, rng: &mut R) -> Subspace {
    if u.dim() <= k {
        return u.clone();
    }
    if k == 0 {
        return Subspace::zero(u.ambient_dim(), u.field());
    }
    let mix = gaussian(k, u.dim(), u.field(), rng);
    Subspace::row_space_in(&(mix * u.basis()), u.field())
}

/// A uniformly random `t`-dimensional subspace of `u⊥`.
pub fn random_error_subspace<R: Rng + ?Sized>(u: &Subspace, t: usize, rng: &mut R) -> Result<Subspace> {
    let n = u.ambient_dim();
    if u.dim() + t > n {
        return Err(Error::DimensionOverflow { needed: u.dim() + t, ambient: n });
    }
    if t == 0 {
        return Ok(Subspace::zero(n, u.field()));
    }
    let perp = u.complement();
    let mix = gaussian(t, perp.dim(), u.field(), rng);
    Ok(Subspace::row_space_in(&(mix * perp.basis()), u.field()))
}

/// `V = H_k(U) ⊕ E`.
pub fn apply_operator_channel<R: Rng + ?Sized>(u: &Subspace, spec: OperatorChannelSpec, rng: &mut R) -> Result<ChannelOutput> {
    let kept = u.dim().min(spec.k);
    check_fits(kept + spec.t, u.ambient_dim())?;
    let erased = erase(u, spec.k, rng);
    // E is drawn orthogonal to U, so it also meets H_k(U) trivially.
    let error = random_error_subspace(u, spec.t, rng)?;
    Ok(ChannelOutput {
        received: erased.direct_sum(&error)?,
        rho: u.dim() - kept,
        t: spec.t,
        delta_rot: 0.0,
        r_d: 0,
    })
}

/// `V = R_Δ(H_k(U) ⊕ E) ⊕ F` with `dim F = r_d`.
pub fn apply_noisy_operator_channel<R: Rng + ?Sized>(u: &Subspace, spec: NoisyChannelSpec, rng: &mut R) -> Result<ChannelOutput> {
    if spec.delta.is_nan() || spec.delta < 0.0 {
        return Err(Error::InvalidArgument(format!("rotation budget must be nonnegative, got {}", spec.delta)));
    }
    let kept = u.dim().min(spec.base.k);
    check_fits(kept + spec.base.t + spec.r_d, u.ambient_dim())?;
    let base = apply_operator_channel(u, spec.base, rng)?;
    let rotated = rotate(&base.received, spec.delta, rng);
    let delta_rot = distance(&base.received, &rotated)?;
    let noise = random_error_subspace(&rotated, spec.r_d, rng)?;
    Ok(ChannelOutput {
        received: rotated.direct_sum(&noise)?,
        delta_rot,
        r_d: spec.r_d,
        ..base
    })
}

fn check_fits(needed: usize, ambient: usize) -> Result<()> {
    if needed > ambient {
        Err(Error::DimensionOverflow { needed, ambient })
    } else {
        Ok(())
    }
}

const ROTATION_DOUBLINGS: usize = 64;
const ROTATION_BISECTIONS: usize = 60;

/// A subspace of the same dimension within distance `delta` of `u`.
///
/// Perturbs the basis along one Gaussian direction `G` as `Z + sG`, choosing
/// `s` so the distance lands in `[0.9Δ, Δ]` when that band is reachable.
pub fn rotate<R: Rng + ?Sized>(u: &Subspace, delta: f64, rng: &mut R) -> Subspace {
    let (m, n) = (u.dim(), u.ambient_dim());
    if delta <= 0.0 || m == 0 || m == n {
        return u.clone();
    }
    let direction = gaussian(m, n, u.field(), rng);
    let moved = |s: f64| {
        let v = Subspace::row_space_in(&(u.basis() + &direction * crate::linalg::Scalar::new(s, 0.0)), u.field());
        if v.dim() != m {
            return None;
        }
        let d = distance(u, &v).ok()?;
        Some((v, d))
    };
    let in_band = |d: f64| d >= 0.9 * delta && d <= delta;

    let mut best = u.clone();
    let mut lo = 0.0;
    let mut hi = None;
    let mut s = 1.0;
    for _ in 0..ROTATION_DOUBLINGS {
        match moved(s) {
            Some((v, d)) if in_band(d) => return v,
            Some((v, d)) if d < delta => {
                best = v;
                lo = s;
                s *= 2.0;
            }
            _ => {
                hi = Some(s);
                break;
            }
        }
    }
    let Some(mut hi) = hi else { return best };
    for _ in 0..ROTATION_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        match moved(mid) {
            Some((v, d)) if in_band(d) => return v,
            Some((v, d)) if d < delta => {
                best = v;
                lo = mid;
            }
            _ => hi = mid,
        }
    }
    best
}
