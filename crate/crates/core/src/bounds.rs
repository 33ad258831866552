//! Closed-form rate/distance trade-offs.
//!
//! Subspace-code rates are in nats per real or complex dimension. Binary-code
//! quantities (`binary_entropy`, GV, Zyablov, Blokh–Zyablov) are in bits.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundPoint {
    pub label: String,
    pub delta: f64,
    pub rate: f64,
    pub m: usize,
    pub beta: u8,
    /// Block length, or `None` for an asymptotic curve.
    pub n: Option<usize>,
}

fn check_delta(delta: f64, max: f64) -> Result<()> {
    if delta > 0.0 && delta <= max {
        Ok(())
    } else {
        Err(Error::DomainError(format!("delta must lie in (0, {max}], got {delta}")))
    }
}

/// `−½βm ln δ`, the rate achievable at normalized distance `δ`.
pub fn barg_lower(m: usize, delta: f64, beta: u8) -> Result<f64> {
    check_delta(delta, 1.0)?;
    Ok(-0.5 * f64::from(beta) * m as f64 * delta.ln())
}

/// `−βm ln √(1 − √(1 − δ/2))`, the largest possible rate at normalized distance `δ`.
pub fn barg_upper(m: usize, delta: f64, beta: u8) -> Result<f64> {
    check_delta(delta, 2.0)?;
    let inner = 1.0 - (1.0 - delta / 2.0).sqrt();
    Ok(-f64::from(beta) * m as f64 * inner.sqrt().ln())
}

/// Real lines with `δ = sin²θ`: `−½ ln δ`.
pub fn shannon_lower(delta: f64) -> Result<f64> {
    check_delta(delta, 1.0)?;
    Ok(-0.5 * delta.ln())
}

/// `−¼βm ln δ − ε`.
pub fn random_coding_rate(m: usize, delta: f64, beta: u8, epsilon: f64) -> Result<f64> {
    check_delta(delta, 1.0)?;
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::DomainError(format!("epsilon must be positive, got {epsilon}")));
    }
    Ok(-0.25 * f64::from(beta) * m as f64 * delta.ln() - epsilon)
}

/// `h(x) = −x log₂ x − (1−x) log₂(1−x)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// `h⁻¹(1 − x)` on `[0, ½]`, for a binary rate `x ∈ [0, 1]`.
pub fn gv_binary_delta(x: f64) -> f64 {
    let target = 1.0 - x.clamp(0.0, 1.0);
    if target >= 1.0 {
        return 0.5;
    }
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `max_{x ∈ [R, 1]} δ_GV(x)(1 − R/x)`.
pub fn zyablov_delta(rate: f64) -> f64 {
    if rate <= 0.0 {
        return 0.5;
    }
    if rate >= 1.0 {
        return 0.0;
    }
    let objective = |x: f64| gv_binary_delta(x) * (1.0 - rate / x);
    let golden = golden_section_max(objective, rate, 1.0, 1e-9);
    let coarse = grid_max(objective, rate, 1.0, 64);
    if coarse.1 > golden.1 + 1e-12 {
        grid_max(objective, rate, 1.0, 10_000).1
    } else {
        golden.1
    }
}

/// Binary rate at which the Zyablov distance equals `delta`, for `δ ∈ (0, ½)`.
pub fn zyablov_rate(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::DomainError(format!("delta must lie in (0, 1/2), got {delta}")));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if zyablov_delta(mid) > delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `1 − h(δ) − δ ∫₀^{1−h(δ)} dx/δ_GV(x)`, clipped below at 0.
pub fn blokh_zyablov_rate(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::DomainError(format!("delta must lie in (0, 1/2), got {delta}")));
    }
    let upper = 1.0 - binary_entropy(delta);
    // With x = 1 − h(y) and y = e^u the integral becomes ∫ log₂((1−y)/y) du
    // over u ∈ [ln δ, ln ½], which is smooth on the whole range.
    let integrand = |u: f64| {
        let y = u.exp();
        ((1.0 - y) / y).log2()
    };
    let integral = adaptive_simpson(&integrand, delta.ln(), 0.5f64.ln(), 1e-10);
    Ok((upper - delta * integral).max(0.0))
}

fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

fn grid_max(f: impl Fn(f64) -> f64, a: f64, b: f64, points: usize) -> (f64, f64) {
    (0..=points)
        .map(|i| {
            let x = a + (b - a) * i as f64 / points as f64;
            (x, f(x))
        })
        .fold((a, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let diff = left + right - whole;
        if depth == 0 || diff.abs() <= 15.0 * tol {
            return left + right + diff / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    if b <= a {
        return 0.0;
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    recurse(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 40)
}
