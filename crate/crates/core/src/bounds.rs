//! Upper bounds on eigenvalue-counting/spectral functions and lower bounds
//! on eigenvalues, all driven by the ball-volume profile.
//!
//! For a compact homogeneous space the counting function obeys
//!
//! ```text
//! ct(lambda) <= vol(M) / int_0^(pi/2) V(theta/sqrt(lambda)) sin(2 theta) d theta
//!            <= vol(M) / (cos^2(alpha) V(alpha/sqrt(lambda)))
//! ```
//!
//! for every `alpha in (0, pi/2)`; dropping the `vol(M)` numerator gives the
//! local (noncompact) version for the spectral-function diagonal. Inverting
//! the volume profile turns the second form into a lower bound on
//! `sqrt(lambda_k)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{m_d, VolumeProfile};
use crate::specialfns::{integrate, invert_monotone, QuadratureConfig};

/// Geometric data of a compact homogeneous space.
#[derive(Clone, Debug)]
pub struct CompactSpaceData {
    pub profile: VolumeProfile,
    pub total_volume: f64,
    pub diameter: f64,
}

impl CompactSpaceData {
    /// Validates the data: finite positive volume and diameter, and the
    /// disjoint-balls inequality `2 V(D/2) <= vol(M)` (two balls of radius
    /// `D/2` centered at endpoints of a diameter cannot overlap).
    pub fn new(profile: VolumeProfile, total_volume: f64, diameter: f64) -> Result<Self> {
        if !(total_volume > 0.0) || !total_volume.is_finite() {
            return Err(Error::Domain(format!(
                "compact space needs finite positive volume, got {total_volume}"
            )));
        }
        if !(diameter > 0.0) || !diameter.is_finite() {
            return Err(Error::Domain(format!(
                "compact space needs finite positive diameter, got {diameter}"
            )));
        }
        let half_ball = profile.evaluate(0.5 * diameter);
        if 2.0 * half_ball > total_volume * (1.0 + 1e-9) {
            return Err(Error::InvariantViolation(format!(
                "2 V(D/2) = {} exceeds vol(M) = {total_volume}",
                2.0 * half_ball
            )));
        }
        Ok(CompactSpaceData {
            profile,
            total_volume,
            diameter,
        })
    }

    /// Data for a compact model space (circle or sphere).
    pub fn from_model(space: &crate::geometry::ModelSpace) -> Result<Self> {
        let total = space.total_volume();
        if !total.is_finite() {
            return Err(Error::Domain(format!("{space:?} is not compact")));
        }
        Self::new(space.volume_profile()?, total, space.diameter())
    }
}

/// A bound value together with the threshold from which it is asserted and
/// the parameters that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub value: f64,
    /// The bound is only claimed for abscissae at or above this threshold;
    /// below it the value is still computed but must be flagged by callers.
    pub valid_from: f64,
    pub parameters: Vec<(&'static str, f64)>,
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!(
            "spectral parameter must be positive and finite, got {lambda}"
        )));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < PI / 2.0) {
        return Err(Error::Domain(format!(
            "alpha must lie in (0, pi/2), got {alpha}"
        )));
    }
    Ok(())
}

fn volume_average(profile: &VolumeProfile, lambda: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let inv_sqrt = 1.0 / lambda.sqrt();
    integrate(
        |theta: f64| profile.evaluate(theta * inv_sqrt) * (2.0 * theta).sin(),
        0.0,
        PI / 2.0,
        cfg,
    )
}

/// Sharper counting bound: `vol(M)` over the sine-weighted volume average.
pub fn counting_bound_integral(
    data: &CompactSpaceData,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<BoundResult> {
    check_lambda(lambda)?;
    let denom = volume_average(&data.profile, lambda, cfg)?;
    Ok(BoundResult {
        value: data.total_volume / denom,
        valid_from: 0.0,
        parameters: vec![("vol", data.total_volume)],
    })
}

/// One-parameter counting bound `vol(M) / (cos^2(alpha) V(alpha/sqrt(lambda)))`;
/// always at least as large as [`counting_bound_integral`].
pub fn counting_bound_alpha(
    data: &CompactSpaceData,
    lambda: f64,
    alpha: f64,
) -> Result<BoundResult> {
    check_lambda(lambda)?;
    check_alpha(alpha)?;
    let cos = alpha.cos();
    let v = data.profile.evaluate(alpha / lambda.sqrt());
    Ok(BoundResult {
        value: data.total_volume / (cos * cos * v),
        valid_from: 0.0,
        parameters: vec![("vol", data.total_volume), ("alpha", alpha)],
    })
}

/// Local (noncompact) analogue bounding the spectral-function diagonal:
/// drop the volume numerator; with `alpha` supplied, use the one-parameter
/// form instead of the integral.
pub fn local_counting_bound(
    profile: &VolumeProfile,
    lambda: f64,
    alpha: Option<f64>,
    cfg: &QuadratureConfig,
) -> Result<BoundResult> {
    check_lambda(lambda)?;
    match alpha {
        None => {
            let denom = volume_average(profile, lambda, cfg)?;
            Ok(BoundResult {
                value: 1.0 / denom,
                valid_from: 0.0,
                parameters: vec![],
            })
        }
        Some(alpha) => {
            check_alpha(alpha)?;
            let cos = alpha.cos();
            let v = profile.evaluate(alpha / lambda.sqrt());
            Ok(BoundResult {
                value: 1.0 / (cos * cos * v),
                valid_from: 0.0,
                parameters: vec![("alpha", alpha)],
            })
        }
    }
}

/// Power-law counting bound under the hypothesis `V(r) >= c r^d` for
/// `r <= r0`: the counting function (or its local version when `vol` is
/// `None`) is at most `vol / (c m_d) * lambda^(d/2)` once
/// `lambda >= (pi / (2 r0))^2`.
///
/// Below the threshold the value is still computed; `valid_from` flags it.
pub fn polynomial_counting_bound(
    vol: Option<f64>,
    c: f64,
    d: u32,
    r0: f64,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<BoundResult> {
    if !(c > 0.0) {
        return Err(Error::Domain(format!(
            "growth constant must be positive, got {c}"
        )));
    }
    if !(r0 > 0.0) {
        return Err(Error::Domain(format!(
            "growth radius must be positive, got {r0}"
        )));
    }
    check_lambda(lambda)?;
    let numerator = vol.unwrap_or(1.0);
    let moment = m_d(d as f64, cfg)?;
    let valid_from = if r0.is_infinite() {
        0.0
    } else {
        (PI / (2.0 * r0)).powi(2)
    };
    Ok(BoundResult {
        value: numerator / (c * moment) * lambda.powf(d as f64 / 2.0),
        valid_from,
        parameters: vec![("c", c), ("d", d as f64), ("r0", r0)],
    })
}

/// Lower bound on `sqrt(lambda_k)`: `alpha / V^{-1}( vol(M) / ((k+1) cos^2 alpha) )`.
///
/// The volume inverse is restricted to `(0, diameter]`; targets beyond
/// `V(diameter)` are unreachable and raise a bracket error rather than
/// extrapolating (this is what happens for `k = 0`).
pub fn eigenvalue_lower_bound(data: &CompactSpaceData, k: u64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let cos = alpha.cos();
    let target = data.total_volume / ((k + 1) as f64 * cos * cos);
    let radius = invert_monotone(
        |r| data.profile.evaluate(r),
        target,
        0.0,
        data.diameter,
        1e-13 * data.diameter,
    )?;
    Ok(alpha / radius)
}

/// Diameter-only lower bound `sqrt(lambda_1) > pi / (2 D)`.
pub fn li_bound(diameter: f64) -> f64 {
    assert!(diameter > 0.0, "diameter must be positive");
    PI / (2.0 * diameter)
}

/// Strict improvement of [`li_bound`]:
/// `pi/(2D) + arcsin( V(D/2) / (2 (vol(M) - V(D/2))) ) / D`.
pub fn li_improved_bound(data: &CompactSpaceData) -> Result<f64> {
    let half_ball = data.profile.evaluate(0.5 * data.diameter);
    if 2.0 * half_ball > data.total_volume * (1.0 + 1e-9) {
        return Err(Error::InvariantViolation(format!(
            "2 V(D/2) = {} exceeds vol(M) = {}",
            2.0 * half_ball,
            data.total_volume
        )));
    }
    // 2 V(D/2) <= vol(M) forces the argument into (0, 1/2]
    let arg = half_ball / (2.0 * (data.total_volume - half_ball));
    Ok(li_bound(data.diameter) + arg.min(1.0).asin() / data.diameter)
}

/// For round spheres the gap doubles: `sqrt(lambda_1) >= pi / D`, sharp on
/// the circle.
pub fn sphere_gap_bound(diameter: f64) -> f64 {
    assert!(diameter > 0.0, "diameter must be positive");
    PI / diameter
}

const GOLDEN_RATIO_CONJUGATE: f64 = 0.618_033_988_749_894_8;

/// Golden-section sweep over `alpha in (0, pi/2)` maximizing
/// [`eigenvalue_lower_bound`]; a 64-point seed grid picks the bracket and the
/// section search narrows it to width 1e-6. Alphas where the volume inverse
/// is unreachable simply score as minus infinity.
pub fn eigenvalue_lower_bound_swept(data: &CompactSpaceData, k: u64) -> Result<f64> {
    let score = |alpha: f64| eigenvalue_lower_bound(data, k, alpha).unwrap_or(f64::NEG_INFINITY);
    let (alpha, value) = golden_max(score, 1e-6, PI / 2.0 - 1e-6, 1e-6);
    if value.is_finite() {
        Ok(value)
    } else {
        // surface the underlying error at a representative alpha
        eigenvalue_lower_bound(data, k, alpha)
    }
}

/// Golden-section sweep minimizing `counting_bound_alpha` over alpha.
pub fn counting_bound_alpha_optimized(
    data: &CompactSpaceData,
    lambda: f64,
) -> Result<BoundResult> {
    check_lambda(lambda)?;
    let score = |alpha: f64| {
        counting_bound_alpha(data, lambda, alpha)
            .map(|b| -b.value)
            .unwrap_or(f64::NEG_INFINITY)
    };
    let (alpha, _) = golden_max(score, 1e-6, PI / 2.0 - 1e-6, 1e-6);
    counting_bound_alpha(data, lambda, alpha)
}

/// Deterministic grid-seeded golden-section maximizer; returns `(argmax, max)`.
fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, width: f64) -> (f64, f64) {
    let seeds: u32 = 64;
    let mut best_i: u32 = 0;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..=seeds {
        let x = lo + (hi - lo) * i as f64 / seeds as f64;
        let v = f(x);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let step = (hi - lo) / seeds as f64;
    let mut a = lo + step * (best_i.saturating_sub(1)) as f64;
    let mut b = (lo + step * (best_i + 1) as f64).min(hi);
    let mut c = b - GOLDEN_RATIO_CONJUGATE * (b - a);
    let mut d = a + GOLDEN_RATIO_CONJUGATE * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > width {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN_RATIO_CONJUGATE * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN_RATIO_CONJUGATE * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    let fm = f(mid);
    if fm >= best_v {
        (mid, fm)
    } else {
        (lo + step * best_i as f64, best_v)
    }
}
