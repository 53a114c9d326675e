//! Exact spectra of the compact model spaces and the Euclidean spectral
//! function.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::omega_d;
use crate::specialfns::{bessel_j, binomial};

/// One distinct eigenvalue level of the round sphere `S^d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumPoint {
    /// Level index; the eigenvalue is `k (k + d - 1)`.
    pub k: u32,
    /// Eigenvalue (exact in floating point for every level in range).
    pub eigenvalue: f64,
    /// Number of eigenvalues (with multiplicity) up to and including this
    /// level: `C(k+d-1, d) + C(k+d, d)`.
    pub cumulative_count: u128,
}

/// Eigenvalue levels `k (k + d - 1)` of `S^d` with exact cumulative counts,
/// for `k = 0 ..= k_max`.
pub fn sphere_spectrum(d: u32, k_max: u32) -> Vec<SpectrumPoint> {
    assert!(d >= 1, "sphere dimension must be at least 1");
    (0..=k_max)
        .map(|k| {
            let kf = k as f64;
            SpectrumPoint {
                k,
                eigenvalue: kf * (kf + d as f64 - 1.0),
                cumulative_count: sphere_cumulative_count(d, k),
            }
        })
        .collect()
}

fn sphere_cumulative_count(d: u32, k: u32) -> u128 {
    let (d, k) = (d as u64, k as u64);
    binomial(k + d - 1, d) + binomial(k + d, d)
}

/// Counting function of `S^d`: number of eigenvalues at most `lambda`, with
/// multiplicity, jumping exactly at the eigenvalues.
pub fn sphere_counting(d: u32, lambda: f64) -> u128 {
    assert!(d >= 1, "sphere dimension must be at least 1");
    if !(lambda >= 0.0) {
        return 0;
    }
    // largest k with k (k + d - 1) <= lambda; quadratic estimate then exact
    // float products (integers below 2^53) to settle the boundary
    let df = d as f64 - 1.0;
    let mut k = ((-df + (df * df + 4.0 * lambda).sqrt()) / 2.0).floor().max(0.0) as u64;
    let eig = |k: u64| k as f64 * (k as f64 + df);
    while eig(k + 1) <= lambda {
        k += 1;
    }
    while k > 0 && eig(k) > lambda {
        k -= 1;
    }
    sphere_cumulative_count(d, k as u32)
}

/// `sqrt(lambda_k)` of `S^d` where eigenvalues are listed in ascending order
/// with multiplicity (`k = 0` is the constant).
pub fn sphere_kth_sqrt_eigenvalue(d: u32, k: u64) -> f64 {
    let mut level = 0u32;
    while sphere_cumulative_count(d, level) <= k as u128 {
        level += 1;
    }
    let lf = level as f64;
    (lf * (lf + d as f64 - 1.0)).sqrt()
}

/// Closed form for the counting function of `S^2` at an eigenvalue:
/// `lambda + (1 + sqrt(1 + 4 lambda)) / 2`.
///
/// Only defined when `lambda = k (k + 1)` (within 1e-9); between eigenvalues
/// the expression does not equal the counting function, so the domain is
/// restricted rather than interpolated.
pub fn s2_closed_form(lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) {
        return Err(Error::Domain(format!(
            "eigenvalue must be nonnegative, got {lambda}"
        )));
    }
    let k = ((-1.0 + (1.0 + 4.0 * lambda).sqrt()) / 2.0).round();
    if (lambda - k * (k + 1.0)).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "{lambda} is not an eigenvalue of the 2-sphere (nearest level {k})"
        )));
    }
    Ok(lambda + 0.5 * (1.0 + (1.0 + 4.0 * lambda).sqrt()))
}

/// Counting function of the circle `R/Z`: `2 floor(sqrt(lambda)/(2 pi)) + 1`.
pub fn circle_counting(lambda: f64) -> u64 {
    if !(lambda >= 0.0) {
        return 0;
    }
    // eigenvalues are (2 pi n)^2; a relative nudge keeps the jump inclusive
    // when lambda is the rounded square itself
    let x = lambda.sqrt() / (2.0 * PI);
    2.0_f64.mul_add((x * (1.0 + 4.0 * f64::EPSILON)).floor(), 1.0) as u64
}

/// `sqrt(lambda_k)` of `R/Z` with multiplicity (two per nonzero frequency).
pub fn circle_kth_sqrt_eigenvalue(k: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let n = k.div_ceil(2);
    2.0 * PI * n as f64
}

/// Local counting function of Euclidean `R^d`: `omega_d / (2 pi)^d * lambda^(d/2)`.
pub fn euclidean_local_counting(d: u32, lambda: f64) -> f64 {
    assert!(d >= 1, "dimension must be at least 1");
    if !(lambda >= 0.0) {
        return 0.0;
    }
    omega_d(d) / (2.0 * PI).powi(d as i32) * lambda.powf(d as f64 / 2.0)
}

/// Euclidean spectral function `(2 pi r / sqrt(lambda))^(-d/2) J_{d/2}(r sqrt(lambda))`;
/// at `r = 0` this is the local counting value (diagonal limit).
pub fn euclidean_spectral(d: u32, r: f64, lambda: f64) -> Result<f64> {
    if d < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!(
            "spectral parameter must be positive, got {lambda}"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    if r == 0.0 {
        return Ok(euclidean_local_counting(d, lambda));
    }
    let sqrt_lambda = lambda.sqrt();
    let half_d = d as f64 / 2.0;
    let scale = (2.0 * PI * r / sqrt_lambda).powf(-half_d);
    Ok(scale * bessel_j(half_d, r * sqrt_lambda)?)
}
