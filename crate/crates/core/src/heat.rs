//! Heat-kernel upper bounds from volume growth, exact odd-dimensional
//! hyperbolic heat kernels, and the Laplace-transform bridge
//!
//! ```text
//! p_t(x,x) = 1/vol(M) + t int_0^inf e^(-lambda t) N_x(lambda) d lambda
//! ```
//!
//! between the local counting function and the heat diagonal (`1/vol M` read
//! as 0 when the volume is infinite).

use std::f64::consts::PI;

use crate::bounds::BoundResult;
use crate::error::{Error, Result};
use crate::geometry::{m_d, unit_sphere_area, VolumeProfile};
use crate::specialfns::{
    integrate_semiinfinite_expdecay, upper_incomplete_gamma, QuadratureConfig,
};
use crate::spectra::{sphere_spectrum, TermSum};

/// Hypothesis `V(r) >= c r^beta` for `0 < r < valid_to`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyGrowthHypothesis {
    pub c: f64,
    pub beta: f64,
    /// Range of validity of the growth inequality (may be infinite).
    pub valid_to: f64,
    /// Total volume of the space (infinite for noncompact spaces).
    pub total_volume: f64,
}

impl PolyGrowthHypothesis {
    pub fn new(c: f64, beta: f64, valid_to: f64, total_volume: f64) -> Result<Self> {
        if !(c > 0.0) || !(beta > 0.0) {
            return Err(Error::Domain(format!(
                "growth hypothesis needs positive constants, got c={c}, beta={beta}"
            )));
        }
        if !(valid_to > 0.0) || !(total_volume > 0.0) {
            return Err(Error::Domain(
                "validity range and total volume must be positive".into(),
            ));
        }
        Ok(PolyGrowthHypothesis {
            c,
            beta,
            valid_to,
            total_volume,
        })
    }
}

/// Hypothesis `V(r) >= c0 r^d` for `r <= r0` and `V(r) >= c1 exp(c2 r)` for
/// `r > r0`, optionally with a spectral gap `lambda_star` below which the
/// local counting function vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpGrowthHypothesis {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub dim: u32,
    pub r0: f64,
    pub lambda_star: Option<f64>,
}

impl ExpGrowthHypothesis {
    pub fn new(
        c0: f64,
        c1: f64,
        c2: f64,
        dim: u32,
        r0: f64,
        lambda_star: Option<f64>,
    ) -> Result<Self> {
        if !(c0 > 0.0 && c1 > 0.0 && c2 > 0.0 && r0 > 0.0) || dim == 0 {
            return Err(Error::Domain(
                "exponential growth hypothesis needs positive constants and dimension".into(),
            ));
        }
        if let Some(gap) = lambda_star {
            if !(gap >= 0.0) {
                return Err(Error::Domain(format!(
                    "spectral gap must be nonnegative, got {gap}"
                )));
            }
        }
        Ok(ExpGrowthHypothesis {
            c0,
            c1,
            c2,
            dim,
            r0,
            lambda_star,
        })
    }

    /// Stretched-exponential rate `c3 = (pi c2 / 4)^(2/3)`.
    pub fn c3(&self) -> f64 {
        (PI * self.c2 / 4.0).powf(2.0 / 3.0)
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "time must be positive and finite, got {t}"
        )));
    }
    Ok(())
}

fn inverse_volume(total_volume: f64) -> f64 {
    if total_volume.is_finite() {
        1.0 / total_volume
    } else {
        0.0
    }
}

/// Shared core of the polynomial and gap bounds; at `lambda_star = 0` the
/// incomplete-gamma tail is the full gamma function, so the two bounds agree
/// bit for bit.
fn poly_gap_value(
    vol_m: f64,
    c: f64,
    beta: f64,
    lambda_star: f64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let moment = m_d(beta, cfg)?;
    let tail = upper_incomplete_gamma(beta / 2.0 + 1.0, lambda_star * t)?;
    Ok(inverse_volume(vol_m)
        + 2.0_f64.powf(beta / 2.0) / (c * moment) * t.powf(-beta / 2.0) * tail)
}

/// Diagonal heat bound under polynomial volume growth:
/// `1/vol(M) + Gamma(beta/2 + 1) 2^(beta/2) / (c m_beta) * t^(-beta/2)`.
pub fn heat_bound_polynomial(
    h: &PolyGrowthHypothesis,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<BoundResult> {
    check_time(t)?;
    Ok(BoundResult {
        value: poly_gap_value(h.total_volume, h.c, h.beta, 0.0, t, cfg)?,
        valid_from: 0.0,
        parameters: vec![("c", h.c), ("beta", h.beta), ("vol", h.total_volume)],
    })
}

/// Diagonal heat bounds under exponential volume growth.
///
/// The first bound always applies:
///
/// ```text
/// (pi c2 + 2)/c1 * exp(-c3 t^(1/3))
///   + (2/c0) (4/pi)^d t^(-d/2) Gamma(1 + d/2, pi^2 t / (16 r0^2))
/// ```
///
/// When a spectral gap `lambda_star` is known the sharper second bound is
/// also returned, with `exp(-lambda_star t)` decay and the incomplete-gamma
/// cutoff at `max(lambda_star, pi^2 t / (16 r0^2))`.
pub fn heat_bound_exponential(
    h: &ExpGrowthHypothesis,
    t: f64,
) -> Result<(BoundResult, Option<BoundResult>)> {
    check_time(t)?;
    let d = h.dim as f64;
    let cutoff = PI * PI * t / (16.0 * h.r0 * h.r0);
    let poly_part =
        2.0 / h.c0 * (4.0 / PI).powf(d) * t.powf(-d / 2.0);
    let first = BoundResult {
        value: (PI * h.c2 + 2.0) / h.c1 * (-h.c3() * t.powf(1.0 / 3.0)).exp()
            + poly_part * upper_incomplete_gamma(1.0 + d / 2.0, cutoff)?,
        valid_from: 0.0,
        parameters: vec![
            ("c0", h.c0),
            ("c1", h.c1),
            ("c2", h.c2),
            ("c3", h.c3()),
            ("d", d),
            ("r0", h.r0),
        ],
    };
    let second = match h.lambda_star {
        None => None,
        Some(gap) => Some(BoundResult {
            value: 2.0 / h.c1 * (-gap * t).exp()
                + poly_part * upper_incomplete_gamma(1.0 + d / 2.0, gap.max(cutoff))?,
            valid_from: 0.0,
            parameters: vec![
                ("c0", h.c0),
                ("c1", h.c1),
                ("c2", h.c2),
                ("d", d),
                ("r0", h.r0),
                ("lambda_star", gap),
            ],
        }),
    };
    Ok((first, second))
}

/// Compact-space diagonal bound combining polynomial short-time decay with
/// the spectral-gap long-time decay:
/// `1/vol(M) + 2^(beta/2)/(c m_beta) * t^(-beta/2) * Gamma(beta/2+1, lambda_star t)`.
///
/// Reduces exactly to [`heat_bound_polynomial`] at `lambda_star = 0`.
pub fn heat_bound_compact_gap(
    vol_m: f64,
    c: f64,
    beta: f64,
    lambda_star: f64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<BoundResult> {
    check_time(t)?;
    if !(vol_m > 0.0) || !(c > 0.0) || !(beta > 0.0) || !(lambda_star >= 0.0) {
        return Err(Error::Domain(
            "compact gap bound needs positive volume and constants, nonnegative gap".into(),
        ));
    }
    Ok(BoundResult {
        value: poly_gap_value(vol_m, c, beta, lambda_star, t, cfg)?,
        valid_from: 0.0,
        parameters: vec![
            ("c", c),
            ("beta", beta),
            ("vol", vol_m),
            ("lambda_star", lambda_star),
        ],
    })
}

/// Exact heat kernel of odd-dimensional real hyperbolic space `H^d` at
/// distance `r` and time `t`:
///
/// ```text
/// sqrt(pi) / (2 pi)^((d+1)/2) * exp(-b_d t)/sqrt(t) * A^((d-1)/2)[ exp(-r^2/(4t)) ]
/// ```
///
/// with `A = (-1/sinh r) d/dr` and `b_d = (d-1)^2/4`; the diagonal is the
/// series limit of the operator output.
pub fn hyperbolic_heat_kernel_odd(d: u32, r: f64, t: f64) -> Result<f64> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::Domain(format!(
            "odd hyperbolic dimension must be an odd integer >= 3, got {d}"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    check_time(t)?;
    let bottom = {
        let b = (d as f64 - 1.0) / 2.0;
        b * b
    };
    let applications = (d - 1) / 2;
    let sum = TermSum::gaussian(t).apply_hyperbolic_operator(applications);
    let core = if r == 0.0 {
        sum.limit_at_zero(2 * applications as usize + 8)?
    } else {
        sum.evaluate(r)
    };
    let prefactor =
        PI.sqrt() / (2.0 * PI).powi((d as i32 + 1) / 2) * (-bottom * t).exp() / t.sqrt();
    Ok(prefactor * core)
}

/// Heat diagonal from a local counting function via the Laplace transform:
/// `1/vol(M) + t int_0^inf e^(-lambda t) N(lambda) d lambda`.
///
/// `counting` must be nondecreasing and polynomially bounded; `vol_m` may be
/// infinite.
pub fn heat_from_spectral<F: Fn(f64) -> f64>(
    counting: F,
    vol_m: f64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_time(t)?;
    let transform = integrate_semiinfinite_expdecay(
        |lambda: f64| (-lambda * t).exp() * counting(lambda),
        0.0,
        0.5 * t,
        cfg,
    )?;
    Ok(inverse_volume(vol_m) + t * transform)
}

/// Counting bound from a heat diagonal: `N_x(lambda) <= e * p_diag(1/lambda)`.
pub fn spectral_from_heat<F: Fn(f64) -> f64>(p_diag: F, lambda: f64) -> f64 {
    assert!(lambda > 0.0, "spectral parameter must be positive");
    std::f64::consts::E * p_diag(1.0 / lambda)
}

/// Exact heat diagonal of the round sphere `S^d` by eigenvalue summation:
/// `(1/vol) sum_k mult_k exp(-k(k+d-1) t)`.
pub fn sphere_heat_diagonal(d: u32, t: f64) -> Result<f64> {
    check_time(t)?;
    let vol = unit_sphere_area(d + 1);
    // enough levels that the Gaussian tail is below double precision
    let k_max = ((45.0 / t).sqrt() + 12.0) as u32;
    let spectrum = sphere_spectrum(d, k_max);
    let mut sum = 0.0;
    let mut prev_count = 0u128;
    for p in &spectrum {
        let mult = (p.cumulative_count - prev_count) as f64;
        prev_count = p.cumulative_count;
        sum += mult * (-p.eigenvalue * t).exp();
    }
    Ok(sum / vol)
}

/// Checks a candidate polynomial growth hypothesis `V(r) >= c r^beta` on a
/// deterministic grid over `(0, r_max]`; rejecting invalid candidates is the
/// caller's cue not to use the bound.
pub fn verify_poly_growth(
    profile: &VolumeProfile,
    c: f64,
    beta: f64,
    r_max: f64,
    grid: usize,
) -> bool {
    if !(c > 0.0 && beta > 0.0 && r_max > 0.0) || grid == 0 {
        return false;
    }
    (1..=grid).all(|i| {
        let r = r_max * i as f64 / grid as f64;
        profile.evaluate(r) >= c * r.powf(beta)
    })
}

/// Checks a candidate exponential growth hypothesis `V(r) >= c1 exp(c2 r)` on
/// a deterministic grid over `[r0, r_max]`.
pub fn verify_exp_growth(
    profile: &VolumeProfile,
    c1: f64,
    c2: f64,
    r0: f64,
    r_max: f64,
    grid: usize,
) -> bool {
    if !(c1 > 0.0 && c2 > 0.0 && r0 > 0.0 && r_max > r0) || grid == 0 {
        return false;
    }
    (0..=grid).all(|i| {
        let r = r0 + (r_max - r0) * i as f64 / grid as f64;
        profile.evaluate(r) >= c1 * (c2 * r).exp()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{omega_d, ModelSpace};
    use crate::specialfns::integrate;
    use crate::spectra::real_hyperbolic_odd_spectral;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn h3_exact_diagonal(t: f64) -> f64 {
        (4.0 * PI * t).powf(-1.5) * (-t).exp()
    }

    #[test]
    fn h3_diagonal_closed_form() {
        for &t in &[0.05, 0.3, 1.0, 4.0, 50.0] {
            let v = hyperbolic_heat_kernel_odd(3, 0.0, t).unwrap();
            let exact = h3_exact_diagonal(t);
            assert!(
                ((v - exact) / exact).abs() < 1e-12,
                "t={t}: {v} vs {exact}"
            );
        }
    }

    #[test]
    fn h3_off_diagonal_closed_form() {
        // (4 pi t)^(-3/2) e^(-t) (r / sinh r) e^(-r^2/(4t))
        for &(r, t) in &[(0.5, 0.7), (2.0, 1.3), (4.0, 0.2)] {
            let v = hyperbolic_heat_kernel_odd(3, r, t).unwrap();
            let exact = h3_exact_diagonal(t) * (r / r.sinh()) * (-r * r / (4.0 * t)).exp();
            assert!(
                ((v - exact) / exact).abs() < 1e-12,
                "r={r}, t={t}: {v} vs {exact}"
            );
        }
    }

    #[test]
    fn off_diagonal_never_exceeds_diagonal() {
        for d in [3u32, 5, 7] {
            for &t in &[0.1, 1.0, 10.0] {
                let diag = hyperbolic_heat_kernel_odd(d, 0.0, t).unwrap();
                for i in 1..=20 {
                    let r = 0.4 * i as f64;
                    let v = hyperbolic_heat_kernel_odd(d, r, t).unwrap();
                    assert!(v <= diag * (1.0 + 1e-12), "d={d}, r={r}, t={t}");
                }
            }
        }
    }

    #[test]
    fn diagonal_positive_and_decreasing_in_time() {
        for d in [3u32, 5] {
            let mut prev = f64::INFINITY;
            for i in 1..=60 {
                let t = 0.05 * i as f64;
                let v = hyperbolic_heat_kernel_odd(d, 0.0, t).unwrap();
                assert!(v > 0.0 && v < prev, "d={d}, t={t}");
                prev = v;
            }
        }
    }

    #[test]
    fn total_mass_is_subprobability() {
        // vol(S^2) int_0^inf p_t(r) sinh^2 r dr <= 1 (equality for H^3)
        for &t in &[0.1_f64, 1.0, 10.0] {
            let r_cut = (4.0 * t * 40.0).sqrt() + 30.0;
            let mass = integrate(
                |r: f64| {
                    if r == 0.0 {
                        return 0.0;
                    }
                    hyperbolic_heat_kernel_odd(3, r, t).unwrap() * r.sinh().powi(2)
                },
                0.0,
                r_cut,
                &cfg(),
            )
            .unwrap()
                * unit_sphere_area(3);
            assert!(mass <= 1.0 + 1e-6, "t={t}: mass {mass}");
            assert!(mass > 0.999, "t={t}: mass {mass}");
        }
    }

    #[test]
    fn laplace_bridge_reproduces_h3_diagonal() {
        let counting = |lambda: f64| {
            real_hyperbolic_odd_spectral(3, 0.0, lambda).expect("h3 counting")
        };
        for &t in &[0.1, 0.5, 1.0, 2.0, 5.0] {
            let bridged = heat_from_spectral(counting, f64::INFINITY, t, &cfg()).unwrap();
            let exact = h3_exact_diagonal(t);
            assert!(
                ((bridged - exact) / exact).abs() < 1e-6,
                "t={t}: {bridged} vs {exact}"
            );
        }
    }

    #[test]
    fn zero_counting_gives_equilibrium_only() {
        let v = heat_from_spectral(|_| 0.0, 4.0 * PI, 1.0, &cfg()).unwrap();
        assert!((v - 1.0 / (4.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn laplace_transform_of_h2_counting_matches_fixed_grid_oracle() {
        use crate::spectra::real_hyperbolic_even_local_counting;
        let cfg = cfg();
        let t = 1.0;
        let counting =
            |lambda: f64| real_hyperbolic_even_local_counting(2, lambda, &cfg).unwrap();
        let bridged = heat_from_spectral(&counting, f64::INFINITY, t, &cfg).unwrap();
        // independent oracle: Simpson at two resolutions after lambda = 1/4 + u^2,
        // which removes the (lambda - 1/4)^(3/2) kink at the spectrum bottom
        let simpson = |n: usize| {
            let u_max = (45.0_f64 - 0.25).sqrt();
            let h = u_max / n as f64;
            let f = |u: f64| {
                let l = 0.25 + u * u;
                (-l * t).exp() * counting(l) * 2.0 * u
            };
            let mut acc = f(0.0) + f(u_max);
            for i in 1..n {
                acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
            }
            t * acc * h / 3.0
        };
        let coarse = simpson(4_000);
        let fine = simpson(8_000);
        assert!(
            ((fine - coarse) / fine).abs() < 1e-8,
            "oracle not converged: {coarse} vs {fine}"
        );
        assert!(
            ((bridged - fine) / fine).abs() < 1e-6,
            "{bridged} vs oracle {fine}"
        );
    }

    #[test]
    fn bound_composition_still_bounds_counting() {
        // a heat-kernel *bound* fed through the counting inequality is still
        // an upper bound on the exact counting function
        let cfg = cfg();
        let h = PolyGrowthHypothesis::new(omega_d(3), 3.0, f64::INFINITY, f64::INFINITY).unwrap();
        let p_bound = |t: f64| heat_bound_polynomial(&h, t, &cfg).unwrap().value;
        for i in 0..=20 {
            let lambda = 1.1 * 10f64.powf(2.0 * i as f64 / 20.0);
            let lhs = spectral_from_heat(p_bound, lambda);
            let rhs = real_hyperbolic_odd_spectral(3, 0.0, lambda).unwrap();
            assert!(lhs >= rhs, "lambda={lambda}");
        }
        // compact case at small lambda: constants still counted
        let sphere_vol = 4.0 * PI;
        let p_sphere = |t: f64| sphere_heat_diagonal(2, t).unwrap();
        let lambda = 1e-3;
        let global = sphere_vol * spectral_from_heat(p_sphere, lambda);
        assert!(global >= 1.0, "got {global}");
    }

    #[test]
    fn polynomial_bound_dominates_h3() {
        // sinh x >= x gives V(r) >= omega_3 r^3 for all r on H^3
        let h = PolyGrowthHypothesis::new(omega_d(3), 3.0, f64::INFINITY, f64::INFINITY).unwrap();
        for i in 0..=50 {
            let t = 10f64.powf(-3.0 + 6.0 * i as f64 / 50.0);
            let bound = heat_bound_polynomial(&h, t, &cfg()).unwrap().value;
            let exact = h3_exact_diagonal(t);
            assert!(bound >= exact, "t={t}: bound {bound} < exact {exact}");
        }
    }

    #[test]
    fn polynomial_bound_explicit_formula() {
        // plug-in check of the cubic-growth case
        let cfg = cfg();
        let h = PolyGrowthHypothesis::new(omega_d(3), 3.0, f64::INFINITY, f64::INFINITY).unwrap();
        for &t in &[0.2, 1.0, 7.0] {
            let v = heat_bound_polynomial(&h, t, &cfg).unwrap().value;
            let expected = crate::specialfns::gamma(2.5).unwrap() * 2.0_f64.powf(1.5)
                / (omega_d(3) * crate::geometry::m_d(3.0, &cfg).unwrap())
                * t.powf(-1.5);
            assert!(((v - expected) / expected).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn polynomial_bound_long_time_limit_is_inverse_volume() {
        let h = PolyGrowthHypothesis::new(1.0, 2.0, 1.0, 4.0 * PI).unwrap();
        let v = heat_bound_polynomial(&h, 1e12, &cfg()).unwrap().value;
        assert!((v - 1.0 / (4.0 * PI)).abs() < 1e-9);
        // the gap variant decays to the same equilibrium
        let g = heat_bound_compact_gap(4.0 * PI, 1.0, 2.0, 2.0, 1e6, &cfg())
            .unwrap()
            .value;
        assert!((g - 1.0 / (4.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn compact_gap_bound_reduces_to_polynomial_at_zero_gap() {
        let cfg = cfg();
        for &t in &[0.01, 0.5, 3.0, 100.0] {
            let gap = heat_bound_compact_gap(4.0 * PI, 1.2, 2.0, 0.0, t, &cfg).unwrap();
            let h = PolyGrowthHypothesis::new(1.2, 2.0, PI, 4.0 * PI).unwrap();
            let poly = heat_bound_polynomial(&h, t, &cfg).unwrap();
            assert_eq!(gap.value, poly.value, "t={t}");
        }
    }

    #[test]
    fn sphere_gap_bound_dominates_eigen_sum() {
        // verified constants: V(r) >= (4/pi) r^2 on (0, pi], gap lambda_1 = 2
        let profile = ModelSpace::Sphere { dim: 2 }.volume_profile().unwrap();
        assert!(verify_poly_growth(&profile, 4.0 / PI, 2.0, PI, 800));
        let cfg = cfg();
        for i in 0..=50 {
            let t = 10f64.powf(-2.0 + 4.0 * i as f64 / 50.0);
            let bound = heat_bound_compact_gap(4.0 * PI, 4.0 / PI, 2.0, 2.0, t, &cfg)
                .unwrap()
                .value;
            let exact = sphere_heat_diagonal(2, t).unwrap();
            // 1e-12 slack absorbs ulp-level noise in the shared 1/vol limit
            assert!(
                bound >= exact * (1.0 - 1e-12),
                "t={t}: bound {bound} < exact {exact}"
            );
        }
    }

    #[test]
    fn exponential_bound_shapes() {
        // H^3 constants: c0 = omega_3 for r <= 1, c1 e^{2r} <= V(r) beyond
        let profile = ModelSpace::RealHyperbolic { dim: 3 }.volume_profile().unwrap();
        let c1 = PI * (2.0_f64.sinh() - 2.0) / 2.0_f64.exp();
        assert!(verify_exp_growth(&profile, c1, 2.0, 1.0, 60.0, 600));
        let h = ExpGrowthHypothesis::new(omega_d(3), c1, 2.0, 3, 1.0, Some(1.0)).unwrap();

        // short-time blow-up has slope -d/2 in log-log
        let (b1, _) = heat_bound_exponential(&h, 1e-6).unwrap();
        let (b2, _) = heat_bound_exponential(&h, 1e-7).unwrap();
        let slope = (b1.value.ln() - b2.value.ln()) / ((1e-6_f64).ln() - (1e-7_f64).ln());
        assert!((slope + 1.5).abs() < 0.05, "slope {slope}");

        // long-time stretched exponential: the slope of log(bound) against
        // t^(1/3) settles at -c3 (two-point slope cancels the prefactor)
        let (ba, _) = heat_bound_exponential(&h, 1e4).unwrap();
        let (bb, _) = heat_bound_exponential(&h, 8e4).unwrap();
        let slope3 = (bb.value.ln() - ba.value.ln())
            / ((8e4_f64).powf(1.0 / 3.0) - (1e4_f64).powf(1.0 / 3.0));
        assert!(
            (slope3 + h.c3()).abs() < 1e-3 * h.c3(),
            "slope {slope3} vs -c3 {}",
            -h.c3()
        );

        // both bounds dominate the exact diagonal
        for i in 0..=40 {
            let t = 10f64.powf(-2.0 + 4.0 * i as f64 / 40.0);
            let (first, second) = heat_bound_exponential(&h, t).unwrap();
            let exact = h3_exact_diagonal(t);
            assert!(first.value >= exact, "t={t}");
            assert!(second.unwrap().value >= exact, "t={t}");
        }
    }

    #[test]
    fn remark_bound_from_heat_diagonal() {
        // e * p_{1/lambda} dominates the exact H^3 counting function
        let p = |t: f64| h3_exact_diagonal(t);
        for i in 0..=30 {
            let lambda = 1.1 * 10f64.powf(3.0 * i as f64 / 30.0);
            let lhs = spectral_from_heat(p, lambda);
            let rhs = real_hyperbolic_odd_spectral(3, 0.0, lambda).unwrap();
            assert!(lhs >= rhs, "lambda={lambda}: {lhs} < {rhs}");
        }
    }

    #[test]
    fn hypothesis_verifiers_reject_bad_constants() {
        let profile = ModelSpace::Sphere { dim: 2 }.volume_profile().unwrap();
        // pi is the small-r limit of V/r^2, so any c above it must fail
        assert!(!verify_poly_growth(&profile, 3.2, 2.0, PI, 400));
        let h3 = ModelSpace::RealHyperbolic { dim: 3 }.volume_profile().unwrap();
        assert!(!verify_exp_growth(&h3, 10.0, 2.0, 1.0, 40.0, 200));
    }
}
