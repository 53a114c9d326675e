//! Spectral and local counting functions of real and complex hyperbolic
//! spaces.
//!
//! Odd-dimensional real hyperbolic spectral functions are generated by the
//! symbolic engine: for `H^d` with `d` odd and `b_d = (d-1)^2/4`,
//!
//! ```text
//! e_lambda(r) = 2 / (2 pi)^((d+1)/2) * A^((d-1)/2) [ sin(r sqrt(lambda - b_d)) / r ]
//! ```
//!
//! with `A = (-1/sinh r) d/dr`, vanishing below the spectrum bottom. Even
//! dimensions go through a weighted integral of the same operator output, and
//! complex hyperbolic diagonals come as explicit one-dimensional integrals.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specialfns::{integrate, integrate_semiinfinite_expdecay, QuadratureConfig};
use crate::spectra::term::TermSum;

/// Bottom of the spectrum of real hyperbolic `H^d`: `(d-1)^2 / 4`.
pub fn real_hyperbolic_bottom(d: u32) -> f64 {
    let b = (d as f64 - 1.0) / 2.0;
    b * b
}

/// Bottom of the spectrum of complex hyperbolic `CH^d`: `d^2`.
pub fn complex_hyperbolic_bottom(d: u32) -> f64 {
    (d as f64) * (d as f64)
}

fn check_odd_dim(d: u32) -> Result<()> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::Domain(format!(
            "odd hyperbolic dimension must be an odd integer >= 3, got {d}"
        )));
    }
    Ok(())
}

/// Spectral function of `H^d` for odd `d >= 3` at distance `r >= 0`.
///
/// Zero for `lambda < (d-1)^2/4`; the diagonal (`r = 0`) is taken as a
/// series limit so the singular parts of the operator output cancel exactly.
pub fn real_hyperbolic_odd_spectral(d: u32, r: f64, lambda: f64) -> Result<f64> {
    check_odd_dim(d)?;
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    let bottom = real_hyperbolic_bottom(d);
    if lambda < bottom {
        return Ok(0.0);
    }
    let freq = (lambda - bottom).sqrt();
    let applications = (d - 1) / 2;
    let sum = TermSum::sin_over_r(freq).apply_hyperbolic_operator(applications);
    let prefactor = 2.0 / (2.0 * PI).powi((d as i32 + 1) / 2);
    let core = if r == 0.0 {
        sum.limit_at_zero(2 * applications as usize + 8)?
    } else {
        sum.evaluate(r)
    };
    Ok(prefactor * core)
}

fn even_counting_integrand(d: u32) -> Result<fn(f64) -> f64> {
    match d {
        2 => Ok(|a: f64| a * (PI * a).tanh() / (2.0 * PI)),
        4 => Ok(|a: f64| (4.0 * a.powi(3) + a) * (PI * a).tanh() / (32.0 * PI * PI)),
        6 => Ok(|a: f64| {
            (16.0 * a.powi(5) + 40.0 * a.powi(3) + 9.0 * a) * (PI * a).tanh()
                / (1024.0 * PI.powi(3))
        }),
        _ => Err(Error::Domain(format!(
            "even hyperbolic counting is implemented for d in {{2, 4, 6}}, got {d}"
        ))),
    }
}

/// Local counting function (spectral-function diagonal) of `H^d` for
/// `d in {2, 4, 6}`; zero below the spectrum bottom.
pub fn real_hyperbolic_even_local_counting(
    d: u32,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let integrand = even_counting_integrand(d)?;
    let bottom = real_hyperbolic_bottom(d);
    if lambda <= bottom {
        return Ok(0.0);
    }
    integrate(integrand, 0.0, (lambda - bottom).sqrt(), cfg)
}

/// Off-diagonal spectral function of `H^d` for `d in {2, 4, 6}` and `r > 0`:
///
/// ```text
/// 2 sqrt(2) / (2 pi)^((d+2)/2) *
///     int_r^inf  sinh s / sqrt(cosh s - cosh r) * A^(d/2)[sin(s a)/s] ds
/// ```
///
/// The endpoint square-root singularity is removed by substituting
/// `cosh s = cosh r + v^2` on `[r, r+1]`; the remainder decays like
/// `exp(-(d/2 - 1/2) s)` (each operator application carries a `1/sinh`) and
/// goes to the semi-infinite integrator.
pub fn real_hyperbolic_even_spectral(
    d: u32,
    r: f64,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !matches!(d, 2 | 4 | 6) {
        return Err(Error::Domain(format!(
            "even hyperbolic spectral function is implemented for d in {{2, 4, 6}}, got {d}"
        )));
    }
    if !(r > 0.0) {
        return Err(Error::Domain(format!(
            "off-diagonal radius must be positive, got {r}"
        )));
    }
    let bottom = real_hyperbolic_bottom(d);
    if lambda <= bottom {
        return Ok(0.0);
    }
    let freq = (lambda - bottom).sqrt();
    let applications = d / 2;
    let sum = TermSum::sin_over_r(freq).apply_hyperbolic_operator(applications);

    let delta = 1.0;
    // cosh(r + delta) - cosh(r) = 2 sinh(r + delta/2) sinh(delta/2), stable
    // for small r
    let v_max = (2.0 * (r + 0.5 * delta).sinh() * (0.5 * delta).sinh()).sqrt();
    let cosh_r_minus_1 = 2.0 * (0.5 * r).sinh().powi(2);
    let head = 2.0
        * integrate(
            |v: f64| {
                // s = arccosh(cosh r + v^2) through log1p, accurate near v = 0
                let u = cosh_r_minus_1 + v * v; // cosh s - 1
                let sinh_s = (u * (u + 2.0)).sqrt();
                let s = (u + sinh_s).ln_1p();
                sum.evaluate(s)
            },
            0.0,
            v_max,
            cfg,
        )?;

    let rate = applications as f64 - 0.5;
    let tail = integrate_semiinfinite_expdecay(
        |s: f64| {
            let weight = 2.0 * (0.5 * (s + r)).sinh() * (0.5 * (s - r)).sinh();
            s.sinh() / weight.sqrt() * sum.evaluate(s)
        },
        r + delta,
        rate,
        cfg,
    )?;

    let prefactor = 2.0 * std::f64::consts::SQRT_2 / (2.0 * PI).powi((d as i32 + 2) / 2);
    Ok(prefactor * (head + tail))
}

/// `a^3 coth(pi a / 2)` with the removable singularity at `a = 0` patched by
/// a six-term even series on `[0, 1e-3]` so generic quadrature never samples
/// the 0/0 point.
fn a3_coth_half(a: f64) -> f64 {
    if a < 1e-3 {
        let a2 = a * a;
        // a^3 coth(pi a/2) = (2/pi) a^2 + (pi/6) a^4 - (pi^3/360) a^6
        //   + (pi^5/15120) a^8 - (pi^7/604800) a^10 + (pi^9/23950080) a^12
        let p = PI;
        return a2
            * (2.0 / p
                + a2 * (p / 6.0
                    + a2 * (-p.powi(3) / 360.0
                        + a2 * (p.powi(5) / 15120.0
                            + a2 * (-p.powi(7) / 604_800.0
                                + a2 * (p.powi(9) / 23_950_080.0))))));
    }
    a.powi(3) * (PI * a / 2.0).cosh() / (PI * a / 2.0).sinh()
}

/// Local counting function of complex hyperbolic `CH^d` for `d in {2, 3, 4}`
/// (real dimension `2d`); zero below the spectrum bottom `d^2`.
pub fn complex_hyperbolic_local_counting(
    d: u32,
    lambda: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let bottom = complex_hyperbolic_bottom(d);
    let integrand: Box<dyn Fn(f64) -> f64> = match d {
        2 => Box::new(|a: f64| a3_coth_half(a) / (8.0 * PI * PI)),
        3 => Box::new(|a: f64| {
            let q = a * a + 1.0;
            a * q * q * (PI * a / 2.0).tanh() / (64.0 * PI.powi(3))
        }),
        4 => Box::new(|a: f64| {
            let q = a * a + 4.0;
            a3_coth_half(a) * q * q / (768.0 * PI.powi(4))
        }),
        _ => {
            return Err(Error::Domain(format!(
                "complex hyperbolic counting is implemented for d in {{2, 3, 4}}, got {d}"
            )))
        }
    };
    if lambda <= bottom {
        return Ok(0.0);
    }
    integrate(&*integrand, 0.0, (lambda - bottom).sqrt(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    /// Closed-form diagonals for d = 3, 5, 7 with nu = lambda - bottom.
    fn odd_diagonal_closed_form(d: u32, lambda: f64) -> f64 {
        let nu = lambda - real_hyperbolic_bottom(d);
        match d {
            3 => nu.powf(1.5) / (6.0 * PI * PI),
            5 => (3.0 * nu + 5.0) * nu.powf(1.5) / (180.0 * PI.powi(3)),
            7 => {
                (3.0 * nu * nu + 21.0 * nu + 28.0) * nu.powf(1.5) / (2520.0 * PI.powi(4))
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn odd_diagonals_match_closed_forms() {
        for d in [3u32, 5, 7] {
            let bottom = real_hyperbolic_bottom(d);
            for i in 0..40 {
                // log-spaced nu from 0.1 to 1e4
                let nu = 0.1 * 10f64.powf(5.0 * i as f64 / 39.0);
                let lambda = bottom + nu;
                let engine = real_hyperbolic_odd_spectral(d, 0.0, lambda).unwrap();
                let exact = odd_diagonal_closed_form(d, lambda);
                assert!(
                    ((engine - exact) / exact).abs() < 1e-9,
                    "d={d}, nu={nu}: engine {engine} vs closed form {exact}"
                );
            }
        }
    }

    #[test]
    fn h3_diagonal_at_lambda_two() {
        let v = real_hyperbolic_odd_spectral(3, 0.0, 2.0).unwrap();
        assert!((v - 1.0 / (6.0 * PI * PI)).abs() < 1e-15, "got {v}");
    }

    #[test]
    fn zero_below_bottom() {
        assert_eq!(real_hyperbolic_odd_spectral(3, 0.0, 0.5).unwrap(), 0.0);
        assert_eq!(real_hyperbolic_odd_spectral(5, 1.0, 3.9).unwrap(), 0.0);
        assert_eq!(
            real_hyperbolic_even_local_counting(2, 0.25, &cfg()).unwrap(),
            0.0
        );
        assert_eq!(
            real_hyperbolic_even_spectral(2, 1.0, 0.25, &cfg()).unwrap(),
            0.0
        );
        assert_eq!(
            complex_hyperbolic_local_counting(2, 4.0, &cfg()).unwrap(),
            0.0
        );
    }

    #[test]
    fn even_dimension_validation() {
        assert!(real_hyperbolic_even_local_counting(3, 5.0, &cfg()).is_err());
        assert!(real_hyperbolic_odd_spectral(4, 0.0, 5.0).is_err());
        assert!(real_hyperbolic_odd_spectral(1, 0.0, 5.0).is_err());
        assert!(complex_hyperbolic_local_counting(5, 30.0, &cfg()).is_err());
    }

    #[test]
    fn even_counting_matches_trapezoid_oracle() {
        // independent oracle: 10^6-point trapezoid over the same integrand
        let lambda = 5.0;
        let upper = (lambda - 0.25_f64).sqrt();
        let f = |a: f64| a * (PI * a).tanh() / (2.0 * PI);
        let n = 1_000_000;
        let h = upper / n as f64;
        let mut acc = 0.5 * (f(0.0) + f(upper));
        for i in 1..n {
            acc += f(i as f64 * h);
        }
        let oracle = acc * h;
        let v = real_hyperbolic_even_local_counting(2, lambda, &cfg()).unwrap();
        assert!((v - oracle).abs() < 1e-8, "{v} vs {oracle}");
    }

    #[test]
    fn even_spectral_matches_sqrt_substitution_oracle() {
        // independent endpoint treatment: s = r + w^2 absorbs the
        // (s - r)^(-1/2) part of the Jacobi-type weight
        let (d, r, lambda) = (2u32, 1.0_f64, 2.0_f64);
        let freq = (lambda - 0.25_f64).sqrt();
        let sum = TermSum::sin_over_r(freq).apply_hyperbolic_operator(1);
        let g = |s: f64| sum.evaluate(s);
        let oracle_integrand = |w: f64| {
            if w == 0.0 {
                // limit: cosh s - cosh r ~ sinh(r) w^2
                return 2.0 * r.sinh().sqrt() * g(r);
            }
            let s = r + w * w;
            let denom = (s.cosh() - r.cosh()).sqrt();
            2.0 * w * s.sinh() / denom * g(s)
        };
        // fine fixed Simpson grid on w in [0, sqrt(40)]
        let w_max = 40.0_f64.sqrt();
        let n = 400_000;
        let h = w_max / n as f64;
        let mut acc = oracle_integrand(0.0) + oracle_integrand(w_max);
        for i in 1..n {
            let w = i as f64 * h;
            acc += if i % 2 == 1 { 4.0 } else { 2.0 } * oracle_integrand(w);
        }
        let oracle = acc * h / 3.0 * 2.0 * std::f64::consts::SQRT_2 / (2.0 * PI).powi(2);
        let v = real_hyperbolic_even_spectral(d, r, lambda, &cfg()).unwrap();
        assert!((v - oracle).abs() < 1e-6 * oracle.abs().max(1.0), "{v} vs {oracle}");
    }

    #[test]
    fn even_spectral_diagonal_limit_recovers_counting() {
        let lambda = 5.0;
        let spectral = real_hyperbolic_even_spectral(2, 1e-4, lambda, &cfg()).unwrap();
        let counting = real_hyperbolic_even_local_counting(2, lambda, &cfg()).unwrap();
        assert!(
            ((spectral - counting) / counting).abs() < 1e-6,
            "spectral {spectral} vs counting {counting}"
        );
    }

    #[test]
    fn even_spectral_extrapolates_to_counting_in_higher_dimensions() {
        // the deeper operator stacks lose too many digits to evaluate at
        // r = 1e-4 directly; Richardson in r^2 reaches the diagonal instead
        let cfg = cfg();
        for (d, lambda) in [(4u32, 7.0), (6u32, 12.0)] {
            let at = |r: f64| real_hyperbolic_even_spectral(d, r, lambda, &cfg).unwrap();
            let extrapolated = (4.0 * at(0.1) - at(0.2)) / 3.0;
            let counting = real_hyperbolic_even_local_counting(d, lambda, &cfg).unwrap();
            assert!(
                ((extrapolated - counting) / counting).abs() < 1e-3,
                "d={d}: extrapolated {extrapolated} vs counting {counting}"
            );
        }
    }

    #[test]
    fn complex_counting_matches_dense_grid_oracle() {
        // dense-grid Simpson with the same series patch near zero
        let lambda = 8.0;
        let upper = (lambda - 4.0_f64).sqrt();
        let f = |a: f64| a3_coth_half(a) / (8.0 * PI * PI);
        let n = 1_000_000;
        let h = upper / n as f64;
        let mut acc = f(0.0) + f(upper);
        for i in 1..n {
            acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
        }
        let oracle = acc * h / 3.0;
        let v = complex_hyperbolic_local_counting(2, lambda, &cfg()).unwrap();
        assert!((v - oracle).abs() < 1e-8, "{v} vs {oracle}");
    }

    #[test]
    fn coth_patch_matches_direct_form() {
        // evaluate the patched series against cosh/sinh at the same points
        for &a in &[1e-4, 5e-4, 1e-3 - 1e-9] {
            let patched = a3_coth_half(a);
            let direct = a * a * a * (PI * a / 2.0).cosh() / (PI * a / 2.0).sinh();
            assert!(
                ((patched - direct) / direct).abs() < 1e-11,
                "a={a}: {patched} vs {direct}"
            );
        }
    }

    #[test]
    fn counting_functions_nondecreasing() {
        let cfg = cfg();
        let mut prev = -1.0;
        for i in 0..=500 {
            let lambda = 0.25 + 30.0 * i as f64 / 500.0;
            let v = real_hyperbolic_even_local_counting(2, lambda, &cfg).unwrap();
            assert!(v >= prev - 1e-12);
            prev = v;
        }
        let mut prev = -1.0;
        for i in 0..=500 {
            let lambda = 4.0 + 40.0 * i as f64 / 500.0;
            let v = complex_hyperbolic_local_counting(2, lambda, &cfg).unwrap();
            assert!(v >= prev - 1e-12);
            prev = v;
        }
    }
}
