//! Cross-module invariants: exact spectral data must sit below every bound,
//! Weyl ratios must come out right, and the two bound forms must be ordered.

use specbounds::bounds::{
    counting_bound_alpha, counting_bound_integral, local_counting_bound, CompactSpaceData,
};
use specbounds::geometry::{omega_d, ModelSpace};
use specbounds::specialfns::QuadratureConfig;
use specbounds::spectra::*;
use std::f64::consts::PI;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

/// Exact counting data for one model space: global for compact spaces,
/// local (spectral-function diagonal) otherwise.
fn exact_counting(space: &ModelSpace, lambda: f64) -> f64 {
    match *space {
        ModelSpace::Circle => circle_counting(lambda) as f64,
        ModelSpace::Sphere { dim } => sphere_counting(dim, lambda) as f64,
        ModelSpace::Euclidean { dim } => euclidean_local_counting(dim, lambda),
        ModelSpace::RealHyperbolic { dim } => {
            if dim % 2 == 1 {
                real_hyperbolic_odd_spectral(dim, 0.0, lambda).unwrap()
            } else {
                real_hyperbolic_even_local_counting(dim, lambda, &cfg()).unwrap()
            }
        }
        ModelSpace::ComplexHyperbolic { complex_dim } => {
            complex_hyperbolic_local_counting(complex_dim, lambda, &cfg()).unwrap()
        }
    }
}

fn bound_integral(space: &ModelSpace, lambda: f64) -> f64 {
    if space.total_volume().is_finite() {
        let data = CompactSpaceData::from_model(space).unwrap();
        counting_bound_integral(&data, lambda, &cfg()).unwrap().value
    } else {
        let profile = space.volume_profile().unwrap();
        local_counting_bound(&profile, lambda, None, &cfg()).unwrap().value
    }
}

fn bound_alpha(space: &ModelSpace, lambda: f64, alpha: f64) -> f64 {
    if space.total_volume().is_finite() {
        let data = CompactSpaceData::from_model(space).unwrap();
        counting_bound_alpha(&data, lambda, alpha).unwrap().value
    } else {
        let profile = space.volume_profile().unwrap();
        local_counting_bound(&profile, lambda, Some(alpha), &cfg()).unwrap().value
    }
}

const ALL_SPACES: [ModelSpace; 12] = [
    ModelSpace::Circle,
    ModelSpace::Sphere { dim: 2 },
    ModelSpace::Sphere { dim: 3 },
    ModelSpace::Euclidean { dim: 1 },
    ModelSpace::Euclidean { dim: 2 },
    ModelSpace::Euclidean { dim: 3 },
    ModelSpace::RealHyperbolic { dim: 2 },
    ModelSpace::RealHyperbolic { dim: 3 },
    ModelSpace::RealHyperbolic { dim: 5 },
    ModelSpace::RealHyperbolic { dim: 6 },
    ModelSpace::ComplexHyperbolic { complex_dim: 2 },
    ModelSpace::ComplexHyperbolic { complex_dim: 3 },
];

#[test]
fn exact_below_integral_below_alpha_everywhere() {
    let alphas = [0.2, 0.5, PI / 4.0, 1.2, 1.5];
    for space in &ALL_SPACES {
        let bottom = space.spectrum_bottom();
        for i in 0..50 {
            // 50-point log grid over three decades above the spectrum bottom
            let lambda = (bottom + 0.07) * 10f64.powf(3.0 * i as f64 / 49.0);
            let exact = exact_counting(space, lambda);
            let integral = bound_integral(space, lambda);
            assert!(
                exact <= integral * (1.0 + 1e-9),
                "{space:?} lambda={lambda}: exact {exact} above integral bound {integral}"
            );
            for &alpha in &alphas {
                let upper = bound_alpha(space, lambda, alpha);
                assert!(
                    integral <= upper * (1.0 + 1e-9),
                    "{space:?} lambda={lambda} alpha={alpha}: {integral} above {upper}"
                );
            }
        }
    }
}

#[test]
fn weyl_ratios_at_large_lambda() {
    // counting(lambda) / lambda^(n/2) -> omega_n / (2 pi)^n, within 5% at
    // lambda = 1e4 + spectrum bottom (volume-normalized for compact spaces)
    for space in &ALL_SPACES {
        let n = space.real_dimension();
        let lambda = 1e4 + space.spectrum_bottom();
        let mut local = exact_counting(space, lambda);
        if space.total_volume().is_finite() {
            local /= space.total_volume();
        }
        let ratio = local / lambda.powf(n as f64 / 2.0);
        let weyl = omega_d(n) / (2.0 * PI).powi(n as i32);
        assert!(
            ((ratio - weyl) / weyl).abs() < 0.05,
            "{space:?}: ratio {ratio} vs weyl {weyl}"
        );
    }
}

#[test]
fn even_spectral_kernel_bounded_by_diagonal() {
    // |e_lambda(x, y)| <= e_lambda(x, x) for the even hyperbolic plane
    let lambda = 8.0;
    let diag = real_hyperbolic_even_local_counting(2, lambda, &cfg()).unwrap();
    for i in 1..=12 {
        let r = 0.4 * i as f64;
        let off = real_hyperbolic_even_spectral(2, r, lambda, &cfg()).unwrap();
        assert!(off.abs() <= diag * (1.0 + 1e-9), "r={r}: {off} vs {diag}");
    }
}
