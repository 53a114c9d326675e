//! Model spaces and their geodesic-ball volume profiles.
//!
//! The volume profile `r -> V(r)` is the only geometric input the bounds
//! consume. Profiles are exact where a closed form exists (Euclidean, complex
//! hyperbolic, circle) and quadrature-backed otherwise; the antiderivative
//! forms live in the tests as independent oracles.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::specialfns::{integrate, ln_gamma, QuadratureConfig};

/// A model geometry with its normalization fixed once and for all: spheres
/// have curvature +1, real hyperbolic spaces curvature -1, and the complex
/// hyperbolic metric is scaled so the bottom of the spectrum of `CH^d` is
/// `d^2`. The circle is `R/Z`, circumference 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelSpace {
    Circle,
    Euclidean { dim: u32 },
    Sphere { dim: u32 },
    RealHyperbolic { dim: u32 },
    ComplexHyperbolic { complex_dim: u32 },
}

impl ModelSpace {
    fn validate(&self) -> Result<()> {
        match *self {
            ModelSpace::Circle => Ok(()),
            ModelSpace::Euclidean { dim }
            | ModelSpace::Sphere { dim }
            | ModelSpace::RealHyperbolic { dim } => {
                if dim >= 1 {
                    Ok(())
                } else {
                    Err(Error::Domain("dimension must be at least 1".into()))
                }
            }
            ModelSpace::ComplexHyperbolic { complex_dim } => {
                if complex_dim >= 2 {
                    Ok(())
                } else {
                    Err(Error::Domain(
                        "complex hyperbolic space needs complex dimension >= 2".into(),
                    ))
                }
            }
        }
    }

    /// Real (manifold) dimension.
    pub fn real_dimension(&self) -> u32 {
        match *self {
            ModelSpace::Circle => 1,
            ModelSpace::Euclidean { dim }
            | ModelSpace::Sphere { dim }
            | ModelSpace::RealHyperbolic { dim } => dim,
            ModelSpace::ComplexHyperbolic { complex_dim } => 2 * complex_dim,
        }
    }

    /// Total Riemannian volume (infinite for the noncompact families).
    pub fn total_volume(&self) -> f64 {
        match *self {
            ModelSpace::Circle => 1.0,
            ModelSpace::Sphere { dim } => unit_sphere_area(dim + 1),
            _ => f64::INFINITY,
        }
    }

    /// Diameter (infinite for the noncompact families).
    pub fn diameter(&self) -> f64 {
        match *self {
            ModelSpace::Circle => 0.5,
            ModelSpace::Sphere { .. } => PI,
            _ => f64::INFINITY,
        }
    }

    /// Bottom of the L2 spectrum of the Laplacian.
    pub fn spectrum_bottom(&self) -> f64 {
        match *self {
            ModelSpace::RealHyperbolic { dim } => {
                let b = (dim as f64 - 1.0) / 2.0;
                b * b
            }
            ModelSpace::ComplexHyperbolic { complex_dim } => {
                (complex_dim as f64) * (complex_dim as f64)
            }
            _ => 0.0,
        }
    }

    /// The ball-volume profile of this space.
    pub fn volume_profile(&self) -> Result<VolumeProfile> {
        self.validate()?;
        let space = *self;
        let valid_radius = match space {
            ModelSpace::Circle => 0.5,
            ModelSpace::Sphere { .. } => PI,
            _ => f64::INFINITY,
        };
        Ok(VolumeProfile::new(
            move |r| ball_volume(&space, r).expect("model-space ball volume"),
            valid_radius,
            self.total_volume(),
            self.diameter(),
            self.real_dimension(),
        ))
    }
}

/// A monotone ball-volume function `r -> V(r)` with its validity data.
#[derive(Clone)]
pub struct VolumeProfile {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    /// Radius up to which the profile is strictly increasing (injectivity cap).
    pub valid_radius: f64,
    /// Total volume of the space; `V(r) <= total_volume` everywhere.
    pub total_volume: f64,
    pub diameter: f64,
    pub dimension: u32,
}

impl VolumeProfile {
    pub fn new(
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        valid_radius: f64,
        total_volume: f64,
        diameter: f64,
        dimension: u32,
    ) -> Self {
        let profile = VolumeProfile {
            eval: Arc::new(eval),
            valid_radius,
            total_volume,
            diameter,
            dimension,
        };
        debug_assert!(profile.evaluate(0.0).abs() < 1e-12, "V(0) must vanish");
        debug_assert!(
            {
                // small balls are Euclidean: V(r) / (omega_d r^d) -> 1
                let r = 1e-4;
                let ratio = profile.evaluate(r) / (omega_d(dimension) * r.powi(dimension as i32));
                (ratio - 1.0).abs() < 1e-3
            },
            "small-ball volume must match the Euclidean law"
        );
        profile
    }

    /// `V(r)`.
    pub fn evaluate(&self, r: f64) -> f64 {
        (self.eval)(r)
    }
}

impl std::fmt::Debug for VolumeProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VolumeProfile")
            .field("valid_radius", &self.valid_radius)
            .field("total_volume", &self.total_volume)
            .field("diameter", &self.diameter)
            .field("dimension", &self.dimension)
            .finish()
    }
}

/// Volume of the unit ball in `R^d`: `pi^(d/2) / Gamma(d/2 + 1)`.
pub fn omega_d(d: u32) -> f64 {
    let df = d as f64;
    ((df / 2.0) * PI.ln() - ln_gamma(df / 2.0 + 1.0).expect("gamma of positive argument")).exp()
}

/// Surface area of the unit sphere `S^(n-1)` in `R^n`: `2 pi^(n/2) / Gamma(n/2)`.
pub fn unit_sphere_area(n: u32) -> f64 {
    let nf = n as f64;
    2.0 * ((nf / 2.0) * PI.ln() - ln_gamma(nf / 2.0).expect("gamma of positive argument")).exp()
}

fn profile_cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

/// Volume of the geodesic ball of radius `r` in a model space.
///
/// Sphere radii are clamped at pi (the ball saturates at the whole sphere);
/// the circle profile is `min(2r, 1)`.
pub fn ball_volume(space: &ModelSpace, r: f64) -> Result<f64> {
    space.validate()?;
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    match *space {
        ModelSpace::Circle => Ok((2.0 * r).min(1.0)),
        ModelSpace::Euclidean { dim } => Ok(omega_d(dim) * r.powi(dim as i32)),
        ModelSpace::Sphere { dim } => {
            let cap = r.min(PI);
            let shell = integrate(
                |x: f64| x.sin().powi(dim as i32 - 1),
                0.0,
                cap,
                &profile_cfg(),
            )?;
            Ok(unit_sphere_area(dim) * shell)
        }
        ModelSpace::RealHyperbolic { dim } => {
            let shell = integrate(
                |x: f64| x.sinh().powi(dim as i32 - 1),
                0.0,
                r,
                &profile_cfg(),
            )?;
            Ok(unit_sphere_area(dim) * shell)
        }
        ModelSpace::ComplexHyperbolic { complex_dim } => {
            // density sinh^(2d-1)(x) cosh(x) integrates in closed form
            let n = 2 * complex_dim;
            Ok(unit_sphere_area(n) * r.sinh().powi(n as i32) / n as f64)
        }
    }
}

/// Ball volume in the simply connected space form of constant curvature
/// `kappa`, dimension `d`.
///
/// Coincides with [`ball_volume`] on the sphere (`kappa = 1`) and real
/// hyperbolic space (`kappa = -1`); for `kappa > 0` the radius must not
/// exceed `pi / sqrt(kappa)`.
pub fn constant_curvature_volume(kappa: f64, d: u32, r: f64) -> Result<f64> {
    if d < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!(
            "radius must be nonnegative and finite, got {r}"
        )));
    }
    if kappa == 0.0 {
        return Ok(omega_d(d) * r.powi(d as i32));
    }
    let scale = kappa.abs().sqrt();
    if kappa > 0.0 && r * scale > PI * (1.0 + 1e-12) {
        return Err(Error::Domain(format!(
            "radius {r} exceeds the diameter pi/sqrt(kappa) of the curvature-{kappa} sphere"
        )));
    }
    let upper = (r * scale).min(PI);
    let shell = if kappa > 0.0 {
        integrate(|x: f64| x.sin().powi(d as i32 - 1), 0.0, upper, &profile_cfg())?
    } else {
        integrate(
            |x: f64| x.sinh().powi(d as i32 - 1),
            0.0,
            upper,
            &profile_cfg(),
        )?
    };
    Ok(unit_sphere_area(d) * scale.powi(-(d as i32)) * shell)
}

/// The moment `m_d = int_0^(pi/2) theta^d sin(2 theta) d theta`, defined for
/// real `d >= 0`; positive and decreasing in `d`.
pub fn m_d(d: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(d >= 0.0) {
        return Err(Error::Domain(format!("exponent must be nonnegative, got {d}")));
    }
    integrate(
        |theta: f64| theta.powf(d) * (2.0 * theta).sin(),
        0.0,
        PI / 2.0,
        cfg,
    )
}
