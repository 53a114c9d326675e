//! Model-space names accepted on the command line and their exact counting
//! and bound evaluators.
//!
//! Compact spaces (circle, spheres) use the global counting function and the
//! volume-weighted bound; noncompact spaces use the spectral-function
//! diagonal and the local bound.

use crate::CliError;
use specbounds::bounds::{
    counting_bound_alpha, counting_bound_integral, local_counting_bound, BoundResult,
    CompactSpaceData,
};
use specbounds::geometry::ModelSpace;
use specbounds::specialfns::QuadratureConfig;
use specbounds::spectra::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Circle,
    Sphere(u32),
    RealHyperbolic(u32),
    ComplexHyperbolic(u32),
    Euclidean(u32),
}

impl std::str::FromStr for Space {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let lower = s.to_ascii_lowercase();
        let usage = || {
            CliError::Usage(format!(
                "unknown space '{s}' (expected circle, s<d>, h2..h7, ch2..ch4, or euclidean-<d>)"
            ))
        };
        if lower == "circle" {
            return Ok(Space::Circle);
        }
        if let Some(d) = lower.strip_prefix("euclidean-") {
            let d: u32 = d.parse().map_err(|_| usage())?;
            if d < 1 {
                return Err(usage());
            }
            return Ok(Space::Euclidean(d));
        }
        if let Some(d) = lower.strip_prefix("ch") {
            let d: u32 = d.parse().map_err(|_| usage())?;
            if !(2..=4).contains(&d) {
                return Err(usage());
            }
            return Ok(Space::ComplexHyperbolic(d));
        }
        if let Some(d) = lower.strip_prefix('s') {
            let d: u32 = d.parse().map_err(|_| usage())?;
            if d < 1 {
                return Err(usage());
            }
            return Ok(Space::Sphere(d));
        }
        if let Some(d) = lower.strip_prefix('h') {
            let d: u32 = d.parse().map_err(|_| usage())?;
            if !(2..=7).contains(&d) {
                return Err(usage());
            }
            return Ok(Space::RealHyperbolic(d));
        }
        Err(usage())
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::Circle => write!(f, "circle"),
            Space::Sphere(d) => write!(f, "s{d}"),
            Space::RealHyperbolic(d) => write!(f, "h{d}"),
            Space::ComplexHyperbolic(d) => write!(f, "ch{d}"),
            Space::Euclidean(d) => write!(f, "euclidean-{d}"),
        }
    }
}

impl Space {
    pub fn model(&self) -> ModelSpace {
        match *self {
            Space::Circle => ModelSpace::Circle,
            Space::Sphere(d) => ModelSpace::Sphere { dim: d },
            Space::RealHyperbolic(d) => ModelSpace::RealHyperbolic { dim: d },
            Space::ComplexHyperbolic(d) => ModelSpace::ComplexHyperbolic { complex_dim: d },
            Space::Euclidean(d) => ModelSpace::Euclidean { dim: d },
        }
    }

    pub fn is_compact(&self) -> bool {
        matches!(self, Space::Circle | Space::Sphere(_))
    }

    pub fn spectrum_bottom(&self) -> f64 {
        self.model().spectrum_bottom()
    }

    pub fn compact_data(&self) -> Result<CompactSpaceData, CliError> {
        CompactSpaceData::from_model(&self.model())
            .map_err(|e| CliError::Numerical(e.to_string()))
    }

    /// Exact counting function: global for compact spaces, local diagonal
    /// otherwise.
    pub fn exact_counting(&self, lambda: f64, cfg: &QuadratureConfig) -> Result<f64, CliError> {
        let num = |e: specbounds::Error| CliError::Numerical(e.to_string());
        match *self {
            Space::Circle => Ok(circle_counting(lambda) as f64),
            Space::Sphere(d) => Ok(sphere_counting(d, lambda) as f64),
            Space::Euclidean(d) => Ok(euclidean_local_counting(d, lambda)),
            Space::RealHyperbolic(d) if d % 2 == 1 => {
                real_hyperbolic_odd_spectral(d, 0.0, lambda).map_err(num)
            }
            Space::RealHyperbolic(d) => {
                real_hyperbolic_even_local_counting(d, lambda, cfg).map_err(num)
            }
            Space::ComplexHyperbolic(d) => {
                complex_hyperbolic_local_counting(d, lambda, cfg).map_err(num)
            }
        }
    }

    /// Geometric data for bound evaluation, built once per sweep.
    pub fn bound_context(&self) -> Result<BoundContext, CliError> {
        if self.is_compact() {
            Ok(BoundContext::Compact(self.compact_data()?))
        } else {
            let profile = self
                .model()
                .volume_profile()
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            Ok(BoundContext::Local(profile))
        }
    }

    /// One-shot counting bound; sweeps should go through [`bound_context`].
    ///
    /// [`bound_context`]: Space::bound_context
    pub fn counting_bound(
        &self,
        lambda: f64,
        alpha: Option<f64>,
        cfg: &QuadratureConfig,
    ) -> Result<BoundResult, CliError> {
        self.bound_context()?.counting_bound(lambda, alpha, cfg)
    }

    /// `sqrt(lambda_k)` where the spectrum is known exactly.
    pub fn true_sqrt_eigenvalue(&self, k: u64) -> Option<f64> {
        match *self {
            Space::Circle => Some(circle_kth_sqrt_eigenvalue(k)),
            Space::Sphere(d) => Some(sphere_kth_sqrt_eigenvalue(d, k)),
            _ => None,
        }
    }
}

/// Volume data a counting-bound sweep evaluates against: the compact form
/// carries the total volume and diameter, the local form just the profile.
pub enum BoundContext {
    Compact(CompactSpaceData),
    Local(specbounds::geometry::VolumeProfile),
}

impl BoundContext {
    pub fn counting_bound(
        &self,
        lambda: f64,
        alpha: Option<f64>,
        cfg: &QuadratureConfig,
    ) -> Result<BoundResult, CliError> {
        let num = |e: specbounds::Error| CliError::Numerical(e.to_string());
        match self {
            BoundContext::Compact(data) => match alpha {
                None => counting_bound_integral(data, lambda, cfg).map_err(num),
                Some(a) => counting_bound_alpha(data, lambda, a).map_err(num),
            },
            BoundContext::Local(profile) => {
                local_counting_bound(profile, lambda, alpha, cfg).map_err(num)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_families() {
        assert_eq!("circle".parse::<Space>().unwrap(), Space::Circle);
        assert_eq!("s2".parse::<Space>().unwrap(), Space::Sphere(2));
        assert_eq!("S3".parse::<Space>().unwrap(), Space::Sphere(3));
        assert_eq!("h6".parse::<Space>().unwrap(), Space::RealHyperbolic(6));
        assert_eq!("ch3".parse::<Space>().unwrap(), Space::ComplexHyperbolic(3));
        assert_eq!(
            "euclidean-3".parse::<Space>().unwrap(),
            Space::Euclidean(3)
        );
        for bad in ["h9", "ch5", "s0", "x2", "euclidean-0", "h", "sph"] {
            assert!(bad.parse::<Space>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [
            Space::Circle,
            Space::Sphere(4),
            Space::RealHyperbolic(5),
            Space::ComplexHyperbolic(2),
            Space::Euclidean(1),
        ] {
            assert_eq!(s.to_string().parse::<Space>().unwrap(), s);
        }
    }
}
