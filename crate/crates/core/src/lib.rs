//! Spectral bounds for Riemannian homogeneous spaces.
//!
//! The single geometric input to every bound in this crate is the volume
//! profile `r -> V(r)` of geodesic balls. From it we compute explicit upper
//! bounds on eigenvalue counting functions (compact spaces) and on the
//! diagonal of the spectral function (noncompact spaces), lower bounds on
//! eigenvalues, and upper bounds on heat kernels. The model spaces (the
//! circle `R/Z`, Euclidean space, round spheres, real and complex hyperbolic
//! spaces) come with exact spectral data so every bound can be
//! cross-validated against the truth.
//!
//! Module map:
//! - [`specialfns`]: deterministic quadrature, gamma/Bessel functions,
//!   truncated power series, exact binomials, monotone root finding;
//! - [`geometry`]: model spaces and their ball-volume profiles;
//! - [`bounds`]: counting-function upper bounds and eigenvalue lower bounds;
//! - [`spectra`]: exact counting/spectral functions of the model spaces,
//!   including the symbolic engine for the radial operator
//!   `(-1/sinh r) d/dr`;
//! - [`heat`]: heat-kernel upper bounds, exact odd-dimensional hyperbolic
//!   heat kernels, and the Laplace-transform bridge between spectral
//!   functions and heat kernels.
//!
//! All computations are deterministic: identical inputs produce bit-identical
//! outputs, with no global mutable state.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod heat;
pub mod specialfns;
pub mod spectra;

pub use bounds::{BoundResult, CompactSpaceData};
pub use error::{Error, Result};
pub use geometry::{ModelSpace, VolumeProfile};
pub use specialfns::QuadratureConfig;
