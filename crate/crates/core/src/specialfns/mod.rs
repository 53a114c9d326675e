//! Deterministic numerical kernel: quadrature, gamma and Bessel functions,
//! truncated power series, exact binomials, and monotone root finding.
//!
//! Everything here is a pure function of its inputs; there is no global
//! mutable state, so identical calls give bit-identical results from any
//! number of threads.

mod bessel;
mod combinatorics;
mod gamma;
mod quadrature;
mod roots;
mod series;

pub use bessel::bessel_j;
pub use combinatorics::binomial;
pub use gamma::{gamma, ln_gamma, upper_incomplete_gamma};
pub use quadrature::{integrate, integrate_semiinfinite_expdecay, QuadratureConfig};
pub use roots::invert_monotone;
pub use series::PowerSeries;
