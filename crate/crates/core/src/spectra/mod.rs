//! Exact spectral and counting functions of the model spaces.
//!
//! The centerpiece is a small symbolic engine for the radial operator
//! `A = (-1/sinh r) d/dr`: iterating `A` on `sin(s r)/r` (or on a Gaussian)
//! stays inside a finite class of terms `c r^p cosh^a(r) sinh^q(r) K(r)`,
//! which is exactly how the odd-dimensional hyperbolic spectral functions and
//! heat kernels are generated. Diagonal (`r -> 0`) values come from truncated
//! power series, so the cancellation of the singular parts is verified rather
//! than approximated.

mod elementary;
mod hyperbolic;
mod term;

pub use elementary::{
    circle_counting, circle_kth_sqrt_eigenvalue, euclidean_local_counting, euclidean_spectral,
    s2_closed_form, sphere_counting, sphere_kth_sqrt_eigenvalue, sphere_spectrum, SpectrumPoint,
};
pub use hyperbolic::{
    complex_hyperbolic_local_counting, real_hyperbolic_even_local_counting,
    real_hyperbolic_even_spectral, real_hyperbolic_odd_spectral,
};
pub use term::{Kernel, Term, TermSum};
