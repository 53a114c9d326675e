//! Error type shared by every module in the crate.

/// Errors produced by numerical routines and domain validation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Adaptive quadrature exhausted its subdivision budget. Carries the best
    /// available estimate and a bound on its error.
    #[error(
        "quadrature did not converge within {max_subdivisions} subdivisions \
         (best estimate {estimate:e}, error bound {error_bound:e})"
    )]
    NonConvergence {
        estimate: f64,
        error_bound: f64,
        max_subdivisions: u32,
    },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root-finding target lies outside the bracketing interval.
    #[error("target {target:e} outside bracket [{f_lo:e}, {f_hi:e}]")]
    Bracket { target: f64, f_lo: f64, f_hi: f64 },

    /// Input data violate a structural invariant (e.g. inconsistent volume
    /// and diameter for a compact space).
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A limit that should be finite has singular parts that fail to cancel.
    #[error("singular limit: {0}")]
    SingularLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
