//! Adaptive Gauss-Legendre quadrature with deterministic panel bisection.
//!
//! Fixed-order panels are compared against their two-half refinement; a panel
//! is accepted when the two estimates agree within its share of the error
//! budget, otherwise it is split. Processing order is a LIFO stack (left half
//! first), so outputs are bit-identical across runs and thread counts.

use crate::error::{Error, Result};

/// Tolerances and panel parameters for [`integrate`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute error target.
    pub abs_tol: f64,
    /// Relative error target (against the integral's magnitude).
    pub rel_tol: f64,
    /// Budget of panel splits before giving up with `NonConvergence`.
    pub max_subdivisions: u32,
    /// Number of Gauss-Legendre nodes per panel.
    pub panel_order: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_subdivisions: 1 << 16,
            panel_order: 15,
        }
    }
}

impl QuadratureConfig {
    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::Domain(format!(
                "quadrature tolerances must be positive (abs_tol={}, rel_tol={})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_subdivisions == 0 || self.panel_order == 0 {
            return Err(Error::Domain(
                "max_subdivisions and panel_order must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub(crate) struct GaussLegendreRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendreRule {
    /// Nodes are the roots of the Legendre polynomial `P_n`, found by Newton
    /// iteration from the Chebyshev initial guess; weights are
    /// `2 / ((1 - x^2) P_n'(x)^2)`. Roots come in symmetric pairs and are
    /// mirrored exactly.
    pub(crate) fn new(order: usize) -> Self {
        assert!(order >= 1, "panel order must be at least 1");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        for i in 0..half {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..64 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            // one clean-up evaluation so the weight uses the converged root
            let (p, d) = legendre_with_derivative(n, x);
            x -= p / d;
            let dp = d;
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_with_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        GaussLegendreRule { nodes, weights }
    }

    pub(crate) fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

/// `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    let dp = if (x * x - 1.0).abs() < 1e-300 {
        // endpoint derivative, never hit by interior roots
        0.5 * (n * (n + 1)) as f64 * x.signum()
    } else {
        (n as f64) * (x * p - p_prev) / (x * x - 1.0)
    };
    (p, dp)
}

/// Integrates `f` over the finite interval `[a, b]`.
///
/// The result `I` satisfies `|I - integral| <= max(abs_tol, rel_tol * |I|)`
/// for smooth integrands. Deterministic: no randomized error estimation.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "integration bounds must be finite, got [{a}, {b}]"
        )));
    }
    if a > b {
        return Err(Error::Domain(format!(
            "integration bounds must satisfy a <= b, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(0.0);
    }

    let rule = GaussLegendreRule::new(cfg.panel_order);
    let whole = rule.apply(&f, a, b);
    let tol = cfg.abs_tol.max(cfg.rel_tol * whole.abs());
    let width_floor = 4.0 * f64::EPSILON * (b - a);

    // (x0, x1, coarse estimate, error budget for this segment)
    let mut stack: Vec<(f64, f64, f64, f64)> = vec![(a, b, whole, tol)];
    let mut accepted = 0.0;
    let mut splits: u32 = 0;

    while let Some((x0, x1, coarse, tol_seg)) = stack.pop() {
        let xm = 0.5 * (x0 + x1);
        let left = rule.apply(&f, x0, xm);
        let right = rule.apply(&f, xm, x1);
        let refined = left + right;
        let err = (refined - coarse).abs();
        if err <= tol_seg || (x1 - x0) <= width_floor {
            accepted += refined;
            continue;
        }
        splits += 1;
        if splits > cfg.max_subdivisions {
            let mut estimate = accepted + refined;
            let mut error_bound = err;
            for (_, _, est, t) in &stack {
                estimate += est;
                error_bound += t;
            }
            return Err(Error::NonConvergence {
                estimate,
                error_bound,
                max_subdivisions: cfg.max_subdivisions,
            });
        }
        stack.push((xm, x1, right, 0.5 * tol_seg));
        stack.push((x0, xm, left, 0.5 * tol_seg));
    }
    Ok(accepted)
}

/// Integrates `f` over `[a, infinity)` assuming `|f(x)| <= C exp(-decay_rate x)`
/// eventually.
///
/// The envelope constant is estimated on a probe grid spanning thirty decay
/// lengths; the domain is truncated where the tail bound drops below half the
/// absolute tolerance and the rest is delegated to [`integrate`].
pub fn integrate_semiinfinite_expdecay<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    decay_rate: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    cfg.validate()?;
    if !a.is_finite() {
        return Err(Error::Domain(format!("lower bound must be finite, got {a}")));
    }
    if !(decay_rate > 0.0) || !decay_rate.is_finite() {
        return Err(Error::Domain(format!(
            "decay rate must be positive and finite, got {decay_rate}"
        )));
    }

    let ell = 1.0 / decay_rate;
    let probes = 60;
    let mut envelope = f64::MIN_POSITIVE;
    for j in 0..=probes {
        let x = a + 30.0 * ell * (j as f64) / (probes as f64);
        let v = f(x).abs();
        if v.is_finite() {
            envelope = envelope.max(v * (decay_rate * (x - a)).exp());
        }
    }
    // envelope * exp(-rate * span) / rate <= abs_tol / 2 fixes the cutoff
    let needed = (envelope / (decay_rate * 0.5 * cfg.abs_tol)).ln() / decay_rate;
    let span = needed.clamp(30.0 * ell, 745.0 * ell);
    integrate(f, a, a + span, cfg)
}
