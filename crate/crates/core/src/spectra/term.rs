//! Symbolic closure class of the radial operator `(-1/sinh r) d/dr`.
//!
//! Terms have the shape `c r^p cosh^a(r) sinh^q(r) K(r)` with `K` one of
//! `sin(s r)`, `cos(s r)`, `exp(-r^2/(4t))`. Differentiation maps the class
//! into itself (sin/cos swap, the Gaussian reproduces itself times `r`), and
//! multiplying by `1/sinh r` just lowers `q`, so iterating the operator stays
//! exact with a polynomially growing number of terms.

use crate::error::{Error, Result};
use crate::specialfns::PowerSeries;

/// Kernel factor of a [`Term`]. `Sin`/`Cos` carry the frequency `s`, `Gauss`
/// the time parameter `t` of `exp(-r^2/(4t))`; the parameter itself lives on
/// the enclosing [`TermSum`] since all terms of a sum share it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kernel {
    Sin,
    Cos,
    Gauss,
}

/// One monomial `coeff * r^r_power * cosh^cosh_power * sinh^sinh_power * K`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub r_power: i32,
    pub cosh_power: u32,
    pub sinh_power: i32,
    pub kernel: Kernel,
}

impl Term {
    fn key(&self) -> (Kernel, i32, u32, i32) {
        (self.kernel, self.r_power, self.cosh_power, self.sinh_power)
    }
}

/// A finite sum of [`Term`]s sharing one kernel family and parameter, kept in
/// canonical form: sorted by exponent key, like terms merged, zero terms
/// dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct TermSum {
    terms: Vec<Term>,
    kernel_param: f64,
    gauss: bool,
}

impl TermSum {
    /// `sin(freq * r) / r`, the seed of the hyperbolic spectral functions.
    pub fn sin_over_r(freq: f64) -> Self {
        TermSum {
            terms: vec![Term {
                coeff: 1.0,
                r_power: -1,
                cosh_power: 0,
                sinh_power: 0,
                kernel: Kernel::Sin,
            }],
            kernel_param: freq,
            gauss: false,
        }
    }

    /// `exp(-r^2 / (4 time))`, the seed of the hyperbolic heat kernels.
    pub fn gaussian(time: f64) -> Self {
        assert!(time > 0.0, "Gaussian kernel needs a positive time parameter");
        TermSum {
            terms: vec![Term {
                coeff: 1.0,
                r_power: 0,
                cosh_power: 0,
                sinh_power: 0,
                kernel: Kernel::Gauss,
            }],
            kernel_param: time,
            gauss: true,
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn kernel_param(&self) -> f64 {
        self.kernel_param
    }

    /// Sum of two term sums over the same kernel family and parameter.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.gauss, other.gauss, "kernel families must match");
        assert!(
            self.kernel_param == other.kernel_param,
            "kernel parameters must match"
        );
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        TermSum {
            terms: canonicalize(terms),
            kernel_param: self.kernel_param,
            gauss: self.gauss,
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: factor * t.coeff,
                ..*t
            })
            .collect();
        TermSum {
            terms: canonicalize(terms),
            kernel_param: self.kernel_param,
            gauss: self.gauss,
        }
    }

    /// Applies `(-1/sinh r) d/dr` the given number of times, exactly.
    pub fn apply_hyperbolic_operator(&self, times: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..times {
            out = out.apply_once();
        }
        out
    }

    fn apply_once(&self) -> Self {
        let mut produced = Vec::with_capacity(4 * self.terms.len());
        for t in &self.terms {
            // product rule for d/dr across the four factors
            if t.r_power != 0 {
                produced.push(Term {
                    coeff: t.coeff * t.r_power as f64,
                    r_power: t.r_power - 1,
                    ..*t
                });
            }
            if t.cosh_power > 0 {
                produced.push(Term {
                    coeff: t.coeff * t.cosh_power as f64,
                    cosh_power: t.cosh_power - 1,
                    sinh_power: t.sinh_power + 1,
                    ..*t
                });
            }
            if t.sinh_power != 0 {
                produced.push(Term {
                    coeff: t.coeff * t.sinh_power as f64,
                    cosh_power: t.cosh_power + 1,
                    sinh_power: t.sinh_power - 1,
                    ..*t
                });
            }
            match t.kernel {
                Kernel::Sin => produced.push(Term {
                    coeff: t.coeff * self.kernel_param,
                    kernel: Kernel::Cos,
                    ..*t
                }),
                Kernel::Cos => produced.push(Term {
                    coeff: -t.coeff * self.kernel_param,
                    kernel: Kernel::Sin,
                    ..*t
                }),
                Kernel::Gauss => produced.push(Term {
                    coeff: -t.coeff / (2.0 * self.kernel_param),
                    r_power: t.r_power + 1,
                    ..*t
                }),
            }
        }
        // multiply by -1/sinh r
        for t in &mut produced {
            t.coeff = -t.coeff;
            t.sinh_power -= 1;
        }
        TermSum {
            terms: canonicalize(produced),
            kernel_param: self.kernel_param,
            gauss: self.gauss,
        }
    }

    /// Evaluates the sum at `r > 0`.
    pub fn evaluate(&self, r: f64) -> f64 {
        assert!(r > 0.0, "term sums are evaluated at positive radius");
        let cosh = r.cosh();
        let sinh = r.sinh();
        let mut acc = 0.0;
        for t in &self.terms {
            let kernel = match t.kernel {
                Kernel::Sin => (self.kernel_param * r).sin(),
                Kernel::Cos => (self.kernel_param * r).cos(),
                Kernel::Gauss => (-r * r / (4.0 * self.kernel_param)).exp(),
            };
            acc += t.coeff
                * r.powi(t.r_power)
                * cosh.powi(t.cosh_power as i32)
                * sinh.powi(t.sinh_power)
                * kernel;
        }
        acc
    }

    /// The `r -> 0` limit of the sum, via truncated power series.
    ///
    /// Each term expands into `r^shift * (unit series)`; summing the aligned
    /// Laurent coefficients must cancel every negative power (relative
    /// residual below 1e-7 against the largest contribution), else the limit
    /// is reported as singular. The constant coefficient is the limit.
    pub fn limit_at_zero(&self, order: usize) -> Result<f64> {
        let mut parts = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            parts.push(self.laurent_expansion(t, order));
        }
        let min_shift = parts.iter().map(|&(s, _)| s).min().unwrap_or(0);
        if min_shift < -(order as i64) {
            return Err(Error::Domain(format!(
                "series order {order} too small for pole depth {}",
                -min_shift
            )));
        }
        for degree in min_shift..0 {
            let mut sum = 0.0;
            let mut scale = 0.0_f64;
            for (shift, series) in &parts {
                let idx = degree - shift;
                if idx >= 0 {
                    let c = series.coeff(idx as usize);
                    sum += c;
                    scale = scale.max(c.abs());
                }
            }
            if scale > 0.0 && sum.abs() > 1e-7 * scale {
                return Err(Error::SingularLimit(format!(
                    "coefficient of r^{degree} is {sum:e} against term scale {scale:e}"
                )));
            }
        }
        let mut limit = 0.0;
        for (shift, series) in &parts {
            if *shift <= 0 {
                limit += series.coeff((-shift) as usize);
            }
        }
        Ok(limit)
    }

    fn laurent_expansion(&self, term: &Term, order: usize) -> (i64, PowerSeries) {
        let mut shift = term.r_power as i64;
        let mut series = PowerSeries::constant(term.coeff, order);
        if term.cosh_power > 0 {
            series = series.mul(&PowerSeries::cosh_r(order).powi(term.cosh_power as i32));
        }
        if term.sinh_power != 0 {
            shift += term.sinh_power as i64;
            series = series.mul(&PowerSeries::sinh_r_over_r(order).powi(term.sinh_power));
        }
        let kernel = match term.kernel {
            Kernel::Sin => PowerSeries::sin_kr(self.kernel_param, order),
            Kernel::Cos => PowerSeries::cos_kr(self.kernel_param, order),
            Kernel::Gauss => PowerSeries::exp_cr2(-1.0 / (4.0 * self.kernel_param), order),
        };
        (shift, series.mul(&kernel))
    }
}

fn canonicalize(mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by_key(Term::key);
    let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match merged.last_mut() {
            Some(last) if last.key() == t.key() => last.coeff += t.coeff,
            _ => merged.push(t),
        }
    }
    merged.retain(|t| t.coeff != 0.0);
    merged
}
