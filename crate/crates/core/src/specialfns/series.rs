//! Truncated power series arithmetic.
//!
//! A `PowerSeries` holds the coefficients of `sum_k c_k r^k` through a fixed
//! truncation order. Every operation closes at that order, which is exactly
//! what is needed to take `r -> 0` limits of products of elementary radial
//! factors: the singular parts either cancel in the combined series or the
//! limit does not exist.

/// Coefficients of a truncated power series; index `k` holds the coefficient
/// of `r^k`, and the truncation order is `coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![0.0; order + 1],
        }
    }

    pub fn constant(value: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1.0, order)
    }

    /// Builds a series from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        PowerSeries { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "series arithmetic requires matching truncation orders"
        );
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| factor * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "series arithmetic requires matching truncation orders"
        );
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Division by a series with nonzero constant term.
    pub fn div(&self, other: &Self) -> Self {
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "series arithmetic requires matching truncation orders"
        );
        let b0 = other.coeffs[0];
        assert!(
            b0 != 0.0 && b0.is_finite(),
            "series division requires a unit constant term, got {b0}"
        );
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 0..k {
                acc -= out[j] * other.coeffs[k - j];
            }
            out[k] = acc / b0;
        }
        PowerSeries { coeffs: out }
    }

    /// Integer power; negative exponents invert first (unit constant term
    /// required).
    pub fn powi(&self, exponent: i32) -> Self {
        let order = self.truncation_order();
        if exponent == 0 {
            return Self::one(order);
        }
        let base = if exponent < 0 {
            Self::one(order).div(self)
        } else {
            self.clone()
        };
        let mut out = base.clone();
        for _ in 1..exponent.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Termwise derivative, truncated back to the same order (the top
    /// coefficient of the derivative is not determined and is set to zero).
    pub fn differentiate(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        for k in 1..n {
            out[k - 1] = k as f64 * self.coeffs[k];
        }
        PowerSeries { coeffs: out }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    // ---- elementary expansions used by the radial symbolic engine ----

    /// `sin(freq * r)`
    pub fn sin_kr(freq: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut term = freq;
        let mut k = 1usize;
        while k <= order {
            s.coeffs[k] = term;
            term *= -freq * freq / ((k + 1) as f64 * (k + 2) as f64);
            k += 2;
        }
        s
    }

    /// `cos(freq * r)`
    pub fn cos_kr(freq: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut term = 1.0;
        let mut k = 0usize;
        loop {
            s.coeffs[k] = term;
            if k + 2 > order {
                break;
            }
            term *= -freq * freq / ((k + 1) as f64 * (k + 2) as f64);
            k += 2;
        }
        s
    }

    /// `cosh r`
    pub fn cosh_r(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut term = 1.0;
        let mut k = 0usize;
        loop {
            s.coeffs[k] = term;
            if k + 2 > order {
                break;
            }
            term /= ((k + 1) * (k + 2)) as f64;
            k += 2;
        }
        s
    }

    /// `sinh(r) / r`, a unit series.
    pub fn sinh_r_over_r(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut term = 1.0;
        let mut k = 0usize;
        loop {
            s.coeffs[k] = term;
            if k + 2 > order {
                break;
            }
            term /= ((k + 2) * (k + 3)) as f64;
            k += 2;
        }
        s
    }

    /// `exp(c * r^2)`
    pub fn exp_cr2(c: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut term = 1.0;
        let mut k = 0usize;
        loop {
            s.coeffs[k] = term;
            if k + 2 > order {
                break;
            }
            term *= c / (k as f64 / 2.0 + 1.0);
            k += 2;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn elementary_expansions_match_closed_forms() {
        let order = 32;
        for &x in &[0.1, 0.5, 1.2] {
            let s = PowerSeries::sin_kr(2.0, order).evaluate(x);
            assert!((s - (2.0 * x).sin()).abs() < 1e-13);
            let c = PowerSeries::cos_kr(3.0, order).evaluate(x);
            assert!((c - (3.0 * x).cos()).abs() < 1e-13);
            let ch = PowerSeries::cosh_r(order).evaluate(x);
            assert!((ch - x.cosh()).abs() < 1e-13);
            let sh = PowerSeries::sinh_r_over_r(order).evaluate(x);
            assert!((sh - x.sinh() / x).abs() < 1e-13);
            let e = PowerSeries::exp_cr2(-0.25, order).evaluate(x);
            assert!((e - (-0.25 * x * x).exp()).abs() < 1e-13);
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        let order = 12;
        let a = PowerSeries::cosh_r(order);
        let b = PowerSeries::sinh_r_over_r(order);
        let q = a.mul(&b).div(&b);
        for k in 0..=order {
            assert!((q.coeff(k) - a.coeff(k)).abs() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn negative_power_of_unit_series() {
        // (sinh r / r)^(-1) evaluated near zero matches r / sinh r
        let order = 28;
        let inv = PowerSeries::sinh_r_over_r(order).powi(-1);
        for &x in &[0.05, 0.3, 0.8] {
            assert!((inv.evaluate(x) - x / x.sinh()).abs() < 1e-12);
        }
    }

    #[test]
    fn derivative_shifts_coefficients() {
        let s = PowerSeries::from_coeffs(vec![1.0, 2.0, 3.0, 4.0]);
        let d = s.differentiate();
        assert_eq!(d.coeffs(), &[2.0, 6.0, 12.0, 0.0]);
    }

    fn small_int_series(order: usize) -> impl Strategy<Value = PowerSeries> {
        proptest::collection::vec(-8i32..=8, order + 1)
            .prop_map(|v| PowerSeries::from_coeffs(v.into_iter().map(f64::from).collect()))
    }

    proptest! {
        // Small integer coefficients keep every intermediate product and sum
        // exactly representable, so equality below is exact, not approximate.
        #[test]
        fn product_commutes(a in small_int_series(8), b in small_int_series(8)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn product_associates(
            a in small_int_series(6),
            b in small_int_series(6),
            c in small_int_series(6),
        ) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
