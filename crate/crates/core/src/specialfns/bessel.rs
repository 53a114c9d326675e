//! Bessel functions of the first kind for half-integer orders
//! (0, 1/2, 1, 3/2, ...), the orders that appear in radial spectral kernels.

use crate::error::{Error, Result};

/// `J_order(z)` for half-integer `order >= 0` and `z >= 0`.
///
/// Integer orders use the ascending series for small `z` and Miller's
/// normalized downward recurrence otherwise; half-odd orders reduce to
/// spherical Bessel functions, which have closed trigonometric forms.
/// Relative accuracy is about 1e-12 away from zeros of `J` on `z in [0, 100]`.
pub fn bessel_j(order: f64, z: f64) -> Result<f64> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_j requires z >= 0, got {z}"
        )));
    }
    let doubled = 2.0 * order;
    let rounded = doubled.round();
    if !(order >= 0.0) || (doubled - rounded).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "bessel_j order must be a nonnegative half-integer, got {order}"
        )));
    }
    let two_n = rounded as i64;
    if two_n % 2 == 0 {
        Ok(bessel_j_integer((two_n / 2) as usize, z))
    } else {
        // order = n + 1/2:  J_{n+1/2}(z) = sqrt(2z/pi) j_n(z)
        let n = ((two_n - 1) / 2) as usize;
        if z == 0.0 {
            return Ok(0.0);
        }
        Ok((2.0 * z / std::f64::consts::PI).sqrt() * spherical_j(n, z))
    }
}

fn bessel_j_integer(n: usize, z: f64) -> f64 {
    if z == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if z <= 12.0 {
        bessel_series(n, z)
    } else {
        bessel_miller(n, z)
    }
}

/// Ascending series; alternating terms stay benign for z <= 12.
fn bessel_series(n: usize, z: f64) -> f64 {
    let half = 0.5 * z;
    let mut term = 1.0;
    for k in 1..=n {
        term *= half / k as f64;
    }
    let mut sum = term;
    let q = half * half;
    for k in 1..200 {
        term *= -q / (k as f64 * (n + k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Miller's downward recurrence normalized by `J_0 + 2 J_2 + 2 J_4 + ... = 1`.
fn bessel_miller(n: usize, z: f64) -> f64 {
    let mut start = (z + 1.5 * z.sqrt() + 34.0).ceil() as usize;
    start = start.max(n + 2);
    if start % 2 == 1 {
        start += 1;
    }
    let mut j_above = 0.0_f64;
    let mut j_here = 1e-300_f64;
    let mut norm = 0.0;
    let mut wanted = 0.0;
    let mut k = start;
    loop {
        if k == n {
            wanted = j_here;
        }
        if k % 2 == 0 {
            norm += if k == 0 { j_here } else { 2.0 * j_here };
        }
        if k == 0 {
            break;
        }
        let j_below = (2.0 * k as f64 / z) * j_here - j_above;
        j_above = j_here;
        j_here = j_below;
        if j_here.abs() > 1e250 {
            j_here *= 1e-250;
            j_above *= 1e-250;
            norm *= 1e-250;
            wanted *= 1e-250;
        }
        k -= 1;
    }
    wanted / norm
}

/// Spherical Bessel function `j_n(z)`, `z > 0`.
fn spherical_j(n: usize, z: f64) -> f64 {
    let j0 = z.sin() / z;
    if n == 0 {
        return j0;
    }
    if z <= 1e-2 {
        // closed forms lose digits to cancellation here
        return spherical_series(n, z);
    }
    let j1 = z.sin() / (z * z) - z.cos() / z;
    if n == 1 {
        return j1;
    }
    if (n as f64) < z {
        // upward recurrence is stable when the order stays below the argument
        let mut jm = j0;
        let mut jc = j1;
        for k in 1..n {
            let jn = ((2 * k + 1) as f64 / z) * jc - jm;
            jm = jc;
            jc = jn;
        }
        jc
    } else {
        // downward recurrence, rescaled against the exact j0 or j1
        let start = n + 16 + (z.ceil() as usize);
        let mut above = 0.0_f64;
        let mut here = 1e-300_f64;
        let mut wanted = 0.0;
        let mut f1 = 0.0;
        let mut k = start;
        while k > 0 {
            if k == n {
                wanted = here;
            }
            if k == 1 {
                f1 = here;
            }
            let below = ((2 * k + 1) as f64 / z) * here - above;
            above = here;
            here = below;
            if here.abs() > 1e250 {
                here *= 1e-250;
                above *= 1e-250;
                wanted *= 1e-250;
                f1 *= 1e-250;
            }
            k -= 1;
        }
        let f0 = here;
        // normalize with whichever reference value is better conditioned
        if f0.abs() >= f1.abs() {
            wanted * (j0 / f0)
        } else {
            wanted * (j1 / f1)
        }
    }
}

/// Leading terms of `j_n(z) = z^n / (2n+1)!! (1 - (z^2/2)/(1!(2n+3)) + ...)`.
fn spherical_series(n: usize, z: f64) -> f64 {
    let mut prefactor = 1.0;
    for k in 0..n {
        prefactor *= z / (2 * k + 3) as f64;
    }
    let x = 0.5 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..30 {
        term *= -x / (k as f64 * (2 * (n + k) + 1) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    prefactor * sum
}
