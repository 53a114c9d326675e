//! Exact binomial coefficients in 128-bit arithmetic.

/// `C(n, k)` computed exactly; `k > n` yields 0.
///
/// The multiplicative form `C(n, k) = prod_i (n-k+i)/i` stays integral after
/// every step (each partial product is itself a binomial coefficient), so the
/// only way to overflow the 128-bit accumulator is a result within a factor
/// `n` of `u128::MAX`. Sphere eigenspace multiplicities up to dimension 24 and
/// level 60 stay far below that.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .expect("binomial coefficient exceeds 128 bits")
            / i as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn small_values() {
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 7), 0);
    }

    #[test]
    fn matches_pascal_triangle_oracle() {
        // independent construction: full Pascal triangle up to n = 90
        let n_max = 90usize;
        let mut row = vec![1u128];
        for n in 1..=n_max {
            let mut next = vec![1u128; n + 1];
            for k in 1..n {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), v, "C({n},{k})");
            }
        }
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn wide_values_exceed_sixty_four_bits() {
        // level-60 eigenspace count in dimension 24 needs more than u64
        let v = binomial(84, 24);
        assert!(v > u64::MAX as u128, "got {v}");
        assert_eq!(binomial(200, 3), 1_313_400);
    }
}
