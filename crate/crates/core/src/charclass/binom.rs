/// Parity of the generalized binomial coefficient `C(n, k)`.
///
/// For `n >= 0` this is Lucas' criterion: `C(n, k)` is odd iff every binary
/// digit of `k` is dominated by the matching digit of `n`. For negative `n`,
/// `C(n, k) = (-1)^k C(k - n - 1, k)`, and the sign is invisible mod 2.
pub fn binom_parity(n: i64, k: u64) -> bool {
    if n >= 0 {
        let n = n as u64;
        k <= n && (n & k) == k
    } else {
        let upper = (k as i64) - n - 1;
        binom_parity(upper, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Exact generalized binomial via the falling-factorial product.
    fn exact(n: i64, k: u64) -> i128 {
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 0..k as i128 {
            num *= n as i128 - i;
            den *= i + 1;
        }
        num / den
    }

    #[test]
    fn named_values() {
        assert!(binom_parity(-1, 0));
        assert!(!binom_parity(2, 3));
        assert!(binom_parity(6, 2));
        assert!(!binom_parity(4, 2));
        // C(s-1, s) = 0 for s >= 1
        for s in 1..20 {
            assert!(!binom_parity(s - 1, s as u64));
        }
    }

    #[test]
    fn matches_factorial_oracle() {
        for n in -20i64..=24 {
            for k in 0u64..=14 {
                assert_eq!(binom_parity(n, k), exact(n, k).rem_euclid(2) == 1, "C({n},{k})");
            }
        }
    }
}
