//! Factorials, binomials, falling factorials, and Stirling numbers of the
//! first kind (plain and with a separated prefix `[m]`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::ExactInteger;

pub fn factorial(n: usize) -> ExactInteger {
    (1..=n).map(BigInt::from).product()
}

/// `binom(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> ExactInteger {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `(x)_m = x (x-1) ... (x-m+1)`; `(x)_0 = 1`.
pub fn falling_factorial(x: i64, m: usize) -> ExactInteger {
    (0..m as i64).map(|i| BigInt::from(x - i)).product()
}

/// Signless Stirling numbers of the first kind `C(n, k)`, via
/// `C(n,k) = C(n-1,k-1) + (n-1) C(n-1,k)`, `C(0,0) = 1`.
pub fn stirling_first(n: usize, k: usize) -> ExactInteger {
    if k > n {
        return BigInt::zero();
    }
    stirling_row(n).swap_remove(k)
}

/// The row `C(n, 0..=n)`.
pub fn stirling_row(n: usize) -> Vec<ExactInteger> {
    let mut row = vec![BigInt::one()];
    for size in 1..=n {
        let mut next = vec![BigInt::zero(); size + 1];
        for k in 1..=size {
            let mut v = row[k - 1].clone();
            if k < size {
                v += &row[k] * BigInt::from(size - 1);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// `C_m(n, k)`: permutations of `[n]` with `k` cycles and `1..=m` in distinct cycles.
///
/// Elements `m+1..=n` are inserted one at a time, each opening a new cycle or
/// going after any of the elements already placed, so for `n > m`
/// `C_m(n,k) = C_m(n-1,k-1) + (n-1) C_m(n-1,k)` with base `C_m(m,k) = [k = m]`.
pub fn separated_stirling(n: usize, m: usize, k: usize) -> ExactInteger {
    if m > n || k > n {
        return BigInt::zero();
    }
    separated_stirling_row(n, m).swap_remove(k)
}

pub fn separated_stirling_row(n: usize, m: usize) -> Vec<ExactInteger> {
    assert!(m <= n, "separated Stirling needs m <= n");
    let mut row = vec![BigInt::zero(); m + 1];
    row[m] = BigInt::one();
    for size in m + 1..=n {
        let mut next = vec![BigInt::zero(); size + 1];
        for k in 1..=size {
            let mut v = row.get(k - 1).cloned().unwrap_or_default();
            if k < row.len() {
                v += &row[k] * BigInt::from(size - 1);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::perm::all_permutations;

    /// Direct count over all permutations of `[n]`.
    fn brute_separated(n: usize, m: usize, k: usize) -> usize {
        all_permutations(n)
            .filter(|p| {
                let cycles = p.cycles_zero_based();
                cycles.len() == k
                    && cycles
                        .iter()
                        .all(|c| c.iter().filter(|&&x| x < m).count() <= 1)
            })
            .count()
    }

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(0, 1), int(0));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, 5), int(1));
        assert_eq!(falling_factorial(3, 1), int(3));
        assert_eq!(falling_factorial(4, 2), int(12));
        assert_eq!(falling_factorial(7, 0), int(1));
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling_first(4, 2), int(11));
        assert_eq!(stirling_first(5, 1), int(24));
        for n in 0..8 {
            assert_eq!(stirling_first(n, n), int(1));
        }
        assert_eq!(stirling_first(0, 0), int(1));
        assert_eq!(stirling_first(3, 0), int(0));
    }

    #[test]
    fn stirling_matches_enumeration() {
        for n in 0..=7 {
            for k in 0..=n {
                let brute = all_permutations(n)
                    .filter(|p| p.cycle_count() == k)
                    .count();
                assert_eq!(stirling_first(n, k), int(brute as u64), "C({n},{k})");
            }
        }
    }

    #[test]
    fn separated_matches_enumeration() {
        assert_eq!(separated_stirling(4, 2, 2), int(6));
        let total: BigInt = (0..=5).map(|k| separated_stirling(5, 2, k)).sum();
        assert_eq!(total, int(60));
        for n in 1..=7 {
            for m in 0..=n {
                for k in 0..=n {
                    assert_eq!(
                        separated_stirling(n, m, k),
                        int(brute_separated(n, m, k) as u64),
                        "C_{m}({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn separated_base_case() {
        for m in 0..6 {
            for k in 0..=m {
                let expected = if k == m { 1 } else { 0 };
                assert_eq!(separated_stirling(m, m, k), int(expected));
            }
        }
    }

    #[test]
    fn row_sums() {
        for n in 0..=10 {
            let total: BigInt = stirling_row(n).into_iter().sum();
            assert_eq!(total, factorial(n));
            for m in 0..=n {
                let total: BigInt = separated_stirling_row(n, m).into_iter().sum();
                assert_eq!(total, factorial(n) / factorial(m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn m_one_imposes_nothing() {
        for n in 1..=9 {
            for k in 0..=n {
                assert_eq!(separated_stirling(n, 1, k), stirling_first(n, k));
            }
        }
    }
}
