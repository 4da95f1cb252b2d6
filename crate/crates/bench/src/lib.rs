//! Inputs shared by the criterion benches.

use longcycle::{Composition, IntegerPartition, Permutation};

/// Splits `n` into `m` parts whose sizes differ by at most one.
pub fn balanced(n: usize, m: usize) -> Composition {
    let parts = (0..m).map(|i| n / m + usize::from(i < n % m)).collect();
    Composition::new(parts).expect("n >= m >= 1")
}

/// A diagonal with a few short cycles, so fixed-diagonal sweeps see several NTAE counts.
pub fn mixed_diagonal(n: usize) -> Permutation {
    let mut parts = vec![1, 2];
    let rest = n.saturating_sub(3);
    if rest > 0 {
        parts.push(rest);
    }
    Permutation::representative(&IntegerPartition::from_parts(parts))
}

/// A `d` vector for `alpha` with `sum d = n (mod 2)`, so the count is nonzero.
pub fn admissible_d(alpha: &Composition) -> Vec<usize> {
    let mut d = vec![1; alpha.len()];
    if (alpha.len() + alpha.n()) % 2 == 1 {
        let j = alpha.parts().iter().position(|&a| a >= 2).expect("some block has two points");
        d[j] = 2;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(balanced(7, 3).parts(), &[3, 2, 2]);
        assert_eq!(mixed_diagonal(8).cycle_type(), IntegerPartition::from_parts(vec![5, 2, 1]));
        for m in 1..=4 {
            let alpha = balanced(9, m);
            let count = longcycle::closed_forms::separating_by_d(&alpha, &admissible_d(&alpha)).unwrap();
            assert!(count > 0.into());
        }
    }
}
