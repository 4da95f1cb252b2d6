//! Closed-form counts for pairs of long cycles, in exact arithmetic.
//!
//! A product of two `n`-cycles is even, so any count whose target has the wrong
//! parity is zero. The guarded functions return that zero; the `*_raw`
//! variants evaluate the bare expression, which at infeasible parameters is
//! generally a nonzero (often fractional) number.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::exact::{self, ratio, to_rational, ExactInteger, ExactRational};
use crate::numbers::{binomial, factorial, falling_factorial, separated_stirling, stirling_row};
use crate::partition::IntegerPartition;

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(domain(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// `2 C(n+1, k) / (n (n+1))`, unguarded.
pub fn zagier_stanley_raw(n: usize, k: usize) -> ExactRational {
    let c = stirling_row(n + 1).swap_remove(k);
    ratio(c * 2, BigInt::from(n * (n + 1)))
}

/// Number of `n`-cycles `s` such that `(1 2 ... n) s` has `k` cycles.
pub fn zagier_stanley(n: usize, k: usize) -> Result<ExactInteger> {
    check_k(n, k)?;
    if (n - k) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    exact::into_integer(&zagier_stanley_raw(n, k), "zagier_stanley")
}

/// Expected number of `k`-cycles in the product of two uniform random `n`-cycles,
/// `(-1)^{k+1} / (k binom(n-1, k)) + 1/k`, for `1 <= k <= n-1`.
pub fn hultman_expected(n: usize, k: usize) -> Result<ExactRational> {
    let b = if n == 0 { BigInt::zero() } else { binomial(n as u64 - 1, k as u64) };
    if k == 0 || b.is_zero() {
        return Err(domain(format!(
            "binom(n-1, k) vanishes for n = {n}, k = {k}; need 1 <= k <= n-1"
        )));
    }
    let sign = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    Ok(ratio(sign, b * k) + ratio(1, k))
}

/// `(2 (n-1)! / (n+1)) (1 - (-1)^k / binom(n, k))`, unguarded.
pub fn boccara_raw(n: usize, k: usize) -> ExactRational {
    let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let bracket = BigRational::one() - ratio(sign, binomial(n as u64, k as u64));
    ratio(factorial(n - 1) * 2, n + 1) * bracket
}

/// Factorizations of a fixed permutation of type `k^1 (n-k)^1` into two `n`-cycles.
/// The target is even exactly when `n` is even.
pub fn boccara(n: usize, k: usize) -> Result<ExactInteger> {
    if k == 0 || k >= n {
        return Err(domain(format!("need 1 <= k < n, got n = {n}, k = {k}")));
    }
    if n % 2 == 1 {
        return Err(domain(format!(
            "target of type {k}+{} on [{n}] is odd",
            n - k
        )));
    }
    exact::into_integer(&boccara_raw(n, k), "boccara")
}

/// The double sum over `l` and `(j_2, ..., j_k)`, unguarded:
/// `2 (n-1)! sum (-1)^l l! / (lambda_1 + l + 1)_{l+1} prod binom(lambda_t, j_t)`,
/// where `0 <= j_t < lambda_t` and `j_2 + ... + j_k = l`.
pub fn even_factorization_raw(lambda: &IntegerPartition) -> Result<ExactRational> {
    let parts = lambda.parts();
    let (&first, rest) = parts
        .split_first()
        .ok_or_else(|| domain("empty partition"))?;
    // coeffs[l] = sum over (j_t) with sum l of prod binom(lambda_t, j_t)
    let mut coeffs = vec![BigInt::one()];
    for &part in rest {
        let factor: Vec<BigInt> = (0..part).map(|j| binomial(part as u64, j as u64)).collect();
        let mut next = vec![BigInt::zero(); coeffs.len() + factor.len() - 1];
        for (a, ca) in coeffs.iter().enumerate() {
            for (b, fb) in factor.iter().enumerate() {
                next[a + b] += ca * fb;
            }
        }
        coeffs = next;
    }
    let mut sum = BigRational::zero();
    for (l, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = ratio(
            c * factorial(l),
            falling_factorial((first + l + 1) as i64, l + 1),
        );
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum * to_rational(&(factorial(lambda.n() - 1) * 2)))
}

/// Factorizations of a fixed even permutation of type `lambda` into an ordered
/// pair of `n`-cycles.
pub fn even_factorization_count(lambda: &IntegerPartition) -> Result<ExactInteger> {
    if lambda.is_empty() {
        return Err(domain("empty partition"));
    }
    if !lambda.is_even() {
        return Err(domain(format!("target of type {lambda} is odd")));
    }
    exact::into_integer(&even_factorization_raw(lambda)?, "even_factorization_count")
}

/// Ordered pairs of `n`-cycles whose product has type `lambda`: `z_lambda`
/// targets, each with [`even_factorization_count`] factorizations.
pub fn pairs_by_type(lambda: &IntegerPartition) -> Result<ExactInteger> {
    if lambda.is_empty() {
        return Err(domain("empty partition"));
    }
    if !lambda.is_even() {
        return Ok(BigInt::zero());
    }
    Ok(lambda.z() * even_factorization_count(lambda)?)
}

/// Ordered pairs of `n`-cycles whose product is `alpha`-separated:
/// `(n-1)! / (n+1-k) * prod alpha_t!`.
pub fn separating_total(alpha: &Composition) -> Result<ExactInteger> {
    let n = alpha.n();
    let k = alpha.len();
    let num: BigInt = factorial(n - 1) * alpha.parts().iter().map(|&a| factorial(a)).product::<BigInt>();
    exact::div_exact(&num, &BigInt::from(n + 1 - k))
}

fn check_d(alpha: &Composition, d: &[usize]) -> Result<()> {
    if d.len() != alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: d.len(),
        });
    }
    if d.contains(&0) {
        return Err(domain(format!("cycle counts must be positive, got {d:?}")));
    }
    Ok(())
}

/// The alternating tuple sum for `p_{alpha,d}`, unguarded.
///
/// With `Y(a) = (n-1)! C(a_1+1, d_1) prod_{i>1} C(a_i, d_i)` and
/// `a^(j) = (a_1+1, ..., a_j-1, ...)`, the sum over tuples `(j_1, ..., j_l)`
/// factors through its first step:
///
/// `P(a) = (Y(a) - sum_{j>1} binom(a_j, 2) P(a^(j))) / binom(a_1+1, 2)`,
///
/// and `P(alpha)` is the whole sum. `P` is memoized on the composition reached.
/// A child with `a_j = 1` has weight `binom(1, 2) = 0` and is skipped, which is
/// where every branch ends.
pub fn separating_by_d_raw(alpha: &Composition, d: &[usize]) -> Result<ExactRational> {
    check_d(alpha, d)?;
    let n = alpha.n();
    let rows: Vec<Vec<BigInt>> = (0..=n + 1).map(stirling_row).collect();
    let stirling = |a: usize, k: usize| -> BigInt { rows[a].get(k).cloned().unwrap_or_default() };
    let base = factorial(n - 1);
    let y = |a: &[usize]| -> BigInt {
        let mut v = &base * stirling(a[0] + 1, d[0]);
        for (&ai, &di) in a.iter().zip(d).skip(1) {
            if v.is_zero() {
                break;
            }
            v *= stirling(ai, di);
        }
        v
    };

    fn walk(
        a: &mut Vec<usize>,
        memo: &mut HashMap<Vec<usize>, BigRational>,
        y: &dyn Fn(&[usize]) -> BigInt,
    ) -> BigRational {
        if let Some(v) = memo.get(a.as_slice()) {
            return v.clone();
        }
        let mut acc = to_rational(&y(a));
        for j in 1..a.len() {
            if a[j] < 2 {
                continue;
            }
            let weight = binomial(a[j] as u64, 2);
            a[0] += 1;
            a[j] -= 1;
            let child = walk(a, memo, y);
            a[0] -= 1;
            a[j] += 1;
            acc -= child * to_rational(&weight);
        }
        let value = acc / to_rational(&binomial(a[0] as u64 + 1, 2));
        memo.insert(a.clone(), value.clone());
        value
    }

    let mut memo = HashMap::new();
    Ok(walk(&mut alpha.parts().to_vec(), &mut memo, &y))
}

/// Ordered pairs of `n`-cycles whose product is `alpha`-separated with block `i`
/// split into exactly `d_i` cycles. Zero unless `sum d_i = n (mod 2)`.
pub fn separating_by_d(alpha: &Composition, d: &[usize]) -> Result<ExactInteger> {
    check_d(alpha, d)?;
    let total: usize = d.iter().sum();
    if (total + alpha.n()) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    exact::into_integer(&separating_by_d_raw(alpha, d)?, "separating_by_d")
}

/// `2 (n-1)! C_m(n+1, k) / ((n+m)(n+1-m))`, unguarded.
pub fn chen_separated_raw(n: usize, m: usize, k: usize) -> ExactRational {
    ratio(
        factorial(n - 1) * 2 * separated_stirling(n + 1, m, k),
        BigInt::from((n + m) * (n + 1 - m)),
    )
}

/// Ordered pairs of `n`-cycles whose product has `k` cycles with `1..=m` in
/// distinct cycles.
pub fn chen_separated_count(n: usize, m: usize, k: usize) -> Result<ExactInteger> {
    check_k(n, k)?;
    if m == 0 || m > n {
        return Err(domain(format!("need 1 <= m <= n, got n = {n}, m = {m}")));
    }
    if (n - k) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    exact::into_integer(&chen_separated_raw(n, m, k), "chen_separated_count")
}

/// Probability that `1..=m` lie in distinct cycles of the product of two
/// uniform random `n`-cycles.
pub fn separation_probability(n: usize, m: usize) -> Result<ExactRational> {
    if m < 2 || m > n {
        return Err(domain(format!("need 2 <= m <= n, got n = {n}, m = {m}")));
    }
    let base = ratio(1, factorial(m));
    if (n - m) % 2 == 1 {
        return Ok(base);
    }
    let extra = ratio(
        2,
        factorial(m - 2) * BigInt::from((n + 1 - m) * (n + m)),
    );
    Ok(base + extra)
}

/// A single closed-form evaluation request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CountQuery {
    /// Zagier-Stanley: `n`-cycles `s` with `(1 .. n) s` having `k` cycles.
    ByCycleCount { n: usize, k: usize },
    /// Ordered pairs of `n`-cycles with product of the given type.
    ByCycleType { lambda: IntegerPartition },
    SeparatedByAlphaD { alpha: Composition, d: Vec<usize> },
    SeparatedTotal { alpha: Composition },
    /// Factorizations of a fixed permutation of the given type.
    FactorizationOfType { lambda: IntegerPartition },
    Boccara { n: usize, k: usize },
    ExpectedKCycles { n: usize, k: usize },
    SeparatedByCycleCount { n: usize, m: usize, k: usize },
    SeparationProbability { n: usize, m: usize },
}

/// Result of a [`CountQuery`] as JSON: `{"query": {...}, "value": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryResult {
    pub query: CountQuery,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub value: ExactRational,
}

impl CountQuery {
    pub fn evaluate(&self) -> Result<ExactRational> {
        use CountQuery::*;
        let int = |v: ExactInteger| to_rational(&v);
        Ok(match self {
            ByCycleCount { n, k } => int(zagier_stanley(*n, *k)?),
            ByCycleType { lambda } => int(pairs_by_type(lambda)?),
            SeparatedByAlphaD { alpha, d } => int(separating_by_d(alpha, d)?),
            SeparatedTotal { alpha } => int(separating_total(alpha)?),
            FactorizationOfType { lambda } => int(even_factorization_count(lambda)?),
            Boccara { n, k } => int(boccara(*n, *k)?),
            ExpectedKCycles { n, k } => hultman_expected(*n, *k)?,
            SeparatedByCycleCount { n, m, k } => int(chen_separated_count(*n, *m, *k)?),
            SeparationProbability { n, m } => separation_probability(*n, *m)?,
        })
    }

    pub fn run(self) -> Result<QueryResult> {
        let value = self.evaluate()?;
        Ok(QueryResult { query: self, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn lp(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn zagier_stanley_small() {
        assert_eq!(zagier_stanley(3, 1).unwrap(), int(1));
        assert_eq!(zagier_stanley(3, 3).unwrap(), int(1));
        assert_eq!(zagier_stanley(3, 2).unwrap(), int(0));
        assert_eq!(zagier_stanley(4, 2).unwrap(), int(5));
        assert_eq!(zagier_stanley(1, 1).unwrap(), int(1));
        assert_eq!(zagier_stanley_raw(3, 2), ratio(11, 6));
        assert!(zagier_stanley(3, 0).is_err());
        assert!(zagier_stanley(3, 4).is_err());
    }

    #[test]
    fn hultman_small() {
        assert_eq!(hultman_expected(3, 1).unwrap(), ratio(3, 2));
        assert_eq!(hultman_expected(4, 2).unwrap(), ratio(1, 3));
        assert!(hultman_expected(4, 4).is_err());
        assert!(hultman_expected(4, 0).is_err());
        // second term dominates for large n
        let big = hultman_expected(60, 3).unwrap();
        assert!(big > ratio(1, 3) && big - ratio(1, 3) < ratio(1, 10_000));
    }

    #[test]
    fn boccara_small() {
        assert_eq!(boccara(4, 2).unwrap(), int(2));
        assert_eq!(boccara(4, 1).unwrap(), int(3));
        assert!(boccara(5, 2).is_err());
        assert!(boccara(4, 4).is_err());
        for n in (2..=14).step_by(2) {
            for k in 1..n {
                assert_eq!(boccara(n, k).unwrap(), boccara(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn even_factorizations_small() {
        assert_eq!(even_factorization_count(&lp("2+2")).unwrap(), int(2));
        assert_eq!(even_factorization_count(&lp("3+1")).unwrap(), int(3));
        assert_eq!(even_factorization_count(&lp("1+1+1+1")).unwrap(), int(6));
        assert!(even_factorization_count(&lp("2+1+1")).is_err());
    }

    #[test]
    fn even_factorizations_reduce_to_boccara() {
        for n in (2..=12).step_by(2) {
            for k in 1..n {
                let lambda = IntegerPartition::from_parts(vec![k, n - k]);
                assert_eq!(
                    even_factorization_count(&lambda).unwrap(),
                    boccara(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn pairs_by_type_small() {
        assert_eq!(pairs_by_type(&lp("2+2")).unwrap(), int(6));
        assert_eq!(pairs_by_type(&lp("1+1+1+1")).unwrap(), int(6));
        assert_eq!(pairs_by_type(&lp("2+1+1")).unwrap(), int(0));
    }

    #[test]
    fn separating_totals() {
        assert_eq!(separating_total(&comp(&[2, 2])).unwrap(), int(8));
        assert_eq!(separating_total(&comp(&[4])).unwrap(), int(36));
        assert_eq!(separating_total(&comp(&[1, 1, 1, 1])).unwrap(), int(6));
        for n in 2..=10 {
            for k in 1..n {
                let a = comp(&[k, n - k]);
                let two_block = factorial(k) * factorial(n - k) * factorial(n - 2);
                assert_eq!(separating_total(&a).unwrap(), two_block);
            }
        }
    }

    #[test]
    fn separating_by_d_small() {
        let a = comp(&[2, 2]);
        assert_eq!(separating_by_d(&a, &[1, 1]).unwrap(), int(2));
        assert_eq!(separating_by_d(&a, &[2, 2]).unwrap(), int(6));
        assert_eq!(separating_by_d(&a, &[3, 1]).unwrap(), int(0));
        assert_eq!(separating_by_d(&a, &[1, 2]).unwrap(), int(0));
        assert_eq!(separating_by_d_raw(&a, &[1, 2]).unwrap(), ratio(4, 1));
        assert!(matches!(
            separating_by_d(&a, &[1]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
        assert!(separating_by_d(&a, &[0, 2]).is_err());
    }

    #[test]
    fn chen_and_probability() {
        assert_eq!(chen_separated_count(4, 2, 2).unwrap(), int(16));
        assert_eq!(chen_separated_count(4, 2, 4).unwrap(), int(6));
        assert_eq!(chen_separated_count(4, 2, 3).unwrap(), int(0));
        assert_eq!(separation_probability(4, 2).unwrap(), ratio(11, 18));
        assert_eq!(separation_probability(5, 2).unwrap(), ratio(1, 2));
        assert!(separation_probability(4, 1).is_err());
        assert!(separation_probability(4, 5).is_err());
    }

    #[test]
    fn probability_at_m_equal_n_is_identity_share() {
        for n in 2..=9 {
            let expected = ratio(factorial(n - 1), factorial(n - 1) * factorial(n - 1));
            assert_eq!(separation_probability(n, n).unwrap(), expected);
        }
    }

    #[test]
    fn query_json() {
        let q = CountQuery::SeparatedByAlphaD {
            alpha: comp(&[2, 2]),
            d: vec![1, 1],
        };
        let r = q.run().unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"query":{"kind":"separated-by-alpha-d","alpha":"(2,2)","d":[1,1]},"value":"2"}"#
        );
        assert_eq!(serde_json::from_str::<QueryResult>(&json).unwrap(), r);
        let p = CountQuery::SeparationProbability { n: 4, m: 2 }.run().unwrap();
        assert_eq!(serde_json::to_value(&p).unwrap()["value"], "11/18");
    }
}
