//! Integer partitions, sequences of partitions over a composition, and the
//! merge/split and decrement operations the recurrences are built from.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::exact::{ratio, ExactInteger, ExactRational};
use crate::numbers::{binomial, factorial};

/// A partition of `n`, stored as non-increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    /// Builds `1^{m_1} 2^{m_2} ...` from `(part, multiplicity)` pairs.
    pub fn from_multiplicities(mult: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut parts = Vec::new();
        for (part, m) in mult {
            parts.extend(std::iter::repeat_n(part, m));
        }
        IntegerPartition::from_parts(parts)
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(lambda)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_i(lambda)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// The multiplicity view `i -> m_i`, nonzero entries only.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Parity of `n - l(lambda)`: the sign class of permutations of this type.
    pub fn is_even(&self) -> bool {
        (self.n() - self.len()).is_multiple_of(2)
    }

    /// Number of permutations with this cycle type, `n! / prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> ExactInteger {
        let mut den = BigInt::one();
        for (i, m) in self.multiplicities() {
            den *= BigInt::from(i).pow(m as u32) * factorial(m);
        }
        factorial(self.n()) / den
    }

    /// `lambda^{down(j+1)}`: one part equal to `j_plus_1` replaced by `j_plus_1 - 1`.
    pub fn down_arrow(&self, j_plus_1: usize) -> Result<IntegerPartition> {
        if j_plus_1 < 2 || self.multiplicity(j_plus_1) == 0 {
            return Err(Error::NoSuchPart {
                partition: self.to_string(),
                part: j_plus_1,
            });
        }
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p == j_plus_1).unwrap();
        parts[pos] -= 1;
        Ok(IntegerPartition::from_parts(parts))
    }

    /// Exponent notation, `1^2 2^1 3^1`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| format!("{i}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IntegerPartition {
    /// `3+2+1+1`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s = self
            .parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("+");
        write!(f, "{s}")
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    /// Accepts `3+2+1+1`, `1^2 2^1 3^1`, a single part `4`, and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(IntegerPartition::empty());
        }
        let bad = |t: &str| Error::InvalidPartition(format!("bad token {t:?} in {s:?}"));
        if s.contains('^') {
            let mut mult = Vec::new();
            for tok in s.split_whitespace() {
                let (i, m) = tok.split_once('^').ok_or_else(|| bad(tok))?;
                let i: usize = i.parse().map_err(|_| bad(tok))?;
                let m: usize = m.parse().map_err(|_| bad(tok))?;
                if i == 0 {
                    return Err(bad(tok));
                }
                mult.push((i, m));
            }
            Ok(IntegerPartition::from_multiplicities(mult))
        } else {
            let parts = s
                .split(['+', ','])
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(bad(t)),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(IntegerPartition::from_parts(parts))
        }
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order
/// (`n`, `n-1+1`, ..., `1+...+1`). `partitions(0)` yields the empty partition.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = IntegerPartition;

    fn next(&mut self) -> Option<IntegerPartition> {
        let cur = self.current.take()?;
        // successor: strip trailing 1s, decrement the last part > 1, refill greedily
        let mut next = cur.clone();
        let mut ones = 0;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(last) = next.pop() {
            let part = last - 1;
            let mut rest = ones + 1;
            next.push(part);
            while rest > 0 {
                let take = rest.min(part);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(IntegerPartition { parts: cur })
    }
}

/// `Lambda = (lambda^[1], ..., lambda^[k])` with `lambda^[i]` a partition of `alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionSequence {
    alpha: Composition,
    seq: Vec<IntegerPartition>,
}

impl PartitionSequence {
    pub fn new(alpha: Composition, seq: Vec<IntegerPartition>) -> Result<Self> {
        if seq.len() != alpha.len() {
            return Err(Error::DimensionMismatch {
                expected: alpha.len(),
                got: seq.len(),
            });
        }
        for (lambda, &a) in seq.iter().zip(alpha.parts()) {
            if lambda.n() != a {
                return Err(Error::InvalidPartition(format!(
                    "component {lambda} is not a partition of {a}"
                )));
            }
        }
        Ok(PartitionSequence { alpha, seq })
    }

    /// Builds the sequence and its composition from the component partitions.
    pub fn from_components(seq: Vec<IntegerPartition>) -> Result<Self> {
        let alpha = Composition::new(seq.iter().map(IntegerPartition::n).collect())?;
        PartitionSequence::new(alpha, seq)
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn components(&self) -> &[IntegerPartition] {
        &self.seq
    }

    pub fn component(&self, i: usize) -> &IntegerPartition {
        &self.seq[i]
    }

    /// `l(Lambda)`, the total number of parts.
    pub fn len(&self) -> usize {
        self.seq.iter().map(IntegerPartition::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(l(lambda^[1]), ..., l(lambda^[k]))`.
    pub fn lengths(&self) -> Vec<usize> {
        self.seq.iter().map(IntegerPartition::len).collect()
    }

    /// `m_i(Lambda)`, summed over components.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.seq.iter().map(|l| l.multiplicity(i)).sum()
    }

    /// `z_Lambda = prod_i z_{lambda^[i]}`.
    pub fn z(&self) -> ExactInteger {
        self.seq.iter().map(IntegerPartition::z).product()
    }

    /// `Lambda_i^{down(j+1)}` over `alpha` with part `i` (zero-based) decremented.
    pub fn down_arrow(&self, i: usize, j_plus_1: usize) -> Result<PartitionSequence> {
        if i >= self.seq.len() {
            return Err(Error::Index(format!("component {i} of {self}")));
        }
        let lowered = self.seq[i].down_arrow(j_plus_1)?;
        let alpha = self
            .alpha
            .decrement(i)
            .expect("a part >= 2 implies alpha_i >= 2");
        let mut seq = self.seq.clone();
        seq[i] = lowered;
        Ok(PartitionSequence { alpha, seq })
    }

    fn with_component(&self, i: usize, lambda: IntegerPartition) -> PartitionSequence {
        let mut seq = self.seq.clone();
        seq[i] = lambda;
        PartitionSequence {
            alpha: self.alpha.clone(),
            seq,
        }
    }
}

impl fmt::Display for PartitionSequence {
    /// `[2+1 | 1 | 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for PartitionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] around {s:?}")))?;
        let seq = inner
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<IntegerPartition>>>()?;
        PartitionSequence::from_components(seq)
    }
}

/// Every `Lambda` over `alpha`; the first component varies slowest.
pub fn partition_sequences(alpha: &Composition) -> impl Iterator<Item = PartitionSequence> {
    let choices: Vec<Vec<IntegerPartition>> =
        alpha.parts().iter().map(|&a| partitions(a).collect()).collect();
    let alpha = alpha.clone();
    let mut odometer = Some(vec![0usize; choices.len()]);
    std::iter::from_fn(move || {
        let idx = odometer.take()?;
        let seq = idx
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let mut next = idx;
        for pos in (0..next.len()).rev() {
            next[pos] += 1;
            if next[pos] < choices[pos].len() {
                odometer = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(PartitionSequence {
            alpha: alpha.clone(),
            seq,
        })
    })
}

pub fn z_of(lambda: &IntegerPartition) -> ExactInteger {
    lambda.z()
}

/// `kappa_{mu,lambda}` for merging `k` parts: the number of `k`-subsets of the
/// parts of `mu`, equal values told apart, whose merger gives `lambda`.
pub fn kappa(mu: &IntegerPartition, lambda: &IntegerPartition, k: usize) -> ExactInteger {
    if k < 2 || mu.n() != lambda.n() || mu.len() != lambda.len() + k - 1 {
        return BigInt::zero();
    }
    let mult: Vec<(usize, usize)> = mu.multiplicities().into_iter().collect();
    let mut total = BigInt::zero();
    let mut chosen = vec![0usize; mult.len()];
    merge_choices(&mult, 0, k, &mut chosen, &mut |chosen| {
        let mut rest = Vec::with_capacity(lambda.len());
        let mut merged = 0;
        for (&(value, m), &c) in mult.iter().zip(chosen) {
            rest.extend(std::iter::repeat_n(value, m - c));
            merged += value * c;
        }
        rest.push(merged);
        if IntegerPartition::from_parts(rest) == *lambda {
            let ways: BigInt = mult
                .iter()
                .zip(chosen)
                .map(|(&(_, m), &c)| binomial(m as u64, c as u64))
                .product();
            total += ways;
        }
    });
    total
}

/// Visits every way of choosing `c_v <= m_v` parts of each value with `sum c_v = remaining`.
fn merge_choices(
    mult: &[(usize, usize)],
    pos: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == mult.len() {
        if remaining == 0 {
            visit(chosen);
        }
        return;
    }
    for c in 0..=mult[pos].1.min(remaining) {
        chosen[pos] = c;
        merge_choices(mult, pos + 1, remaining - c, chosen, visit);
    }
    chosen[pos] = 0;
}

/// Partitions of `n` into exactly `k` parts.
pub fn partitions_into(n: usize, k: usize) -> Vec<IntegerPartition> {
    fn go(n: usize, k: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if k == 0 {
            if n == 0 {
                out.push(IntegerPartition::from_parts(acc.clone()));
            }
            return;
        }
        if n < k {
            return;
        }
        let hi = max.min(n - (k - 1));
        for first in (1..=hi).rev() {
            acc.push(first);
            go(n - first, k - 1, first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, n, &mut Vec::new(), &mut out);
    out
}

/// Every `mu` obtained from `lambda` by splitting one part into `k` parts,
/// with `kappa_{mu,lambda}`; sorted by `mu`.
pub fn refinement_targets(lambda: &IntegerPartition, k: usize) -> Vec<(IntegerPartition, ExactInteger)> {
    let mut out = BTreeMap::new();
    if k < 2 {
        return Vec::new();
    }
    for &part in lambda.multiplicities().keys() {
        for split in partitions_into(part, k) {
            let mut parts = lambda.parts.clone();
            let pos = parts.iter().position(|&p| p == part).unwrap();
            parts.remove(pos);
            parts.extend_from_slice(split.parts());
            let mu = IntegerPartition::from_parts(parts);
            out.entry(mu).or_insert_with_key(|mu| kappa(mu, lambda, k));
        }
    }
    out.into_iter().collect()
}

/// All refinements by an odd number `2j+1 >= 3` of parts: the index set of the
/// `mu |>_{2j+1} lambda, j > 0` sums.
pub fn odd_refinements(lambda: &IntegerPartition) -> Vec<(IntegerPartition, ExactInteger)> {
    let max = lambda.parts.first().copied().unwrap_or(0);
    (1..)
        .map(|j| 2 * j + 1)
        .take_while(|&k| k <= max)
        .flat_map(|k| refinement_targets(lambda, k))
        .collect()
}

/// One split of a sequence: component index, the refined sequence, and kappa.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRefinement {
    pub component: usize,
    pub refined: PartitionSequence,
    pub kappa: ExactInteger,
}

/// `Upsilon |>_{i,k} Lambda` over all components `i`. The split stays inside
/// component `i`, and kappa is that component's merge count.
pub fn sequence_refinements(lambda: &PartitionSequence, k: usize) -> Vec<SequenceRefinement> {
    let mut out = Vec::new();
    for (i, comp) in lambda.seq.iter().enumerate() {
        for (mu, kappa) in refinement_targets(comp, k) {
            out.push(SequenceRefinement {
                component: i,
                refined: lambda.with_component(i, mu),
                kappa,
            });
        }
    }
    out
}

/// Sequence refinements over every odd `2j+1 >= 3`.
pub fn odd_sequence_refinements(lambda: &PartitionSequence) -> Vec<SequenceRefinement> {
    let max = lambda.seq.iter().flat_map(|l| l.parts.first()).copied().max().unwrap_or(0);
    (1..)
        .map(|j| 2 * j + 1)
        .take_while(|&k| k <= max)
        .flat_map(|k| sequence_refinements(lambda, k))
        .collect()
}

/// `Lambda_{i,j} = (alpha_i / 2) * j * m_j((lambda^[i])^{down(j+1)})`, with `i`
/// zero-based. Fails with `NoSuchPart` when `lambda^[i]` has no part `j+1`.
pub fn lambda_coeff(lambda: &PartitionSequence, i: usize, j: usize) -> Result<ExactRational> {
    if i >= lambda.seq.len() {
        return Err(Error::Index(format!("component {i} of {lambda}")));
    }
    let lowered = lambda.seq[i].down_arrow(j + 1)?;
    let alpha_i = lambda.alpha.parts()[i];
    Ok(ratio(
        BigInt::from(alpha_i * j * lowered.multiplicity(j)),
        2,
    ))
}

/// The `(i, j)` pairs with `m_{j+1}(lambda^[i]) >= 1`, `j >= 1`: the support of `T_Lambda`.
pub fn down_arrow_indices(lambda: &PartitionSequence) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, comp) in lambda.seq.iter().enumerate() {
        for &part in comp.multiplicities().keys() {
            if part >= 2 {
                out.push((i, part - 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn lp(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let l = lp("1^2 2^1 3^1");
        assert_eq!(l, lp("3+2+1+1"));
        assert_eq!(l.to_string(), "3+2+1+1");
        assert_eq!(l.to_exponent_string(), "1^2 2^1 3^1");
        assert_eq!(l.len(), 4);
        assert_eq!(l.multiplicity(1), 2);
        assert_eq!(lp("()"), IntegerPartition::empty());
        assert!("3+0".parse::<IntegerPartition>().is_err());
        assert!("0^2".parse::<IntegerPartition>().is_err());
    }

    #[test]
    fn z_examples() {
        assert_eq!(lp("5").z(), int(24));
        assert_eq!(lp("1+1+1+1").z(), int(1));
        assert_eq!(lp("2+1").z(), int(3));
        assert_eq!(lp("2+2").z(), int(3));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(0).next().unwrap(), IntegerPartition::empty());
        let four: Vec<String> = partitions(4).map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
    }

    #[test]
    fn sequences() {
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let all: Vec<_> = partition_sequences(&alpha).collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0].to_string(), "[2 | 2]");
        assert_eq!(all[3].to_string(), "[1+1 | 1+1]");
        let s: PartitionSequence = "[2+1 | 1]".parse().unwrap();
        assert_eq!(s.alpha().parts(), &[3, 1]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.z(), int(3));
        assert_eq!(s.multiplicity(1), 2);
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&lp("2+2+1+1"), &lp("3+2+1"), 2), int(4));
        assert_eq!(kappa(&lp("3+1"), &lp("3+1"), 2), int(0));
        assert_eq!(kappa(&lp("1+1+1"), &lp("3"), 3), int(1));
        assert_eq!(kappa(&lp("1+1+1+1"), &lp("3+1"), 3), int(4));
    }

    #[test]
    fn refinements() {
        assert_eq!(
            refinement_targets(&lp("3"), 3),
            vec![(lp("1+1+1"), int(1))]
        );
        assert!(refinement_targets(&lp("1+1+1+1"), 3).is_empty());
        let five = refinement_targets(&lp("5"), 3);
        let mus: Vec<String> = five.iter().map(|(m, _)| m.to_string()).collect();
        assert_eq!(mus, ["2+2+1", "3+1+1"]);
        assert!(five.iter().all(|(_, k)| *k == int(1)));
    }

    #[test]
    fn down_arrows() {
        assert_eq!(lp("2").down_arrow(2).unwrap(), lp("1"));
        assert_eq!(lp("3+2+1").down_arrow(3).unwrap(), lp("2+2+1"));
        assert!(matches!(lp("2+1").down_arrow(3), Err(Error::NoSuchPart { .. })));
        let s: PartitionSequence = "[2 | 2]".parse().unwrap();
        let d = s.down_arrow(0, 2).unwrap();
        assert_eq!(d.to_string(), "[1 | 2]");
        assert_eq!(d.alpha().parts(), &[1, 2]);
    }

    #[test]
    fn lambda_coefficients() {
        let s: PartitionSequence = "[2+1]".parse().unwrap();
        assert_eq!(lambda_coeff(&s, 0, 1).unwrap(), ratio(3, 1));
        let s: PartitionSequence = "[2+2]".parse().unwrap();
        assert_eq!(lambda_coeff(&s, 0, 1).unwrap(), ratio(2, 1));
        assert!(lambda_coeff(&s, 0, 2).is_err());
    }
}
