use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::exact::{ExactInteger, ExactRational};
use crate::numbers::factorial;
use crate::partition::{partitions, IntegerPartition, PartitionSequence};
use crate::perm::{factorial_usize, long_cycle_word, LongCycles, Permutation};
use crate::plane::{exceedance_count_raw, PlanePermutation};

use super::table::{CountTable, OracleQuery, OracleResult, SweepKind, TallyKey, VERSION};

/// Largest `n` swept without the override (`((n-1)!)^2` pairs is 1.6e9 at 9).
pub const DEFAULT_GUARD: usize = 9;

#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    /// Worker count; `None` uses rayon's global pool.
    pub threads: Option<usize>,
    /// Ignore [`DEFAULT_GUARD`].
    pub force: bool,
}

impl SweepOptions {
    pub fn single_threaded() -> Self {
        SweepOptions { threads: Some(1), force: false }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("sweeps need n >= 1".into()));
        }
        if n > DEFAULT_GUARD && !self.force {
            return Err(Error::ResourceLimit { n, limit: DEFAULT_GUARD });
        }
        Ok(())
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            None => f(),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .expect("thread pool")
                .install(f),
        }
    }
}

/// Splits `0..total` into contiguous ranges for the workers.
fn chunks(total: usize) -> Vec<(usize, usize)> {
    let pieces = total.clamp(1, 256);
    let step = total.div_ceil(pieces).max(1);
    (0..total)
        .step_by(step)
        .map(|start| (start, (start + step).min(total)))
        .collect()
}

fn add_into(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Images (0-based, flat, `n` per cycle) of every long cycle on `[n]`, in iteration order.
fn all_long_cycle_images(n: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(factorial_usize(n - 1) * n);
    for c in LongCycles::new(n) {
        out.extend(c.as_slice().iter().map(|&v| v as u8));
    }
    out
}

fn word_images(word: &[usize], out: &mut [u8]) {
    let n = word.len();
    for i in 0..n {
        out[word[i]] = word[(i + 1) % n] as u8;
    }
}

fn rank_small(image: &[u8]) -> usize {
    let n = image.len();
    let mut rank = 0;
    for i in 0..n {
        let v = image[i];
        let smaller = image[i + 1..].iter().filter(|&&w| w < v).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// Histogram of exact products `c1 c2` over all ordered pairs of long cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSweep {
    n: usize,
    /// Indexed by the lexicographic rank of the product.
    counts: Vec<u64>,
}

/// Sweeps all `((n-1)!)^2` ordered pairs, recording each product exactly.
pub fn pair_histogram(n: usize, opts: SweepOptions) -> Result<PairSweep> {
    opts.check(n)?;
    let cycles = all_long_cycle_images(n);
    let outer = factorial_usize(n - 1);
    let bins = factorial_usize(n);
    let counts = opts.run(|| {
        chunks(outer)
            .into_par_iter()
            .map(|(start, end)| {
                let mut hist = vec![0u64; bins];
                let mut word = long_cycle_word(n, start);
                let mut left = vec![0u8; n];
                let mut product = vec![0u8; n];
                for _ in start..end {
                    word_images(&word, &mut left);
                    for right in cycles.chunks_exact(n) {
                        for x in 0..n {
                            product[x] = left[right[x] as usize];
                        }
                        hist[rank_small(&product)] += 1;
                    }
                    LongCycles::advance_word(&mut word);
                }
                hist
            })
            .reduce(|| vec![0u64; bins], add_into)
    });
    Ok(PairSweep { n, counts })
}

impl PairSweep {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `((n-1)!)^2`.
    pub fn total(&self) -> ExactInteger {
        self.counts.iter().map(|&c| BigInt::from(c)).sum()
    }

    /// Number of ordered pairs with product exactly `p`.
    pub fn count_of(&self, p: &Permutation) -> u64 {
        self.counts[p.rank()]
    }

    /// Nonzero `(product, count)` entries in rank order.
    pub fn products(&self) -> impl Iterator<Item = (Permutation, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(r, &c)| (Permutation::unrank(self.n, r), c))
    }

    pub fn cycle_type_table(&self) -> CountTable {
        let mut t = CountTable::new();
        for (p, c) in self.products() {
            t.add(TallyKey::CycleType(p.cycle_type()), c);
        }
        t
    }

    /// Rows `d:...`, `alpha-type:...` and `separated` for `alpha`.
    pub fn alpha_table(&self, alpha: &Composition) -> Result<CountTable> {
        if alpha.n() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: alpha.n() });
        }
        let mut t = CountTable::new();
        for (p, c) in self.products() {
            if let Ok(lambda) = p.alpha_type(alpha) {
                t.add(TallyKey::DVector(lambda.lengths()), c);
                t.add(TallyKey::AlphaType(lambda), c);
                t.add(TallyKey::Separated, c);
            }
        }
        Ok(t)
    }

    /// `p^{(n)}_Lambda` for every `Lambda` over `alpha`.
    pub fn alpha_type_counts(&self, alpha: &Composition) -> BTreeMap<PartitionSequence, u64> {
        let mut out = BTreeMap::new();
        for (p, c) in self.products() {
            if let Ok(lambda) = p.alpha_type(alpha) {
                *out.entry(lambda).or_insert(0) += c;
            }
        }
        out
    }

    /// Pairs whose product has `k` cycles with `1..=m` in distinct cycles, by `k`.
    pub fn separated_prefix_counts(&self, m: usize) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (p, c) in self.products() {
            let cycles = p.cycles_zero_based();
            let ok = cycles
                .iter()
                .all(|cy| cy.iter().filter(|&&x| x < m).count() <= 1);
            if ok {
                *out.entry(cycles.len()).or_insert(0) += c;
            }
        }
        out
    }

    /// Stores the raw histogram as an [`OracleResult`] of `product:` rows.
    pub fn to_result(&self) -> OracleResult {
        let table = self
            .products()
            .map(|(p, c)| (TallyKey::Product(p), BigInt::from(c)))
            .collect();
        OracleResult {
            n: self.n,
            query: OracleQuery {
                kind: SweepKind::PairHistogram,
                n: self.n,
                alpha: None,
                diagonal: None,
            },
            table,
            total: self.total(),
            version: VERSION.to_string(),
        }
    }

    pub fn from_result(r: &OracleResult) -> Result<PairSweep> {
        if r.query.kind != SweepKind::PairHistogram {
            return Err(Error::Cache(format!("not a pair histogram: {}", r.query.canonical())));
        }
        let mut counts = vec![0u64; factorial_usize(r.n)];
        for (k, v) in r.table.iter() {
            let TallyKey::Product(p) = k else {
                return Err(Error::Cache(format!("unexpected row {k}")));
            };
            counts[p.rank()] = u64::try_from(v).map_err(|e| Error::Cache(e.to_string()))?;
        }
        Ok(PairSweep { n: r.n, counts })
    }
}

/// All ordered pairs of long cycles, tallied by product cycle type and, when
/// `alpha` is given, by `d`-vector and `alpha`-type of the separated products.
pub fn sweep_pairs(n: usize, alpha: Option<&Composition>, opts: SweepOptions) -> Result<OracleResult> {
    if let Some(a) = alpha {
        if a.n() != n {
            return Err(Error::SizeMismatch { left: n, right: a.n() });
        }
    }
    let hist = pair_histogram(n, opts)?;
    Ok(pairs_result(&hist, alpha))
}

pub(crate) fn pairs_result(hist: &PairSweep, alpha: Option<&Composition>) -> OracleResult {
    let mut table = hist.cycle_type_table();
    // Every cycle type gets a row, including those no product reaches.
    for lambda in partitions(hist.n) {
        table.add(TallyKey::CycleType(lambda), 0);
    }
    if let Some(a) = alpha {
        table.merge(&hist.alpha_table(a).expect("sizes checked"));
    }
    OracleResult {
        n: hist.n,
        query: OracleQuery::pairs(hist.n, alpha.cloned()),
        table,
        total: hist.total(),
        version: VERSION.to_string(),
    }
}

/// Cycle-type tally with the left factor fixed to `(1 2 ... n)`, scaled by
/// `(n-1)!`. Only valid for conjugation-invariant statistics.
pub fn sweep_cycle_types_reduced(n: usize) -> Result<CountTable> {
    SweepOptions::default().check(n)?;
    let left = Permutation::standard_long_cycle(n);
    let scale = factorial(n - 1);
    let mut t = CountTable::new();
    for right in LongCycles::new(n) {
        let p = left.compose(&right)?;
        t.add(TallyKey::CycleType(p.cycle_type()), scale.clone());
    }
    Ok(t)
}

/// Number of long cycles `s` with `(1 2 ... n) s` having `k` cycles, by `k`.
pub fn fixed_left_cycle_counts(n: usize) -> Result<BTreeMap<usize, u64>> {
    SweepOptions::default().check(n)?;
    let left = Permutation::standard_long_cycle(n);
    let mut out = BTreeMap::new();
    for s in LongCycles::new(n) {
        *out.entry(left.compose(&s)?.cycle_count()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Ordered pairs `(c1, c2)` of long cycles with `c1 c2 = target`, found by
/// testing `c2 = c1^{-1} target` for every `c1`.
pub fn count_factorizations(target: &Permutation) -> Result<ExactInteger> {
    let n = target.n();
    SweepOptions { threads: None, force: true }.check(n)?;
    if !target.is_even() {
        return Ok(BigInt::from(0));
    }
    let mut count = 0u64;
    for c1 in LongCycles::new(n) {
        if c1.inverse().compose(target)?.is_long_cycle() {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Largest target size for [`sweep_factorizations`] without the override; the
/// search is only `(n-1)!` long.
pub const FACTORIZATION_GUARD: usize = 12;

/// [`count_factorizations`] as an [`OracleResult`]: one row keyed by the
/// target's cycle type, total `(n-1)!` candidates.
pub fn sweep_factorizations(target: &Permutation, opts: SweepOptions) -> Result<OracleResult> {
    let n = target.n();
    if n == 0 {
        return Err(Error::Domain("sweeps need n >= 1".into()));
    }
    if n > FACTORIZATION_GUARD && !opts.force {
        return Err(Error::ResourceLimit { n, limit: FACTORIZATION_GUARD });
    }
    let mut table = CountTable::new();
    table.add(TallyKey::CycleType(target.cycle_type()), count_factorizations(target)?);
    Ok(OracleResult {
        n,
        query: OracleQuery {
            kind: SweepKind::Factorizations,
            n,
            alpha: None,
            diagonal: Some(target.clone()),
        },
        table,
        total: factorial(n - 1),
        version: VERSION.to_string(),
    })
}

/// Expected number of `k`-cycles in the product of two uniform long cycles,
/// averaged over the exhaustive sweep.
pub fn expected_k_cycles(sweep: &PairSweep, k: usize) -> ExactRational {
    let mut weighted = BigInt::from(0);
    for (p, c) in sweep.products() {
        let mk = p.cycle_type().multiplicity(k);
        weighted += BigInt::from(mk as u64 * c);
    }
    BigRational::new(weighted, sweep.total())
}

/// All long cycles `s` against a fixed diagonal `D`, with `pi = D^{-1} s` so
/// that `D = s pi^{-1}`. Rows: `type-exc` always, `ne`, and with `alpha` the
/// `alpha-type-exc` rows of separated verticals. Total `(n-1)!`.
pub fn sweep_fixed_diagonal(
    diagonal: &Permutation,
    alpha: Option<&Composition>,
    opts: SweepOptions,
) -> Result<OracleResult> {
    let n = diagonal.n();
    opts.check(n)?;
    if let Some(a) = alpha {
        if a.n() != n {
            return Err(Error::SizeMismatch { left: n, right: a.n() });
        }
    }
    let d_inv = diagonal.inverse();
    let outer = factorial_usize(n - 1);
    let table = opts.run(|| {
        chunks(outer)
            .into_par_iter()
            .map(|(start, end)| {
                let mut t = CountTable::new();
                for s in LongCycles::starting_at(n, start).take(end - start) {
                    let pi = d_inv.compose(&s).expect("sizes agree");
                    let word = s_word(&s);
                    let a = exceedance_count_raw(&word, pi.as_slice());
                    let lambda = pi.cycle_type();
                    t.add(TallyKey::Ne(n - lambda.len() - a), 1);
                    if let Some(alpha) = alpha {
                        if let Ok(at) = pi.alpha_type(alpha) {
                            t.add(TallyKey::AlphaTypeExc { lambda: at, a }, 1);
                        }
                    }
                    t.add(TallyKey::CycleTypeExc { lambda, a }, 1);
                }
                t
            })
            .reduce(CountTable::new, |mut a, b| {
                a.merge(&b);
                a
            })
    });
    Ok(OracleResult {
        n,
        query: OracleQuery {
            kind: SweepKind::FixedDiagonal,
            n,
            alpha: alpha.cloned(),
            diagonal: Some(diagonal.clone()),
        },
        table,
        total: factorial(n - 1),
        version: VERSION.to_string(),
    })
}

fn s_word(s: &Permutation) -> Vec<usize> {
    let img = s.as_slice();
    let mut word = Vec::with_capacity(s.n());
    let mut x = 0;
    for _ in 0..s.n() {
        word.push(x);
        x = img[x];
    }
    word
}

/// For each vertical type `lambda`, the sum of `Ne(p')` over plane
/// permutations `p = (s, pi)` with diagonal `D` and vertical of type `lambda`,
/// where `p'` is the reflection of `p`.
pub fn reflected_ntae_totals(diagonal: &Permutation) -> Result<BTreeMap<IntegerPartition, u64>> {
    let n = diagonal.n();
    SweepOptions::default().check(n)?;
    let mut out = BTreeMap::new();
    for s in LongCycles::new(n) {
        let p = PlanePermutation::with_diagonal(&s, diagonal)?;
        *out.entry(p.pi().cycle_type()).or_insert(0) += p.reflect().ne() as u64;
    }
    Ok(out)
}

/// Every plane permutation `(s, pi)` on `[n]`, tallied by the exact vertical
/// `pi`, the cycle type of the diagonal, and the exceedance count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSweep {
    n: usize,
    types: Vec<IntegerPartition>,
    /// `counts[(rank(pi) * types + eta) * (n + 1) + a]`.
    counts: Vec<u64>,
}

pub fn plane_histogram(n: usize, opts: SweepOptions) -> Result<PlaneSweep> {
    opts.check(n)?;
    let types: Vec<IntegerPartition> = partitions(n).collect();
    let type_index: BTreeMap<IntegerPartition, usize> =
        types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let verticals = factorial_usize(n);
    let stride = n + 1;
    let bins = verticals * types.len() * stride;
    let outer = factorial_usize(n - 1);
    let counts = opts.run(|| {
        chunks(outer)
            .into_par_iter()
            .map(|(start, end)| {
                let mut hist = vec![0u64; bins];
                for s in LongCycles::starting_at(n, start).take(end - start) {
                    let word = s_word(&s);
                    for r in 0..verticals {
                        let pi = Permutation::unrank(n, r);
                        let diag = s.compose(&pi.inverse()).expect("sizes agree");
                        let eta = type_index[&diag.cycle_type()];
                        let a = exceedance_count_raw(&word, pi.as_slice());
                        hist[(r * types.len() + eta) * stride + a] += 1;
                    }
                }
                hist
            })
            .reduce(|| vec![0u64; bins], add_into)
    });
    Ok(PlaneSweep { n, types, counts })
}

impl PlaneSweep {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero cells `(pi, eta, a, count)`.
    pub fn cells(&self) -> impl Iterator<Item = (Permutation, &IntegerPartition, usize, u64)> + '_ {
        let stride = self.n + 1;
        let per_pi = self.types.len() * stride;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(idx, &c)| {
                let r = idx / per_pi;
                let eta = (idx % per_pi) / stride;
                let a = idx % stride;
                (Permutation::unrank(self.n, r), &self.types[eta], a, c)
            })
    }

    /// Calls `f(eta, a, count)` for the nonzero cells of vertical `pi`.
    fn for_vertical(&self, rank: usize, mut f: impl FnMut(&IntegerPartition, usize, u64)) {
        let stride = self.n + 1;
        let per_pi = self.types.len() * stride;
        let row = &self.counts[rank * per_pi..(rank + 1) * per_pi];
        for (idx, &c) in row.iter().enumerate() {
            if c > 0 {
                f(&self.types[idx / stride], idx % stride, c);
            }
        }
    }

    /// `p^eta_{lambda,a}` keyed by `(eta, lambda, a)`.
    pub fn type_counts(&self) -> BTreeMap<(IntegerPartition, IntegerPartition, usize), u64> {
        let mut out = BTreeMap::new();
        for r in 0..factorial_usize(self.n) {
            let lambda = Permutation::unrank(self.n, r).cycle_type();
            self.for_vertical(r, |eta, a, c| {
                *out.entry((eta.clone(), lambda.clone(), a)).or_insert(0) += c;
            });
        }
        out
    }

    /// `p^eta_{Lambda,a}` keyed by `(eta, Lambda, a)` over `alpha`.
    pub fn alpha_counts(
        &self,
        alpha: &Composition,
    ) -> BTreeMap<(IntegerPartition, PartitionSequence, usize), u64> {
        let mut out = BTreeMap::new();
        for r in 0..factorial_usize(self.n) {
            let Ok(lambda) = Permutation::unrank(self.n, r).alpha_type(alpha) else {
                continue;
            };
            self.for_vertical(r, |eta, a, c| {
                *out.entry((eta.clone(), lambda.clone(), a)).or_insert(0) += c;
            });
        }
        out
    }

    pub fn total(&self) -> ExactInteger {
        self.counts.iter().map(|&c| BigInt::from(c)).sum()
    }

    pub fn to_result(&self) -> OracleResult {
        let table = self
            .cells()
            .map(|(pi, eta, a, c)| {
                (TallyKey::PlaneCell { pi, eta: eta.clone(), a }, BigInt::from(c))
            })
            .collect();
        OracleResult {
            n: self.n,
            query: OracleQuery {
                kind: SweepKind::PlaneHistogram,
                n: self.n,
                alpha: None,
                diagonal: None,
            },
            table,
            total: self.total(),
            version: VERSION.to_string(),
        }
    }

    pub fn from_result(r: &OracleResult) -> Result<PlaneSweep> {
        if r.query.kind != SweepKind::PlaneHistogram {
            return Err(Error::Cache(format!("not a plane histogram: {}", r.query.canonical())));
        }
        let n = r.n;
        let types: Vec<IntegerPartition> = partitions(n).collect();
        let stride = n + 1;
        let mut counts = vec![0u64; factorial_usize(n) * types.len() * stride];
        for (k, v) in r.table.iter() {
            let TallyKey::PlaneCell { pi, eta, a } = k else {
                return Err(Error::Cache(format!("unexpected row {k}")));
            };
            let e = types
                .iter()
                .position(|t| t == eta)
                .ok_or_else(|| Error::Cache(format!("bad diagonal type {eta}")))?;
            let idx = (pi.rank() * types.len() + e) * stride + a;
            counts[idx] = u64::try_from(v).map_err(|e| Error::Cache(e.to_string()))?;
        }
        Ok(PlaneSweep { n, types, counts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn lp(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    #[test]
    fn pairs_at_four() {
        let r = sweep_pairs(4, None, SweepOptions::default()).unwrap();
        assert_eq!(r.total, int(36));
        let t = &r.table;
        assert_eq!(t.get(&TallyKey::CycleType(lp("2+2"))), int(6));
        assert_eq!(t.get(&TallyKey::CycleType(lp("3+1"))), int(24));
        assert_eq!(t.get(&TallyKey::CycleType(lp("1+1+1+1"))), int(6));
        assert_eq!(t.get(&TallyKey::CycleType(lp("4"))), int(0));
        assert_eq!(t.get(&TallyKey::CycleType(lp("2+1+1"))), int(0));
        assert_eq!(t.len(), 5);
        assert_eq!(t.sum(), int(36));
    }

    #[test]
    fn pairs_at_four_separated() {
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let r = sweep_pairs(4, Some(&alpha), SweepOptions::default()).unwrap();
        let d = r.table.filter(|k| matches!(k, TallyKey::DVector(_)));
        assert_eq!(d.len(), 2);
        assert_eq!(d.get(&TallyKey::DVector(vec![1, 1])), int(2));
        assert_eq!(d.get(&TallyKey::DVector(vec![2, 2])), int(6));
        assert_eq!(r.table.get(&TallyKey::Separated), int(8));
    }

    #[test]
    fn single_point() {
        let r = sweep_pairs(1, None, SweepOptions::default()).unwrap();
        assert_eq!(r.total, int(1));
        assert_eq!(r.table.get(&TallyKey::CycleType(lp("1"))), int(1));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            sweep_pairs(12, None, SweepOptions::default()),
            Err(Error::ResourceLimit { n: 12, limit: 9 })
        ));
        assert!(sweep_pairs(0, None, SweepOptions::default()).is_err());
    }

    #[test]
    fn reduced_matches_full() {
        for n in 1..=6 {
            let full = pair_histogram(n, SweepOptions::default()).unwrap().cycle_type_table();
            assert_eq!(sweep_cycle_types_reduced(n).unwrap(), full, "n={n}");
        }
    }

    #[test]
    fn factorization_counts() {
        let t: Permutation = "(1 2)(3 4)".parse().unwrap();
        assert_eq!(count_factorizations(&t).unwrap(), int(2));
        for n in 1..=6 {
            assert_eq!(
                count_factorizations(&Permutation::identity(n)).unwrap(),
                factorial(n - 1)
            );
        }
        let odd: Permutation = "(1 2)(3)(4)".parse().unwrap();
        assert_eq!(count_factorizations(&odd).unwrap(), int(0));
    }

    #[test]
    fn expected_cycles() {
        let s3 = pair_histogram(3, SweepOptions::default()).unwrap();
        assert_eq!(expected_k_cycles(&s3, 1), BigRational::new(int(3), int(2)));
        let s4 = pair_histogram(4, SweepOptions::default()).unwrap();
        assert_eq!(expected_k_cycles(&s4, 2), BigRational::new(int(1), int(3)));
    }

    #[test]
    fn fixed_diagonal_totals() {
        for n in 1..=6 {
            let d = Permutation::standard_long_cycle(n);
            let r = sweep_fixed_diagonal(&d, None, SweepOptions::default()).unwrap();
            let rows = r.table.filter(|k| matches!(k, TallyKey::CycleTypeExc { .. }));
            assert_eq!(rows.sum(), factorial(n - 1));
            assert_eq!(r.total, factorial(n - 1));
        }
    }

    #[test]
    fn histogram_roundtrips_through_result() {
        let h = pair_histogram(4, SweepOptions::default()).unwrap();
        assert_eq!(PairSweep::from_result(&h.to_result()).unwrap(), h);
        let p = plane_histogram(4, SweepOptions::default()).unwrap();
        assert_eq!(PlaneSweep::from_result(&p.to_result()).unwrap(), p);
        assert_eq!(p.total(), int(6 * 24));
    }
}
