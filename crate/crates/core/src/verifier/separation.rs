use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::closed_forms::separating_by_d;
use crate::composition::{compositions, Composition};
use crate::error::{Error, Result};
use crate::exact::{ratio, to_rational, ExactInteger, ExactRational};
use crate::numbers::{binomial, factorial, stirling_first};
use crate::oracle::{PairSweep, PlaneSweep};
use crate::partition::{
    down_arrow_indices, lambda_coeff, odd_refinements, odd_sequence_refinements,
    partition_sequences, IntegerPartition, PartitionSequence,
};

use super::audit::AuditEntry;
use super::{IdentityReport, PSource};

/// `p^eta_{Lambda,a}` for every `alpha |= n`, `Lambda |- alpha`, `eta |- n`.
#[derive(Clone, Debug)]
pub struct PlaneData {
    n: usize,
    cells: HashMap<(PartitionSequence, IntegerPartition), BTreeMap<usize, u64>>,
    etas: Vec<IntegerPartition>,
}

impl PlaneData {
    pub fn new(sweep: &PlaneSweep) -> Self {
        let n = sweep.n();
        let mut cells: HashMap<_, BTreeMap<usize, u64>> = HashMap::new();
        for alpha in compositions(n) {
            for ((eta, lambda, a), c) in sweep.alpha_counts(&alpha) {
                *cells.entry((lambda, eta)).or_default().entry(a).or_insert(0) += c;
            }
        }
        let etas = crate::partition::partitions(n).collect();
        PlaneData { n, cells, etas }
    }

    fn row(&self, eta: &IntegerPartition, lambda: &PartitionSequence) -> Option<&BTreeMap<usize, u64>> {
        self.cells.get(&(lambda.clone(), eta.clone()))
    }

    /// `p^eta_Lambda`.
    pub fn p(&self, eta: &IntegerPartition, lambda: &PartitionSequence) -> ExactInteger {
        self.row(eta, lambda)
            .map(|r| r.values().map(|&c| BigInt::from(c)).sum())
            .unwrap_or_default()
    }

    /// `sum_a (n - l(Lambda) - a) p^eta_{Lambda,a}`.
    fn ntae_total(&self, eta: &IntegerPartition, lambda: &PartitionSequence) -> ExactInteger {
        let base = self.n as i64 - lambda.len() as i64;
        self.row(eta, lambda)
            .map(|r| r.iter().map(|(&a, &c)| BigInt::from(c) * (base - a as i64)).sum())
            .unwrap_or_default()
    }

    /// `sum_eta sum_a a p^eta_{Lambda,a}`.
    fn exceedance_total(&self, lambda: &PartitionSequence) -> ExactInteger {
        self.etas
            .iter()
            .filter_map(|eta| self.row(eta, lambda))
            .flat_map(|r| r.iter())
            .map(|(&a, &c)| BigInt::from(c * a as u64))
            .sum()
    }
}

/// `p^{(n)}_Lambda` and `p^{(n)}_{alpha,d}` for every `alpha |= n`, from exact products.
#[derive(Clone, Debug)]
pub struct PairData {
    n: usize,
    by_type: HashMap<PartitionSequence, u64>,
}

impl PairData {
    pub fn new(sweep: &PairSweep) -> Self {
        let n = sweep.n();
        let alphas: Vec<Composition> = compositions(n).collect();
        let mut by_type = HashMap::new();
        for (p, c) in sweep.products() {
            for alpha in &alphas {
                if let Ok(lambda) = p.alpha_type(alpha) {
                    *by_type.entry(lambda).or_insert(0) += c;
                }
            }
        }
        PairData { n, by_type }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self, lambda: &PartitionSequence) -> ExactInteger {
        BigInt::from(self.by_type.get(lambda).copied().unwrap_or(0))
    }

    /// Pairs whose product is `alpha`-separated with block `i` in `d_i` cycles.
    pub fn p_d(&self, alpha: &Composition, d: &[usize]) -> ExactInteger {
        let total: u64 = self
            .by_type
            .iter()
            .filter(|(l, _)| l.alpha() == alpha && l.lengths() == d)
            .map(|(_, &c)| c)
            .sum();
        BigInt::from(total)
    }

    /// Pairs whose product is `alpha`-separated.
    pub fn p_total(&self, alpha: &Composition) -> ExactInteger {
        let total: u64 = self
            .by_type
            .iter()
            .filter(|(l, _)| l.alpha() == alpha)
            .map(|(_, &c)| c)
            .sum();
        BigInt::from(total)
    }
}

fn parity_ok(n: usize, len: usize) -> bool {
    len % 2 == n % 2
}

fn seq_refinement_sum(lambda: &PartitionSequence, f: impl Fn(&PartitionSequence) -> ExactRational) -> ExactRational {
    odd_sequence_refinements(lambda)
        .iter()
        .map(|r| to_rational(&r.kappa) * f(&r.refined))
        .sum()
}

/// `n + 1 - m_1(Lambda)`, i.e. `sum_{i>0} (i+1) m_{i+1}(Lambda)` for `Lambda |- alpha |= n+1`.
fn big_part_mass(lambda: &PartitionSequence) -> usize {
    lambda
        .components()
        .iter()
        .flat_map(|c| c.parts())
        .filter(|&&p| p >= 2)
        .sum()
}

/// `T_Lambda = sum_{i,j} Lambda_{i,j} p^{(n)}_{Lambda_i^{down(j+1)}}` for `Lambda |- alpha |= n+1`.
pub fn t_lambda(pairs: &PairData, lambda: &PartitionSequence) -> ExactRational {
    down_arrow_indices(lambda)
        .into_iter()
        .map(|(i, j)| {
            let c = lambda_coeff(lambda, i, j).expect("index from down_arrow_indices");
            let lowered = lambda.down_arrow(i, j + 1).expect("index from down_arrow_indices");
            c * to_rational(&pairs.p(&lowered))
        })
        .sum()
}

fn rat(v: ExactInteger) -> ExactRational {
    to_rational(&v)
}

/// Reports over `alpha |= n` (plane histogram and pairs) and `alpha |= n+1`
/// (pairs at `n`). Instances failing a parity hypothesis go to the audit.
pub fn check_separation(plane: &PlaneData, pairs: &PairData) -> (Vec<IdentityReport>, Vec<AuditEntry>) {
    let n = plane.n;
    assert_eq!(n, pairs.n, "plane and pair data must share n");
    let fact = rat(factorial(n - 1));
    let long = IntegerPartition::from_parts(vec![n]);
    let mut reports = Vec::new();
    let mut audit = Vec::new();

    for alpha in compositions(n) {
        for lambda in partition_sequences(&alpha) {
            let key = format!("Lambda={lambda}");
            let ell = lambda.len() as i64;
            for eta in &plane.etas {
                let inst = format!("{key} eta={eta}");
                let lhs = rat(plane.ntae_total(eta, &lambda));
                let split = seq_refinement_sum(&lambda, |u| rat(plane.p(eta, u)));
                reports.push(IdentityReport::new("gen-new", n, inst.clone(), lhs, split.clone()));

                let coeff = n as i64 + 1 - ell - eta.len() as i64;
                let lhs = rat(plane.p(eta, &lambda) * coeff);
                let merged: ExactRational = odd_refinements(eta)
                    .iter()
                    .map(|(mu, k)| rat(k * plane.p(mu, &lambda)))
                    .sum();
                reports.push(IdentityReport::new("gen-explicit-new", n, inst, lhs, split + merged));
            }

            let z = rat(lambda.z());
            let exc = rat(plane.exceedance_total(&lambda));
            let split_z = seq_refinement_sum(&lambda, |u| rat(u.z()));
            let rhs = BigRational::from_integer((n as i64 - ell).into()) * &fact * &z - &fact * split_z;
            reports.push(IdentityReport::new("cor-exc", n, key.clone(), exc.clone(), rhs));
            let m1 = lambda.multiplicity(1) as i64;
            let rhs = ratio(n as i64 - m1, 2) * &fact * &z;
            reports.push(IdentityReport::new("lem-exc", n, key.clone(), exc, rhs));

            reports.push(IdentityReport::new(
                "long-cycle-diagonal",
                n,
                key.clone(),
                rat(plane.p(&long, &lambda)),
                rat(pairs.p(&lambda)),
            ));

            let lhs = rat(pairs.p(&lambda) * (n as i64 + 1 - ell));
            let rhs = seq_refinement_sum(&lambda, |u| rat(pairs.p(u))) + &fact * &z;
            push_checked(&mut reports, &mut audit, parity_ok(n, lambda.len()), "long-new", n, key, lhs, rhs);
        }
    }

    for alpha in compositions(n + 1) {
        for lambda in partition_sequences(&alpha) {
            let key = format!("Lambda={lambda}");
            let ok = parity_ok(n, lambda.len());
            let ell = lambda.len() as i64;
            let z = rat(lambda.z());
            let t = t_lambda(pairs, &lambda);

            push_checked(&mut reports, &mut audit, ok, "thm-t-lambda", n, key.clone(), t.clone(), &fact * &z);

            let lhs = t.clone() * BigRational::from_integer((n as i64 + 1 - ell).into());
            let rhs = seq_refinement_sum(&lambda, |u| t_lambda(pairs, u))
                + &fact * &z * ratio(big_part_mass(&lambda), 2);
            push_checked(&mut reports, &mut audit, ok, "recur", n, key.clone(), lhs, rhs);

            let keylem_lhs: ExactRational = down_arrow_indices(&lambda)
                .into_iter()
                .map(|(i, j)| {
                    let c = lambda_coeff(&lambda, i, j).expect("valid index");
                    let lowered = lambda.down_arrow(i, j + 1).expect("valid index");
                    c * seq_refinement_sum(&lowered, |u| rat(pairs.p(u)))
                })
                .sum();
            let keylem_rhs = seq_refinement_sum(&lambda, |u| t_lambda(pairs, u));
            reports.push(IdentityReport::new("keylem", n, key.clone(), keylem_lhs, keylem_rhs));

            for (i, j) in down_arrow_indices(&lambda) {
                let c = lambda_coeff(&lambda, i, j).expect("valid index");
                let lowered = lambda.down_arrow(i, j + 1).expect("valid index");
                let lhs = c.clone()
                    * BigRational::from_integer((n as i64 + 1 - ell).into())
                    * rat(pairs.p(&lowered));
                let m = lambda.component(i).multiplicity(j + 1);
                let rhs = c * seq_refinement_sum(&lowered, |u| rat(pairs.p(u)))
                    + ratio((j + 1) * m, 2) * &fact * &z;
                let inst = format!("{key} i={} j={j}", i + 1);
                push_checked(&mut reports, &mut audit, ok, "downarrow", n, inst, lhs, rhs);
            }
        }
    }
    (reports, audit)
}

#[allow(clippy::too_many_arguments)]
fn push_checked(
    reports: &mut Vec<IdentityReport>,
    audit: &mut Vec<AuditEntry>,
    parity_holds: bool,
    identity: &str,
    n: usize,
    instance: String,
    lhs: ExactRational,
    rhs: ExactRational,
) {
    if parity_holds {
        reports.push(IdentityReport::new(identity, n, instance, lhs, rhs));
    } else {
        audit.push(AuditEntry::new(identity, n, instance, lhs, rhs));
    }
}

/// `sum_{Upsilon |>_{i,2j+1} Lambda} kappa z_Upsilon + (z_Lambda/2) sum (i+1) m_{i+1}`
/// against `(n+1-l(Lambda)) z_Lambda`, for every `Lambda |- alpha |= n+1`.
pub fn check_baserecur(n: usize) -> Vec<IdentityReport> {
    let alphas: Vec<Composition> = compositions(n + 1).collect();
    alphas
        .par_iter()
        .flat_map_iter(|alpha| {
            partition_sequences(alpha).map(move |lambda| {
                let z = rat(lambda.z());
                let lhs = z.clone() * BigRational::from_integer((n as i64 + 1 - lambda.len() as i64).into());
                let rhs = seq_refinement_sum(&lambda, |u| rat(u.z()))
                    + z * ratio(big_part_mass(&lambda), 2);
                IdentityReport::new("baserecur", n, format!("Lambda={lambda}"), lhs, rhs)
            })
        })
        .collect()
}

pub(crate) fn d_tuples_for(beta: &Composition) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in beta.parts() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=b).map(move |d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out
}

fn p_d_from(source: Option<&PairData>, alpha: &Composition, d: &[usize]) -> Result<ExactInteger> {
    if d.iter().zip(alpha.parts()).any(|(&di, &ai)| di > ai) {
        return Ok(BigInt::zero());
    }
    match source {
        Some(pairs) => Ok(pairs.p_d(alpha, d)),
        None => separating_by_d(alpha, d),
    }
}

/// `sum_i binom(beta_i, 2) p^{(n)}_{d/d_i beta, d}` with values from `source`
/// (`None` for the closed form).
fn cor_main1_lhs(beta: &Composition, d: &[usize], source: Option<&PairData>) -> Result<ExactInteger> {
    let mut total = BigInt::zero();
    for (i, &b) in beta.parts().iter().enumerate() {
        if b < 2 {
            continue;
        }
        let alpha = beta.decrement(i).expect("part >= 2");
        total += binomial(b as u64, 2) * p_d_from(source, &alpha, d)?;
    }
    Ok(total)
}

fn cor_main1_rhs(n: usize, beta: &Composition, d: &[usize]) -> ExactInteger {
    beta.parts()
        .iter()
        .zip(d)
        .fold(factorial(n - 1), |acc, (&b, &di)| acc * stirling_first(b, di))
}

/// The first corollary identity for `beta |= n+1`. Fails with `Parity` unless
/// `sum d_i = n (mod 2)`. `pairs = None` takes `p`-values from the closed form.
pub fn check_cor_main(beta: &Composition, d: &[usize], pairs: Option<&PairData>) -> Result<IdentityReport> {
    let n = beta.n() - 1;
    if d.len() != beta.len() {
        return Err(Error::DimensionMismatch { expected: beta.len(), got: d.len() });
    }
    if d.iter().sum::<usize>() % 2 != n % 2 {
        return Err(Error::Parity(format!("sum of d = {:?} does not match n = {n} mod 2", d)));
    }
    let lhs = cor_main1_lhs(beta, d, pairs)?;
    let src = if pairs.is_some() { "oracle" } else { "closed-form" };
    Ok(IdentityReport::new(
        "cor-main1",
        n,
        format!("beta={beta} d={d:?} source={src}"),
        rat(lhs),
        rat(cor_main1_rhs(n, beta, d)),
    ))
}

fn cor_main2_sides(n: usize, beta: &Composition, source: Option<&PairData>) -> Result<(ExactRational, ExactRational)> {
    let mut lhs = BigInt::zero();
    for (i, &b) in beta.parts().iter().enumerate() {
        if b < 2 {
            continue;
        }
        let alpha = beta.decrement(i).expect("part >= 2");
        let total = match source {
            Some(pairs) => pairs.p_total(&alpha),
            None => crate::closed_forms::separating_total(&alpha)?,
        };
        lhs += binomial(b as u64, 2) * total;
    }
    let prod: ExactInteger = beta.parts().iter().map(|&b| factorial(b)).product();
    Ok((rat(lhs), ratio(factorial(n - 1) * prod, 2)))
}

/// Both corollary identities over every `beta |= n+1`. Reports once per
/// requested source; wrong-parity `d` and single-point blocks go to the audit,
/// with the oracle value as the truth when available.
pub(crate) fn cor_main_suite(
    n: usize,
    pairs: Option<&PairData>,
    source: PSource,
) -> Result<(Vec<IdentityReport>, Vec<AuditEntry>)> {
    let mut sources: Vec<Option<&PairData>> = Vec::new();
    if matches!(source, PSource::Oracle | PSource::Both) && pairs.is_some() {
        sources.push(pairs);
    }
    if matches!(source, PSource::ClosedForm | PSource::Both) || pairs.is_none() {
        sources.push(None);
    }
    let mut reports = Vec::new();
    let mut audit = Vec::new();
    for beta in compositions(n + 1) {
        for d in d_tuples_for(&beta) {
            if d.iter().sum::<usize>() % 2 == n % 2 {
                for src in &sources {
                    reports.push(check_cor_main(&beta, &d, *src)?);
                }
            } else if let Some(p) = pairs {
                let truth = cor_main1_lhs(&beta, &d, Some(p))?;
                audit.push(AuditEntry::new(
                    "cor-main1",
                    n,
                    format!("beta={beta} d={d:?}"),
                    rat(truth),
                    rat(cor_main1_rhs(n, &beta, &d)),
                ));
            }
        }
        let has_block = beta.parts().iter().any(|&b| b >= 2);
        for src in &sources {
            let (lhs, rhs) = cor_main2_sides(n, &beta, *src)?;
            let tag = if src.is_some() { "oracle" } else { "closed-form" };
            if has_block {
                reports.push(IdentityReport::new(
                    "cor-main2",
                    n,
                    format!("beta={beta} source={tag}"),
                    lhs,
                    rhs,
                ));
            } else if src.is_some() {
                audit.push(AuditEntry::new("cor-main2", n, format!("beta={beta}"), lhs, rhs));
            }
        }
    }
    Ok((reports, audit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::oracle::{pair_histogram, plane_histogram, SweepOptions};

    fn pairs(n: usize) -> PairData {
        PairData::new(&pair_histogram(n, SweepOptions::default()).unwrap())
    }

    fn seq(s: &str) -> PartitionSequence {
        s.parse().unwrap()
    }

    #[test]
    fn t_lambda_smallest_case() {
        let t = t_lambda(&pairs(2), &seq("[2+1]"));
        assert_eq!(t, to_rational(&int(3)));
    }

    #[test]
    fn cor_main_examples() {
        let p3 = pairs(3);
        let beta: Composition = "2,2".parse().unwrap();
        let r = check_cor_main(&beta, &[1, 2], Some(&p3)).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.lhs, to_rational(&int(2)));
        let (lhs, rhs) = cor_main2_sides(3, &beta, Some(&p3)).unwrap();
        assert_eq!(lhs, to_rational(&int(4)));
        assert_eq!(lhs, rhs);
        assert!(matches!(check_cor_main(&beta, &[1, 1], Some(&p3)), Err(Error::Parity(_))));
    }

    #[test]
    fn baserecur_example() {
        let r = check_baserecur(4)
            .into_iter()
            .find(|r| r.instance == "Lambda=[2+2+1]")
            .unwrap();
        assert!(r.pass, "{r}");
    }

    #[test]
    fn suite_through_five() {
        for n in 1..=5 {
            let plane = PlaneData::new(&plane_histogram(n, SweepOptions::default()).unwrap());
            let p = pairs(n);
            let (reports, audit) = check_separation(&plane, &p);
            for r in &reports {
                assert!(r.pass, "{r}");
            }
            for a in &audit {
                assert!(a.truth_is_zero(), "{a:?}");
            }
            let (reports, audit) = cor_main_suite(n, Some(&p), PSource::Both).unwrap();
            assert!(reports.iter().all(|r| r.pass));
            assert!(audit.iter().all(|a| a.truth_is_zero()));
        }
    }
}
