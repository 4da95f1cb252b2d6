use num_bigint::BigInt;

use crate::closed_forms::{
    boccara, chen_separated_count, even_factorization_count, hultman_expected, pairs_by_type,
    separating_by_d, separating_total, separation_probability, zagier_stanley,
};
use crate::composition::compositions;
use crate::error::Result;
use crate::exact::{ratio, to_rational};
use crate::oracle::{count_factorizations, expected_k_cycles, fixed_left_cycle_counts, PairSweep, TallyKey};
use crate::partition::{partitions, IntegerPartition};
use crate::perm::Permutation;

use super::separation::d_tuples_for;
use super::IdentityReport;

fn report(identity: &str, n: usize, instance: String, formula: BigInt, oracle: BigInt) -> IdentityReport {
    IdentityReport::new(identity, n, instance, to_rational(&formula), to_rational(&oracle))
}

/// Every closed form at the sweep's `n` against brute force: the formula is
/// the left side, the oracle the right.
pub fn check_formula_vs_oracle(sweep: &PairSweep) -> Result<Vec<IdentityReport>> {
    let n = sweep.n();
    let mut out = Vec::new();

    let fixed_left = fixed_left_cycle_counts(n)?;
    for k in 1..=n {
        let oracle = fixed_left.get(&k).copied().unwrap_or(0);
        out.push(report("zagier-stanley", n, format!("k={k}"), zagier_stanley(n, k)?, oracle.into()));
    }

    for k in 1..n {
        out.push(IdentityReport::new(
            "hultman",
            n,
            format!("k={k}"),
            hultman_expected(n, k)?,
            expected_k_cycles(sweep, k),
        ));
    }

    if n.is_multiple_of(2) {
        for k in 1..n {
            let target = Permutation::representative(&IntegerPartition::from_parts(vec![k, n - k]));
            out.push(report("boccara", n, format!("k={k}"), boccara(n, k)?, count_factorizations(&target)?));
        }
    }

    let types = sweep.cycle_type_table();
    for lambda in partitions(n) {
        let observed = types.get(&TallyKey::CycleType(lambda.clone()));
        out.push(report("pairs-by-type", n, format!("lambda={lambda}"), pairs_by_type(&lambda)?, observed));
        if lambda.is_even() {
            let target = Permutation::representative(&lambda);
            out.push(report(
                "even-factorization",
                n,
                format!("lambda={lambda}"),
                even_factorization_count(&lambda)?,
                count_factorizations(&target)?,
            ));
        }
    }

    for alpha in compositions(n) {
        let table = sweep.alpha_table(&alpha)?;
        out.push(report(
            "separating-total",
            n,
            format!("alpha={alpha}"),
            separating_total(&alpha)?,
            table.get(&TallyKey::Separated),
        ));
        for d in d_tuples_for(&alpha) {
            out.push(report(
                "separating-by-d",
                n,
                format!("alpha={alpha} d={d:?}"),
                separating_by_d(&alpha, &d)?,
                table.get(&TallyKey::DVector(d.clone())),
            ));
        }
    }

    let total = sweep.total();
    for m in 1..=n {
        let counts = sweep.separated_prefix_counts(m);
        for k in 1..=n {
            let oracle = counts.get(&k).copied().unwrap_or(0);
            out.push(report("chen", n, format!("m={m} k={k}"), chen_separated_count(n, m, k)?, oracle.into()));
        }
        if m >= 2 {
            let hits: u64 = counts.values().sum();
            out.push(IdentityReport::new(
                "separation-probability",
                n,
                format!("m={m}"),
                separation_probability(n, m)?,
                ratio(BigInt::from(hits), total.clone()),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{pair_histogram, SweepOptions};

    #[test]
    fn all_formulas_through_six() {
        for n in 1..=6 {
            let sweep = pair_histogram(n, SweepOptions::default()).unwrap();
            for r in check_formula_vs_oracle(&sweep).unwrap() {
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn named_values() {
        let sweep = pair_histogram(5, SweepOptions::default()).unwrap();
        let reports = check_formula_vs_oracle(&sweep).unwrap();
        let p = reports
            .iter()
            .find(|r| r.identity == "separation-probability" && r.instance == "m=2")
            .unwrap();
        assert_eq!(p.rhs, ratio(1, 2));
        let sweep = pair_histogram(4, SweepOptions::default()).unwrap();
        let reports = check_formula_vs_oracle(&sweep).unwrap();
        let s = reports
            .iter()
            .find(|r| r.identity == "separating-by-d" && r.instance == "alpha=(2,2) d=[1, 1]")
            .unwrap();
        assert_eq!(s.rhs, ratio(2, 1));
        assert!(s.pass);
    }
}
