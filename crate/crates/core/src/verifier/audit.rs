use serde::{Deserialize, Serialize};

use num_traits::Zero;

use crate::closed_forms::{
    boccara_raw, chen_separated_raw, even_factorization_raw, separating_by_d_raw, zagier_stanley_raw,
};
use crate::composition::compositions;
use crate::error::Result;
use crate::exact::{to_rational, ExactRational};
use crate::oracle::{count_factorizations, fixed_left_cycle_counts, PairSweep, TallyKey};
use crate::partition::{partitions, IntegerPartition};
use crate::perm::Permutation;

use super::diagonal::{long_sides, DiagonalData};

/// An instance outside a formula's parity hypothesis: the true value, which
/// must be zero, and what the unguarded formula gives there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub identity: String,
    pub n: usize,
    pub instance: String,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub truth: ExactRational,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub formula: ExactRational,
}

impl AuditEntry {
    pub fn new(identity: &str, n: usize, instance: String, truth: ExactRational, formula: ExactRational) -> Self {
        AuditEntry { identity: identity.to_string(), n, instance, truth, formula }
    }

    pub fn truth_is_zero(&self) -> bool {
        self.truth.is_zero()
    }

    /// Whether the unguarded formula happens to give the right answer anyway.
    pub fn formula_agrees(&self) -> bool {
        self.truth == self.formula
    }
}

pub(crate) fn plane_audit(data: &DiagonalData) -> Vec<AuditEntry> {
    let n = data.n();
    data.types()
        .iter()
        .filter(|l| l.len() % 2 != n % 2)
        .map(|lambda| {
            let (lhs, rhs) = long_sides(data, lambda);
            AuditEntry::new("long", n, format!("lambda={lambda}"), to_rational(&lhs), to_rational(&rhs))
        })
        .collect()
}

/// Closed forms evaluated without their parity guards, against the oracle at
/// the sweep's `n`.
pub fn parity_audit(sweep: &PairSweep) -> Result<Vec<AuditEntry>> {
    let n = sweep.n();
    let mut out = Vec::new();

    let fixed_left = fixed_left_cycle_counts(n)?;
    for k in (1..=n).filter(|k| (n - k) % 2 == 1) {
        let truth = fixed_left.get(&k).copied().unwrap_or(0);
        out.push(AuditEntry::new(
            "zagier-stanley",
            n,
            format!("k={k}"),
            to_rational(&truth.into()),
            zagier_stanley_raw(n, k),
        ));
    }

    if n % 2 == 1 {
        for k in 1..n {
            let target = Permutation::representative(&IntegerPartition::from_parts(vec![k, n - k]));
            out.push(AuditEntry::new(
                "boccara",
                n,
                format!("k={k}"),
                to_rational(&count_factorizations(&target)?),
                boccara_raw(n, k),
            ));
        }
    }

    for lambda in partitions(n).filter(|l| !l.is_even()) {
        let target = Permutation::representative(&lambda);
        out.push(AuditEntry::new(
            "even-factorization",
            n,
            format!("lambda={lambda}"),
            to_rational(&count_factorizations(&target)?),
            even_factorization_raw(&lambda)?,
        ));
    }

    for alpha in compositions(n) {
        let table = sweep.alpha_table(&alpha)?;
        for d in super::separation::d_tuples_for(&alpha) {
            if d.iter().sum::<usize>() % 2 == n % 2 {
                continue;
            }
            let truth = table.get(&TallyKey::DVector(d.clone()));
            out.push(AuditEntry::new(
                "separating-by-d",
                n,
                format!("alpha={alpha} d={d:?}"),
                to_rational(&truth),
                separating_by_d_raw(&alpha, &d)?,
            ));
        }
    }

    for m in 1..=n {
        let counts = sweep.separated_prefix_counts(m);
        for k in (1..=n).filter(|k| (n - k) % 2 == 1) {
            let truth = counts.get(&k).copied().unwrap_or(0);
            out.push(AuditEntry::new(
                "chen",
                n,
                format!("m={m} k={k}"),
                to_rational(&truth.into()),
                chen_separated_raw(n, m, k),
            ));
        }
    }
    Ok(out)
}
