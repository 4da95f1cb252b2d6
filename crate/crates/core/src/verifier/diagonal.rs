use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::exact::{to_rational, ExactInteger};
use crate::numbers::factorial;
use crate::oracle::{reflected_ntae_totals, sweep_fixed_diagonal, PlaneSweep, SweepOptions, TallyKey};
use crate::partition::{odd_refinements, partitions, IntegerPartition};
use crate::perm::Permutation;

use super::IdentityReport;

/// `p^eta_{lambda,a}` for every `eta, lambda |- n`, from one fixed-diagonal
/// sweep per diagonal type scaled by `z_eta`.
#[derive(Clone, Debug)]
pub struct DiagonalData {
    n: usize,
    types: Vec<IntegerPartition>,
    /// `(eta, lambda) -> a -> p^eta_{lambda,a}`.
    by_exc: BTreeMap<(IntegerPartition, IntegerPartition), BTreeMap<usize, ExactInteger>>,
    /// `(eta, lambda) -> sum of Ne(p')` over `p` with diagonal type `eta`, vertical type `lambda`.
    reflected: BTreeMap<(IntegerPartition, IntegerPartition), ExactInteger>,
}

impl DiagonalData {
    pub fn from_oracle(n: usize, opts: SweepOptions) -> Result<Self> {
        let types: Vec<IntegerPartition> = partitions(n).collect();
        let mut by_exc = BTreeMap::new();
        let mut reflected = BTreeMap::new();
        for eta in &types {
            let d = Permutation::representative(eta);
            let z = eta.z();
            let r = sweep_fixed_diagonal(&d, None, opts)?;
            for (key, count) in r.table.iter() {
                if let TallyKey::CycleTypeExc { lambda, a } = key {
                    by_exc
                        .entry((eta.clone(), lambda.clone()))
                        .or_insert_with(BTreeMap::new)
                        .insert(*a, count * &z);
                }
            }
            for (lambda, total) in reflected_ntae_totals(&d)? {
                reflected.insert((eta.clone(), lambda), BigInt::from(total) * &z);
            }
        }
        Ok(DiagonalData { n, types, by_exc, reflected })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn types(&self) -> &[IntegerPartition] {
        &self.types
    }

    /// `p^eta_{lambda,a}`.
    pub fn p_exc(&self, eta: &IntegerPartition, lambda: &IntegerPartition, a: usize) -> ExactInteger {
        self.by_exc
            .get(&(eta.clone(), lambda.clone()))
            .and_then(|m| m.get(&a).cloned())
            .unwrap_or_default()
    }

    /// `p^eta_lambda`.
    pub fn p(&self, eta: &IntegerPartition, lambda: &IntegerPartition) -> ExactInteger {
        self.by_exc
            .get(&(eta.clone(), lambda.clone()))
            .map(|m| m.values().sum())
            .unwrap_or_default()
    }

    fn ntae_total(&self, eta: &IntegerPartition, lambda: &IntegerPartition) -> ExactInteger {
        let n = self.n as i64;
        let l = lambda.len() as i64;
        self.by_exc
            .get(&(eta.clone(), lambda.clone()))
            .map(|m| m.iter().map(|(&a, c)| c * (n - l - a as i64)).sum())
            .unwrap_or_default()
    }
}

fn key(eta: &IntegerPartition, lambda: &IntegerPartition) -> String {
    format!("eta={eta} lambda={lambda}")
}

/// `sum_{mu |>_{2i+1} lambda} kappa_{mu,lambda} f(mu)`.
fn refinement_sum(lambda: &IntegerPartition, f: impl Fn(&IntegerPartition) -> ExactInteger) -> ExactInteger {
    odd_refinements(lambda).iter().map(|(mu, k)| k * f(mu)).sum()
}

/// NTAEs summed over `U^eta_lambda` against the refinement sum.
pub fn check_gen(data: &DiagonalData, eta: &IntegerPartition, lambda: &IntegerPartition) -> IdentityReport {
    let lhs = data.ntae_total(eta, lambda);
    let rhs = refinement_sum(lambda, |mu| data.p(eta, mu));
    IdentityReport::new("gen", data.n, key(eta, lambda), to_rational(&lhs), to_rational(&rhs))
}

/// The same count with the roles of diagonal and vertical exchanged. The left
/// side is measured on reflections of `U^eta_lambda`, which fill `U^lambda_eta`.
pub fn check_gen_reflection(
    data: &DiagonalData,
    eta: &IntegerPartition,
    lambda: &IntegerPartition,
) -> IdentityReport {
    let lhs = data
        .reflected
        .get(&(eta.clone(), lambda.clone()))
        .cloned()
        .unwrap_or_default();
    let rhs = refinement_sum(eta, |mu| data.p(lambda, mu));
    IdentityReport::new("gen-reflection", data.n, key(eta, lambda), to_rational(&lhs), to_rational(&rhs))
}

pub fn check_gen_explicit(
    data: &DiagonalData,
    eta: &IntegerPartition,
    lambda: &IntegerPartition,
) -> IdentityReport {
    let coeff = data.n as i64 + 1 - lambda.len() as i64 - eta.len() as i64;
    let lhs = data.p(eta, lambda) * coeff;
    let rhs = refinement_sum(lambda, |mu| data.p(eta, mu)) + refinement_sum(eta, |mu| data.p(mu, lambda));
    IdentityReport::new("gen-explicit", data.n, key(eta, lambda), to_rational(&lhs), to_rational(&rhs))
}

/// Both sides of the long-diagonal recurrence, regardless of parity.
pub(crate) fn long_sides(data: &DiagonalData, lambda: &IntegerPartition) -> (ExactInteger, ExactInteger) {
    let n = data.n;
    let long = IntegerPartition::from_parts(vec![n]);
    let lhs = data.p(&long, lambda) * (n as i64 + 1 - lambda.len() as i64);
    let rhs = refinement_sum(lambda, |mu| data.p(&long, mu)) + factorial(n - 1) * lambda.z();
    (lhs, rhs)
}

/// Requires `l(lambda) = n (mod 2)`; other types belong to the parity audit.
pub fn check_long(data: &DiagonalData, lambda: &IntegerPartition) -> IdentityReport {
    let (lhs, rhs) = long_sides(data, lambda);
    IdentityReport::new("long", data.n, format!("lambda={lambda}"), to_rational(&lhs), to_rational(&rhs))
}

/// Every `(eta, lambda)` at this `n`. With a plane histogram, also checks that
/// the scaled fixed-diagonal counts equal the unscaled full enumeration.
pub fn check_plane(data: &DiagonalData, plane: Option<&PlaneSweep>) -> Vec<IdentityReport> {
    let n = data.n;
    let mut out = Vec::new();
    for eta in &data.types {
        for lambda in &data.types {
            out.push(check_gen(data, eta, lambda));
            out.push(check_gen_reflection(data, eta, lambda));
            out.push(check_gen_explicit(data, eta, lambda));
        }
    }
    for lambda in &data.types {
        if lambda.len() % 2 == n % 2 {
            out.push(check_long(data, lambda));
        }
        let total: ExactInteger = data.types.iter().map(|mu| data.p(lambda, mu)).sum();
        let expect = factorial(n - 1) * lambda.z();
        out.push(IdentityReport::new(
            "diagonal-total",
            n,
            format!("eta={lambda}"),
            to_rational(&total),
            to_rational(&expect),
        ));
    }
    if let Some(plane) = plane {
        let full = plane.type_counts();
        for eta in &data.types {
            for lambda in &data.types {
                for a in 0..=n {
                    let scaled = data.p_exc(eta, lambda, a);
                    let direct = full
                        .get(&(eta.clone(), lambda.clone(), a))
                        .map(|&c| BigInt::from(c))
                        .unwrap_or_else(BigInt::zero);
                    if scaled.is_zero() && direct.is_zero() {
                        continue;
                    }
                    out.push(IdentityReport::new(
                        "diagonal-scaling",
                        n,
                        format!("{} a={a}", key(eta, lambda)),
                        to_rational(&scaled),
                        to_rational(&direct),
                    ));
                }
            }
        }
    }
    out
}
