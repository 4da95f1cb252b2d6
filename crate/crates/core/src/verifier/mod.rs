//! Machine checks of the counting identities.
//!
//! Every check evaluates both sides of one identity at one instance in exact
//! arithmetic and records them in an [`IdentityReport`]. Counts come from the
//! brute-force oracle; closed forms enter only where an identity is about them.
//! Instances whose parity rules out any solution are routed to the
//! [`parity_audit`] instead of the pass/fail reports.

mod audit;
mod formulas;
mod diagonal;
mod separation;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::oracle::{
    pair_histogram, plane_histogram, OracleCache, OracleQuery, PairSweep, PlaneSweep, SweepKind,
    SweepOptions,
};

pub use audit::{parity_audit, AuditEntry};
pub use formulas::check_formula_vs_oracle;
pub use diagonal::{check_gen, check_gen_explicit, check_gen_reflection, check_long, check_plane, DiagonalData};
pub use separation::{
    check_baserecur, check_cor_main, check_separation, t_lambda, PairData, PlaneData,
};

/// Both sides of one identity at one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub n: usize,
    pub instance: String,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub lhs: ExactRational,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub rhs: ExactRational,
    pub pass: bool,
}

impl IdentityReport {
    pub fn new(identity: &str, n: usize, instance: String, lhs: ExactRational, rhs: ExactRational) -> Self {
        let pass = lhs == rhs;
        IdentityReport { identity: identity.to_string(), n, instance, lhs, rhs, pass }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} n={} {}: {} vs {}",
            if self.pass { "ok" } else { "FAIL" },
            self.identity,
            self.n,
            self.instance,
            crate::exact::format_rational(&self.lhs),
            crate::exact::format_rational(&self.rhs),
        )
    }
}

/// Where `p^{(n)}_{alpha,d}` values come from in checks that accept either.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PSource {
    Oracle,
    ClosedForm,
    /// Oracle and closed form, one report each.
    #[default]
    Both,
}

impl FromStr for PSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(PSource::Oracle),
            "closed-form" | "formula" => Ok(PSource::ClosedForm),
            "both" => Ok(PSource::Both),
            _ => Err(Error::Parse(format!("unknown p-value source {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Plane-permutation recurrences for cycle types.
    Plane,
    /// Separated-pair recurrences, the `T_Lambda` theorem and its corollaries.
    Separation,
    /// The oracle-free recurrence on `z_Lambda`.
    Algebra,
    /// Closed forms against the oracle.
    Formulas,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Plane, Suite::Separation, Suite::Algebra, Suite::Formulas];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Plane => "plane",
            Suite::Separation => "separation",
            Suite::Algebra => "algebra",
            Suite::Formulas => "formulas",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest `n` for oracle-backed checks.
    pub max_n: usize,
    /// Largest `n` for the algebra suite (instances over `alpha |= n+1`).
    pub algebra_max_n: usize,
    pub suites: Vec<Suite>,
    pub source: PSource,
    pub sweep: SweepOptions,
    pub cache: Option<OracleCache>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 6,
            algebra_max_n: 12,
            suites: Suite::ALL.to_vec(),
            source: PSource::Both,
            sweep: SweepOptions::default(),
            cache: None,
        }
    }
}

impl VerifyConfig {
    fn wants(&self, suite: Suite) -> bool {
        self.suites.contains(&suite)
    }

    pub(crate) fn pair_sweep(&self, n: usize) -> Result<PairSweep> {
        let Some(cache) = &self.cache else {
            return pair_histogram(n, self.sweep);
        };
        let q = OracleQuery { kind: SweepKind::PairHistogram, n, alpha: None, diagonal: None };
        let r = cache.get_or_compute(&q, || Ok(pair_histogram(n, self.sweep)?.to_result()))?;
        PairSweep::from_result(&r)
    }

    pub(crate) fn plane_sweep(&self, n: usize) -> Result<PlaneSweep> {
        let Some(cache) = &self.cache else {
            return plane_histogram(n, self.sweep);
        };
        let q = OracleQuery { kind: SweepKind::PlaneHistogram, n, alpha: None, diagonal: None };
        let r = cache.get_or_compute(&q, || Ok(plane_histogram(n, self.sweep)?.to_result()))?;
        PlaneSweep::from_result(&r)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub reports: Vec<IdentityReport>,
    pub audit: Vec<AuditEntry>,
}

/// Per-identity tally: `(passed, total)`.
pub type Summary = BTreeMap<String, (usize, usize)>;

impl VerifyOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    /// Audit entries whose true count is not zero, which would contradict the
    /// parity argument.
    pub fn audit_violations(&self) -> impl Iterator<Item = &AuditEntry> {
        self.audit.iter().filter(|a| !a.truth_is_zero())
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none() && self.audit_violations().next().is_none()
    }

    pub fn summary(&self) -> Summary {
        let mut out = Summary::new();
        for r in &self.reports {
            let e = out.entry(r.identity.clone()).or_insert((0, 0));
            e.0 += usize::from(r.pass);
            e.1 += 1;
        }
        out
    }

    fn sort(&mut self) {
        self.reports
            .sort_by(|a, b| (&a.identity, a.n, &a.instance).cmp(&(&b.identity, b.n, &b.instance)));
        self.audit
            .sort_by(|a, b| (&a.identity, a.n, &a.instance).cmp(&(&b.identity, b.n, &b.instance)));
    }
}

/// Runs the selected suites for every `n` in range.
pub fn run(config: &VerifyConfig) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    let oracle_ns: Vec<usize> = (1..=config.max_n).collect();
    if config.max_n > crate::oracle::DEFAULT_GUARD && !config.sweep.force {
        return Err(Error::ResourceLimit { n: config.max_n, limit: crate::oracle::DEFAULT_GUARD });
    }
    if config.wants(Suite::Plane) {
        for &n in &oracle_ns {
            let data = DiagonalData::from_oracle(n, config.sweep)?;
            let plane = config.plane_sweep(n)?;
            out.reports.extend(check_plane(&data, Some(&plane)));
            out.audit.extend(audit::plane_audit(&data));
        }
    }
    if config.wants(Suite::Separation) {
        for &n in &oracle_ns {
            let plane = PlaneData::new(&config.plane_sweep(n)?);
            let pairs = PairData::new(&config.pair_sweep(n)?);
            let (reports, audit) = check_separation(&plane, &pairs);
            out.reports.extend(reports);
            out.audit.extend(audit);
            let (reports, audit) = separation::cor_main_suite(n, Some(&pairs), config.source)?;
            out.reports.extend(reports);
            out.audit.extend(audit);
        }
    }
    if config.wants(Suite::Algebra) {
        let reports: Vec<Vec<IdentityReport>> = (1..=config.algebra_max_n)
            .into_par_iter()
            .map(check_baserecur)
            .collect();
        out.reports.extend(reports.into_iter().flatten());
    }
    if config.wants(Suite::Formulas) {
        for &n in &oracle_ns {
            let pairs = config.pair_sweep(n)?;
            out.reports.extend(check_formula_vs_oracle(&pairs)?);
            out.audit.extend(parity_audit(&pairs)?);
        }
    }
    out.sort();
    Ok(out)
}
