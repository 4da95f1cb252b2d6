//! `longcycle`: closed forms, brute-force tallies and identity checks for
//! products of long cycles.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use longcycle::closed_forms::{self, CountQuery, QueryResult};
use longcycle::composition::parse_usize_list;
use longcycle::exact::format_rational;
use longcycle::oracle::{
    sweep_factorizations, sweep_fixed_diagonal, sweep_pairs, OracleCache, OracleQuery, OracleResult,
    SweepKind, SweepOptions,
};
use longcycle::verifier::{self, PSource, Suite, VerifyConfig, VerifyOutcome};
use longcycle::{compositions, Composition, Error, IntegerPartition, Permutation};

use render::{Format, Grid};

#[derive(Parser, Debug)]
#[command(name = "longcycle", version, about = "Exact counts for products of long cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Output format; plain text when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cache directory (default: $LONGCYCLE_CACHE_DIR or <tmp>/longcycle-cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Sweep beyond the size guard.
    #[arg(long, global = true)]
    force: bool,
}

impl GlobalOpts {
    fn sweep(&self) -> SweepOptions {
        SweepOptions { threads: self.threads, force: self.force }
    }

    fn cache(&self) -> Option<OracleCache> {
        if self.no_cache {
            return None;
        }
        Some(OracleCache::new(self.cache_dir.clone().unwrap_or_else(OracleCache::default_dir)))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one closed form.
    Formula {
        #[arg(value_enum)]
        name: FormulaName,
        #[command(flatten)]
        params: Params,
    },
    /// Brute-force tallies.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        params: Params,
        /// Fixed diagonal for `fixed-diagonal`, in cycle or one-line form.
        #[arg(long)]
        diagonal: Option<Permutation>,
    },
    /// Check every identity against the oracle.
    Verify {
        /// Largest n for oracle-backed checks.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest n for the oracle-free algebra suite.
        #[arg(long, default_value_t = 12)]
        algebra_max_n: usize,
        /// Restrict to these suites: plane, separation, algebra, formulas (repeatable).
        #[arg(long, value_parser = parse_suite)]
        suite: Vec<Suite>,
        /// Source of separated-pair counts in the corollary checks.
        #[arg(long, default_value = "both", value_parser = parse_source)]
        source: PSource,
        /// Perturb the first report of this identity (harness self-test).
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Grids of closed-form values.
    Table {
        #[arg(value_enum)]
        name: TableName,
        /// A single n or a range `a..b` (inclusive).
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        /// Only compositions with this many parts.
        #[arg(long)]
        parts: Option<usize>,
    },
}

#[derive(Args, Debug, Clone, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Composition, e.g. `2,3,1`.
    #[arg(long)]
    alpha: Option<Composition>,
    /// Cycle counts per block, e.g. `1,2`.
    #[arg(long)]
    d: Option<CountList>,
    /// Partition, e.g. `3+2+1`.
    #[arg(long)]
    lambda: Option<IntegerPartition>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaName {
    ZagierStanley,
    Hultman,
    Boccara,
    EvenFactorization,
    PairsByType,
    SeparatingTotal,
    SeparatingByD,
    Chen,
    SepProb,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    /// All ordered pairs of n-cycles.
    Pairs,
    /// All n-cycles s against one diagonal.
    FixedDiagonal,
    /// Factorizations of one permutation of type `--lambda`.
    Factorizations,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableName {
    ZagierStanley,
    Hultman,
    Boccara,
    SeparatingTotal,
    Chen,
    SepProb,
}

/// A comma-separated list of counts, taken as one argument.
#[derive(Clone, Debug)]
struct CountList(Vec<usize>);

impl std::str::FromStr for CountList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_usize_list(s).map(CountList)
    }
}

fn parse_suite(s: &str) -> Result<Suite, Error> {
    s.parse()
}

fn parse_source(s: &str) -> Result<PSource, Error> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad n {t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("empty or invalid range {s:?}"));
    }
    Ok((lo, hi))
}

/// Process outcome, mapped onto the exit-code contract.
enum Failure {
    Verification(String),
    Usage(String),
    Domain(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Resource(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Domain(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(format!("{e}; pass --force to override")),
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure::Usage(format!("{what} needs --{flag}")))
}

fn formula_query(name: FormulaName, p: &Params) -> Result<CountQuery, Failure> {
    use FormulaName::*;
    let what = name.to_possible_value().expect("no skipped variants").get_name().to_string();
    Ok(match name {
        ZagierStanley => CountQuery::ByCycleCount { n: need(&p.n, "n", &what)?, k: need(&p.k, "k", &what)? },
        Hultman => CountQuery::ExpectedKCycles { n: need(&p.n, "n", &what)?, k: need(&p.k, "k", &what)? },
        Boccara => CountQuery::Boccara { n: need(&p.n, "n", &what)?, k: need(&p.k, "k", &what)? },
        EvenFactorization => CountQuery::FactorizationOfType { lambda: need(&p.lambda, "lambda", &what)? },
        PairsByType => CountQuery::ByCycleType { lambda: need(&p.lambda, "lambda", &what)? },
        SeparatingTotal => CountQuery::SeparatedTotal { alpha: need(&p.alpha, "alpha", &what)? },
        SeparatingByD => CountQuery::SeparatedByAlphaD {
            alpha: need(&p.alpha, "alpha", &what)?,
            d: need(&p.d, "d", &what)?.0,
        },
        Chen => CountQuery::SeparatedByCycleCount {
            n: need(&p.n, "n", &what)?,
            m: need(&p.m, "m", &what)?,
            k: need(&p.k, "k", &what)?,
        },
        SepProb => CountQuery::SeparationProbability { n: need(&p.n, "n", &what)?, m: need(&p.m, "m", &what)? },
    })
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn cmd_formula(name: FormulaName, params: &Params, format: Option<Format>) -> Result<String, Failure> {
    let result = formula_query(name, params)?.run()?;
    Ok(match format {
        None => format_rational(&result.value),
        Some(Format::Json) => json(&result),
        Some(f) => query_grid(&result).render(f),
    })
}

/// Columns: `kind`, the remaining query fields in name order, then `value`.
fn query_grid(result: &QueryResult) -> Grid {
    let serde_json::Value::Object(fields) = serde_json::to_value(&result.query).expect("serializable") else {
        unreachable!("queries serialize as objects")
    };
    let cell = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    };
    let mut keys: Vec<&String> = fields.keys().filter(|k| *k != "kind").collect();
    keys.sort();
    let mut headers = vec!["kind".to_string()];
    headers.extend(keys.iter().map(|k| k.to_string()));
    headers.push("value".into());
    let mut grid = Grid::new(headers);
    let mut row = vec![cell(&fields["kind"])];
    row.extend(keys.iter().map(|k| cell(&fields[*k])));
    row.push(format_rational(&result.value));
    grid.push(row);
    grid
}

fn cmd_oracle(
    kind: OracleKind,
    p: &Params,
    diagonal: Option<Permutation>,
    g: &GlobalOpts,
) -> Result<String, Failure> {
    let result = match kind {
        OracleKind::Pairs => {
            let n = need(&p.n, "n", "oracle pairs")?;
            let query = OracleQuery::pairs(n, p.alpha.clone());
            cached(g, &query, || sweep_pairs(n, p.alpha.as_ref(), g.sweep()))?
        }
        OracleKind::FixedDiagonal => {
            let d = match (diagonal, p.n) {
                (Some(d), _) => d,
                (None, Some(n)) => Permutation::standard_long_cycle(n),
                (None, None) => return Err(Failure::Usage("fixed-diagonal needs --diagonal or --n".into())),
            };
            let query = OracleQuery {
                kind: SweepKind::FixedDiagonal,
                n: d.n(),
                alpha: p.alpha.clone(),
                diagonal: Some(d.clone()),
            };
            cached(g, &query, || sweep_fixed_diagonal(&d, p.alpha.as_ref(), g.sweep()))?
        }
        OracleKind::Factorizations => {
            let lambda = need(&p.lambda, "lambda", "oracle factorizations")?;
            let target = Permutation::representative(&lambda);
            let query = OracleQuery {
                kind: SweepKind::Factorizations,
                n: target.n(),
                alpha: None,
                diagonal: Some(target.clone()),
            };
            cached(g, &query, || sweep_factorizations(&target, g.sweep()))?
        }
    };
    Ok(match g.format {
        Some(Format::Json) => json(&result),
        Some(Format::Csv) => oracle_grid(&result).to_csv(),
        _ => format!("{}\ntotal: {}\n", oracle_grid(&result).to_markdown(), result.total),
    })
}

fn cached(
    g: &GlobalOpts,
    query: &OracleQuery,
    compute: impl FnOnce() -> longcycle::Result<OracleResult>,
) -> Result<OracleResult, Failure> {
    Ok(match g.cache() {
        Some(cache) => cache.get_or_compute(query, compute)?,
        None => compute()?,
    })
}

fn oracle_grid(r: &OracleResult) -> Grid {
    let mut grid = Grid::new(["key", "value"]).titled(r.query.canonical());
    for (k, v) in r.table.iter() {
        grid.push([k.to_string(), v.to_string()]);
    }
    grid
}

fn cmd_verify(config: VerifyConfig, inject: Option<String>, format: Option<Format>) -> Result<String, Failure> {
    let mut outcome = verifier::run(&config)?;
    if let Some(id) = inject {
        let r = outcome
            .reports
            .iter_mut()
            .find(|r| r.identity == id)
            .ok_or_else(|| Failure::Usage(format!("no report for identity {id:?}")))?;
        r.rhs += longcycle::exact::ratio(1, 1);
        r.pass = false;
    }
    let text = match format {
        Some(Format::Json) => json(&outcome),
        Some(Format::Csv) => reports_grid(&outcome).to_csv(),
        Some(Format::Markdown) => summary_grid(&outcome).to_markdown(),
        None => verify_text(&outcome),
    };
    if outcome.all_pass() {
        return Ok(text);
    }
    println!("{text}");
    let mut msg = Vec::new();
    for r in outcome.failures() {
        msg.push(format!("FAILED {} n={} {}", r.identity, r.n, r.instance));
    }
    for a in outcome.audit_violations() {
        msg.push(format!("AUDIT {} n={} {}: true value {} is not zero", a.identity, a.n, a.instance, a.truth));
    }
    Err(Failure::Verification(msg.join("\n")))
}

fn summary_grid(outcome: &VerifyOutcome) -> Grid {
    let mut grid = Grid::new(["identity", "passed", "instances"]);
    for (id, (passed, total)) in outcome.summary() {
        grid.push([id, passed.to_string(), total.to_string()]);
    }
    grid
}

fn reports_grid(outcome: &VerifyOutcome) -> Grid {
    let mut grid = Grid::new(["identity", "n", "instance", "lhs", "rhs", "pass"]);
    for r in &outcome.reports {
        grid.push([
            r.identity.clone(),
            r.n.to_string(),
            r.instance.clone(),
            format_rational(&r.lhs),
            format_rational(&r.rhs),
            r.pass.to_string(),
        ]);
    }
    grid
}

fn verify_text(outcome: &VerifyOutcome) -> String {
    let mut out = summary_grid(outcome).to_markdown();
    let disagree = outcome.audit.iter().filter(|a| !a.formula_agrees()).count();
    out.push_str(&format!(
        "\nparity audit: {} instances outside their parity hypothesis, true value 0 in {}; unguarded formula nonzero in {}\n",
        outcome.audit.len(),
        outcome.audit.iter().filter(|a| a.truth_is_zero()).count(),
        disagree,
    ));
    let failed = outcome.failures().count();
    out.push_str(&if failed == 0 {
        format!("all {} checks pass\n", outcome.reports.len())
    } else {
        format!("{failed} of {} checks FAILED\n", outcome.reports.len())
    });
    out
}

fn cell(v: longcycle::Result<longcycle::ExactRational>) -> String {
    v.map(|x| format_rational(&x)).unwrap_or_default()
}

fn int_cell(v: longcycle::Result<longcycle::ExactInteger>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn cmd_table(name: TableName, (lo, hi): (usize, usize), parts: Option<usize>, format: Option<Format>) -> Result<String, Failure> {
    if format == Some(Format::Json) {
        return Err(Failure::Usage("table renders csv or markdown".into()));
    }
    let ks = |title: &str, width: usize| {
        let mut h = vec!["n".to_string()];
        h.extend((1..=width).map(|k| format!("k={k}")));
        Grid::new(h).titled(title)
    };
    let grid = match name {
        TableName::ZagierStanley => {
            let mut g = ks("Zagier-Stanley: n-cycles s with (1 2 ... n) s having k cycles", hi);
            for n in lo..=hi {
                let mut row = vec![n.to_string()];
                row.extend((1..=hi).map(|k| if k <= n { int_cell(closed_forms::zagier_stanley(n, k)) } else { String::new() }));
                g.push(row);
            }
            g
        }
        TableName::Hultman => {
            let mut g = ks("Hultman: expected number of k-cycles in a product of two random n-cycles", hi.saturating_sub(1));
            for n in lo..=hi {
                let mut row = vec![n.to_string()];
                row.extend((1..hi).map(|k| if k < n { cell(closed_forms::hultman_expected(n, k)) } else { String::new() }));
                g.push(row);
            }
            g
        }
        TableName::Boccara => {
            let mut g = ks("Boccara: factorizations of a fixed k + (n-k) permutation into two n-cycles", hi.saturating_sub(1));
            for n in (lo..=hi).filter(|n| n % 2 == 0) {
                let mut row = vec![n.to_string()];
                row.extend((1..hi).map(|k| if k < n { int_cell(closed_forms::boccara(n, k)) } else { String::new() }));
                g.push(row);
            }
            g
        }
        TableName::SeparatingTotal => {
            let mut g = Grid::new(["n", "alpha", "value"]).titled("Ordered pairs of n-cycles with alpha-separated product");
            for n in lo..=hi {
                for alpha in compositions(n).filter(|a| parts.is_none_or(|p| a.len() == p)) {
                    g.push([n.to_string(), alpha.to_string(), int_cell(closed_forms::separating_total(&alpha))]);
                }
            }
            g
        }
        TableName::Chen => {
            let mut g = Grid::new(["n", "m", "k", "value"]).titled("Pairs of n-cycles whose product has k cycles separating 1..m");
            for n in lo..=hi {
                for m in 1..=n {
                    for k in 1..=n {
                        g.push([n.to_string(), m.to_string(), k.to_string(), int_cell(closed_forms::chen_separated_count(n, m, k))]);
                    }
                }
            }
            g
        }
        TableName::SepProb => {
            let mut h = vec!["n".to_string()];
            h.extend((2..=hi).map(|m| format!("m={m}")));
            let mut g = Grid::new(h).titled("Probability that 1..m lie in distinct cycles of a product of two random n-cycles");
            for n in lo..=hi {
                let mut row = vec![n.to_string()];
                row.extend((2..=hi).map(|m| if m <= n { cell(closed_forms::separation_probability(n, m)) } else { String::new() }));
                g.push(row);
            }
            g
        }
    };
    Ok(grid.render(format.unwrap_or(Format::Markdown)))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let g = cli.global;
    match cli.command {
        Command::Formula { name, params } => cmd_formula(name, &params, g.format),
        Command::Oracle { kind, params, diagonal } => cmd_oracle(kind, &params, diagonal, &g),
        Command::Verify { max_n, algebra_max_n, suite, source, inject_fault } => {
            let config = VerifyConfig {
                max_n,
                algebra_max_n,
                suites: if suite.is_empty() { Suite::ALL.to_vec() } else { suite },
                source,
                sweep: g.sweep(),
                cache: g.cache(),
            };
            cmd_verify(config, inject_fault, g.format)
        }
        Command::Table { name, n, parts } => cmd_table(name, n, parts, g.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            // A closed pipe (`| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
