//! Acceptance gate. Prints one line per criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use longcycle::closed_forms::{
    boccara, hultman_expected, separating_by_d, separating_total, separation_probability,
};
use longcycle::exact::{int, ratio};
use longcycle::oracle::{
    count_factorizations, expected_k_cycles, pair_histogram, plane_histogram, sweep_fixed_diagonal,
    sweep_pairs, SweepOptions, TallyKey,
};
use longcycle::verifier::{self, check_formula_vs_oracle, parity_audit, PSource, Suite, VerifyConfig};
use longcycle::{long_cycle_iter, Composition, IntegerPartition, Permutation, PlanePermutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn formulas_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut single_threaded = 0.0;
    let mut checked = 0;
    let mut families = BTreeMap::new();
    for n in 1..=8 {
        if n == 8 {
            single_threaded = start.elapsed().as_secs_f64();
        }
        let opts = if n <= 7 { SweepOptions::single_threaded() } else { SweepOptions::default() };
        let sweep = pair_histogram(n, opts).map_err(|e| e.to_string())?;
        for r in check_formula_vs_oracle(&sweep).map_err(|e| e.to_string())? {
            ensure(r.pass, || format!("{r}"))?;
            *families.entry(r.identity).or_insert(0) += 1;
            checked += 1;
        }
    }
    let expected = [
        "boccara",
        "chen",
        "even-factorization",
        "hultman",
        "pairs-by-type",
        "separating-by-d",
        "separating-total",
        "separation-probability",
        "zagier-stanley",
    ];
    for f in expected {
        ensure(families.contains_key(f), || format!("no instances of {f}"))?;
    }
    ensure(single_threaded < 60.0, || format!("n <= 7 took {single_threaded:.1}s single-threaded"))?;
    Ok(format!(
        "{checked} instances over {} families, n <= 8; {single_threaded:.1}s single-threaded to n = 7, {:.1}s total",
        families.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn spot_values() -> Outcome {
    let opts = SweepOptions::default();
    let two_two: Composition = "2,2".parse().unwrap();

    let target = Permutation::representative(&IntegerPartition::from_parts(vec![2, 2]));
    let b = boccara(4, 2).map_err(|e| e.to_string())?;
    ensure(b == int(2) && count_factorizations(&target).unwrap() == b, || format!("boccara(4,2) = {b}"))?;

    let r = sweep_pairs(4, Some(&two_two), opts).map_err(|e| e.to_string())?;
    let total = separating_total(&two_two).unwrap();
    ensure(
        total == int(8) && total == int(2 * 2 * 2) && r.table.get(&TallyKey::Separated) == total,
        || format!("separating_total((2,2)) = {total}"),
    )?;
    let d11 = separating_by_d(&two_two, &[1, 1]).unwrap();
    ensure(d11 == int(2) && r.table.get(&TallyKey::DVector(vec![1, 1])) == d11, || {
        format!("separating_by_d((2,2),(1,1)) = {d11}")
    })?;

    for (n, m, want) in [(4, 2, ratio(11, 18)), (5, 2, ratio(1, 2))] {
        let h = pair_histogram(n, opts).unwrap();
        let hits: u64 = h.separated_prefix_counts(m).values().sum();
        let observed = ratio(hits, h.total());
        let formula = separation_probability(n, m).unwrap();
        ensure(formula == want && observed == want, || {
            format!("separation_probability({n},{m}) = {formula}, oracle {observed}")
        })?;
    }

    let h3 = pair_histogram(3, opts).unwrap();
    let e = hultman_expected(3, 1).unwrap();
    ensure(e == ratio(3, 2) && expected_k_cycles(&h3, 1) == e, || format!("hultman_expected(3,1) = {e}"))?;
    Ok("boccara(4,2)=2, sep_total((2,2))=8, sep_by_d((2,2),(1,1))=2, sep_prob(4,2)=11/18, sep_prob(5,2)=1/2, hultman(3,1)=3/2".into())
}

fn identity_suites() -> Outcome {
    let start = Instant::now();
    let config = VerifyConfig {
        max_n: 6,
        algebra_max_n: 12,
        suites: vec![Suite::Plane, Suite::Separation, Suite::Algebra],
        source: PSource::Both,
        ..VerifyConfig::default()
    };
    let outcome = verifier::run(&config).map_err(|e| e.to_string())?;
    if let Some(r) = outcome.failures().next() {
        return Err(format!("{r}"));
    }
    let summary = outcome.summary();
    let required = [
        "gen",
        "gen-reflection",
        "gen-explicit",
        "long",
        "gen-new",
        "gen-explicit-new",
        "long-new",
        "cor-exc",
        "lem-exc",
        "downarrow",
        "keylem",
        "recur",
        "thm-t-lambda",
        "cor-main1",
        "cor-main2",
        "baserecur",
    ];
    for id in required {
        ensure(summary.get(id).is_some_and(|&(_, t)| t > 0), || format!("no instances of {id}"))?;
    }
    let baserecur_top = outcome.reports.iter().filter(|r| r.identity == "baserecur").map(|r| r.n).max();
    ensure(baserecur_top == Some(12), || format!("baserecur reached n = {baserecur_top:?}"))?;
    Ok(format!(
        "{} reports over {} identities, 0 failures, {:.1}s",
        outcome.reports.len(),
        summary.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn plane_structure() -> Outcome {
    let mut plane_count = 0u64;
    let mut moves = 0u64;
    for n in 1..=6 {
        let cycles: Vec<Permutation> = long_cycle_iter(n).collect();
        for d in &cycles {
            for s in &cycles {
                let p = PlanePermutation::with_diagonal(s, d).map_err(|e| e.to_string())?;
                plane_count += 1;
                ensure(&p.diagonal() == d && p.diagonal_from_pairs() == *d, || {
                    format!("diagonal mismatch at {p}")
                })?;
                let r = p.reflect();
                let lhs = p.ne() + r.ne();
                let rhs = n + 1 - p.pi().cycle_count() - d.cycle_count();
                ensure(lhs == rhs, || format!("reflection fails at {p}: {lhs} vs {rhs}"))?;
                let c = p.pi().cycle_count() as i64;
                for i in 1..n {
                    for j in i..n {
                        for k in j + 1..n {
                            let h = p.transpose_blocks(i, j, k).map_err(|e| e.to_string())?;
                            moves += 1;
                            ensure(&h.diagonal() == d, || format!("h({i},{j},{k}) moves the diagonal of {p}"))?;
                            let delta = h.pi().cycle_count() as i64 - c;
                            ensure([-2, 0, 2].contains(&delta), || {
                                format!("h({i},{j},{k}) on {p} changes C(pi) by {delta}")
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{plane_count} plane permutations, {moves} transpositions"))
}

fn parity_discrepancies() -> Outcome {
    let config = VerifyConfig {
        max_n: 6,
        algebra_max_n: 0,
        suites: vec![Suite::Plane, Suite::Separation],
        source: PSource::Oracle,
        ..VerifyConfig::default()
    };
    let mut audit = verifier::run(&config).map_err(|e| e.to_string())?.audit;
    for n in 1..=6 {
        let sweep = pair_histogram(n, SweepOptions::default()).unwrap();
        audit.extend(parity_audit(&sweep).map_err(|e| e.to_string())?);
    }
    if let Some(a) = audit.iter().find(|a| !a.truth_is_zero()) {
        return Err(format!("{} {}: true value {} is not zero", a.identity, a.instance, a.truth));
    }
    let anchor = audit
        .iter()
        .find(|a| a.identity == "separating-by-d" && a.instance == "alpha=(2,2) d=[1, 2]")
        .ok_or("audit is missing alpha=(2,2) d=(1,2)")?;
    ensure(anchor.formula == ratio(4, 1), || format!("formula at (2,2),(1,2) gave {}", anchor.formula))?;
    let mut by_id: BTreeMap<&str, usize> = BTreeMap::new();
    for a in &audit {
        *by_id.entry(a.identity.as_str()).or_default() += 1;
    }
    let listing: Vec<String> = by_id.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Ok(format!(
        "{} wrong-parity instances, all true counts 0; (2,2),(1,2) formula 4; {}",
        audit.len(),
        listing.join(" ")
    ))
}

fn determinism() -> Outcome {
    let one = SweepOptions { threads: Some(1), force: false };
    let many = SweepOptions { threads: Some(4), force: false };
    for n in 1..=6 {
        let json = |o| -> String {
            let mut parts = vec![serde_json::to_string(&pair_histogram(n, o).unwrap().to_result()).unwrap()];
            parts.push(serde_json::to_string(&plane_histogram(n, o).unwrap().to_result()).unwrap());
            for alpha in longcycle::compositions(n) {
                parts.push(serde_json::to_string(&sweep_pairs(n, Some(&alpha), o).unwrap()).unwrap());
            }
            let d = Permutation::standard_long_cycle(n);
            let alpha = Composition::single(n).unwrap();
            parts.push(serde_json::to_string(&sweep_fixed_diagonal(&d, Some(&alpha), o).unwrap()).unwrap());
            parts.join("\n")
        };
        ensure(json(one) == json(many), || format!("1 vs 4 workers differ at n = {n}"))?;
    }
    Ok("byte-identical JSON for 1 and 4 workers, n <= 6".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("formula-vs-oracle", formulas_vs_oracle),
        ("spot-values", spot_values),
        ("identity-suites", identity_suites),
        ("plane-structure", plane_structure),
        ("parity-audit", parity_discrepancies),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
