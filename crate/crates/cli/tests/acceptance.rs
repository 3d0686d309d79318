//! The twelve acceptance criteria, one PASS/FAIL line each. Every check in
//! a suite must pass exactly; the runtime limits are part of the criteria.

use std::time::{Duration, Instant};

use scatbench::document::Config;
use scatbench::{run_suite, SuiteReport, Verdict};

struct Criterion {
    number: usize,
    suite: &'static str,
    limit: Duration,
    /// extra conditions on the report beyond every check passing
    coverage: fn(&SuiteReport) -> Result<(), String>,
}

fn count(r: &SuiteReport, prefix: &str) -> usize {
    r.checks.iter().filter(|c| c.name.starts_with(prefix)).count()
}

fn at_least(r: &SuiteReport, prefix: &str, n: usize) -> Result<(), String> {
    let k = count(r, prefix);
    if k >= n { Ok(()) } else { Err(format!("{k} checks under {prefix}, need {n}")) }
}

fn has(r: &SuiteReport, names: &[&str]) -> Result<(), String> {
    match names.iter().find(|n| !r.checks.iter().any(|c| c.name == **n)) {
        Some(n) => Err(format!("missing check {n}")),
        None => Ok(()),
    }
}

fn every_pointed(r: &SuiteReport) -> Result<(), String> {
    let names: Vec<String> = scatbench::corpus::pointed_simplicial_categories().iter().map(|(n, _)| format!("mapping-space/s0/{n}")).collect();
    has(r, &names.iter().map(String::as_str).collect::<Vec<_>>())
}

fn criteria() -> Vec<Criterion> {
    let min = |m: u64| Duration::from_secs(60 * m);
    vec![
        Criterion { number: 1, suite: "identities", limit: min(1), coverage: |r| {
            at_least(r, "sset/", 15).and(at_least(r, "biset/", 3)).and(at_least(r, "category/", 13)).and(at_least(r, "scat/", 9))
        } },
        Criterion {
            number: 2,
            suite: "c-sigma-contractibility",
            limit: min(1),
            coverage: |r| at_least(r, "c-sigma/n1/", 2).and(at_least(r, "c-sigma/n2/", 6)).and(at_least(r, "c-sigma/n3/", 14)),
        },
        Criterion {
            number: 3,
            suite: "acyclic-cofibrations",
            limit: min(2),
            coverage: |r| {
                has(r, &["acyclic-cofibrations/horn-1-0", "acyclic-cofibrations/horn-1-1", "acyclic-cofibrations/horn-2-0", "acyclic-cofibrations/horn-2-1", "acyclic-cofibrations/horn-2-2"])
            },
        },
        Criterion { number: 4, suite: "niso-pushout", limit: min(2), coverage: |r| at_least(r, "niso-pushout/", 10) },
        Criterion {
            number: 5,
            suite: "diag-wbar",
            limit: min(2),
            coverage: |r| {
                has(r, &["diag-wbar/dec-delta-2", "diag-wbar/dec-boundary-2", "diag-wbar/dstar-boundary-2", "diag-wbar/box-delta-1-delta-1"])
                    .and(at_least(r, "diag-wbar/nerve-iso-levelwise/", scatbench::corpus::simplicial_categories().len()))
            },
        },
        Criterion {
            number: 6,
            suite: "unit",
            limit: min(2),
            coverage: |r| {
                has(r, &["unit/homology/delta-0", "unit/homology/delta-1", "unit/homology/boundary-2", "unit/homology/sphere-1"]).and(at_least(r, "unit/hom-counts/dec-wbar/", 3))
            },
        },
        Criterion { number: 7, suite: "effective-mono", limit: Duration::from_secs(30), coverage: |r| at_least(r, "effective-mono/", 5) },
        Criterion {
            number: 8,
            suite: "suspension-ladder",
            limit: min(3),
            coverage: |r| {
                has(r, &["suspension-ladder/sigma-0-s0", "suspension-ladder/sigma-1-s0", "suspension-ladder/sigma-2-s0"]).and(at_least(r, "suspension-ladder/smash-s0/", 5))
            },
        },
        Criterion { number: 9, suite: "mapping-space", limit: min(1), coverage: every_pointed },
        Criterion { number: 10, suite: "k-theory", limit: min(1), coverage: |r| has(r, &["k-theory/cyclic-2", "k-theory/s0"]) },
        Criterion { number: 11, suite: "omega-probe", limit: min(1), coverage: |r| has(r, &["omega-probe/sigma-infinity-s0", "omega-probe/terminal"]) },
        Criterion {
            number: 12,
            suite: "directed-colimit",
            limit: min(1),
            coverage: |r| {
                has(r, &["directed-colimit/constant-chaotic/pi-dstar-delta-0", "directed-colimit/constant-chaotic/pi-dstar-delta-1", "directed-colimit/constant-chaotic/pi-dstar-delta-2"])
            },
        },
    ]
}

fn judge(c: &Criterion, config: &Config) -> (bool, String) {
    let start = Instant::now();
    let report = run_suite(c.suite, config).expect("known suite");
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    for check in report.checks.iter().filter(|k| k.verdict != Verdict::Pass) {
        problems.push(format!("{} {:?}: expected {} computed {}", check.name, check.verdict, check.expected, check.computed));
    }
    if let Err(e) = (c.coverage)(&report) {
        problems.push(e);
    }
    if elapsed > c.limit {
        problems.push(format!("took {elapsed:?}, limit {:?}", c.limit));
    }
    let detail = format!("{} checks, {} ms", report.checks.len(), elapsed.as_millis());
    if problems.is_empty() { (true, detail) } else { (false, format!("{detail}; {}", problems.join("; "))) }
}

#[test]
fn acceptance() {
    let config = Config::default();
    let mut failed = Vec::new();
    for c in criteria() {
        let (ok, detail) = judge(&c, &config);
        println!("{} {:>2} {} ({detail})", if ok { "PASS" } else { "FAIL" }, c.number, c.suite);
        if !ok {
            failed.push(c.number);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
