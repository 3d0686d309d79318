//! Check records, suite reports and their renderings.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use scatbench_core::Error as CoreError;

use crate::document::Config;

/// Where the expected value of a check comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// forced by the definitions
    ByDefinition,
    /// an independent computation
    Oracle,
    /// an instance of a proved statement
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// a closure bound or enumeration cap stopped the computation
    ResourceExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict != Verdict::Pass)
    }
}

/// What a check computes: expected and computed renderings, and whether
/// they agree.
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl Outcome {
    pub fn compare<T: PartialEq + std::fmt::Debug>(expected: T, computed: T) -> Self {
        Outcome { expected: format!("{expected:?}"), computed: format!("{computed:?}"), passed: expected == computed }
    }

    pub fn holds(claim: &str, ok: bool, detail: String) -> Self {
        Outcome { expected: claim.to_string(), computed: detail, passed: ok }
    }
}

type Run = Box<dyn Fn(&Config) -> scatbench_core::Result<Outcome> + Send + Sync>;

pub struct CheckSpec {
    pub name: String,
    pub inputs: String,
    pub provenance: Provenance,
    pub run: Run,
}

impl CheckSpec {
    pub fn new(
        name: impl Into<String>,
        inputs: impl Into<String>,
        provenance: Provenance,
        run: impl Fn(&Config) -> scatbench_core::Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        CheckSpec { name: name.into(), inputs: inputs.into(), provenance, run: Box::new(run) }
    }
}

/// Runs the checks in parallel and orders the records by name.
pub fn run_checks(suite: &str, specs: Vec<CheckSpec>, config: &Config) -> SuiteReport {
    let mut checks: Vec<Check> = specs
        .into_par_iter()
        .map(|s| {
            let start = Instant::now();
            let result = (s.run)(config);
            let runtime_ms = Some(start.elapsed().as_millis() as u64);
            let (expected, computed, verdict) = match result {
                Ok(o) => (o.expected, o.computed, if o.passed { Verdict::Pass } else { Verdict::Fail }),
                Err(e @ (CoreError::BoundExceeded { .. } | CoreError::CapExceeded { .. })) => {
                    ("completion".to_string(), e.to_string(), Verdict::ResourceExceeded)
                }
                Err(e) => ("completion".to_string(), format!("error: {e}"), Verdict::Fail),
            };
            Check { name: s.name, inputs: s.inputs, expected, computed, provenance: s.provenance, verdict, runtime_ms }
        })
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().all(|c| c.verdict == Verdict::Pass);
    SuiteReport { suite: suite.to_string(), passed, checks }
}

/// JSON rendering. Without `timings` the output is identical across runs.
pub fn render_json(reports: &[SuiteReport], timings: bool) -> String {
    let strip = |r: &SuiteReport| {
        let mut r = r.clone();
        if !timings {
            r.checks.iter_mut().for_each(|c| c.runtime_ms = None);
        }
        r
    };
    let reports: Vec<SuiteReport> = reports.iter().map(strip).collect();
    let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn render_text(reports: &[SuiteReport], timings: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let failed = r.failures().count();
        let _ = writeln!(
            out,
            "{} {} ({} checks, {} failed)",
            if r.passed { "PASS" } else { "FAIL" },
            r.suite,
            r.checks.len(),
            failed
        );
        for c in &r.checks {
            let tag = match c.verdict {
                Verdict::Pass => "ok  ",
                Verdict::Fail => "FAIL",
                Verdict::ResourceExceeded => "BND ",
            };
            let time = match (timings, c.runtime_ms) {
                (true, Some(ms)) => format!(" [{ms} ms]"),
                _ => String::new(),
            };
            let prov = serde_json::to_value(c.provenance).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            let _ = writeln!(out, "  {tag} {} ({prov}){time}", c.name);
            if c.verdict != Verdict::Pass {
                let _ = writeln!(out, "       inputs:   {}", c.inputs);
                let _ = writeln!(out, "       expected: {}", c.expected);
                let _ = writeln!(out, "       computed: {}", c.computed);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_become_verdicts_and_records_sort() {
        let specs = vec![
            CheckSpec::new("b", "", Provenance::Oracle, |_| Ok(Outcome::compare(1, 2))),
            CheckSpec::new("a", "", Provenance::Theorem, |_| Ok(Outcome::compare(1, 1))),
            CheckSpec::new("d", "", Provenance::Theorem, |_| Err(CoreError::CapExceeded { cap: 3 })),
            CheckSpec::new("c", "", Provenance::Theorem, |_| Err(CoreError::Invalid("no".into()))),
        ];
        let r = run_checks("s", specs, &Config::default());
        let got: Vec<_> = r.checks.iter().map(|c| (c.name.as_str(), c.verdict.clone())).collect();
        assert_eq!(got, [("a", Verdict::Pass), ("b", Verdict::Fail), ("c", Verdict::Fail), ("d", Verdict::ResourceExceeded)]);
        assert!(!r.passed);
        assert!(!render_json(&[r], false).contains("runtime_ms"));
    }
}
