//! Command-line driver. Exit codes: 0 pass, 1 check failure, 2 input error,
//! 3 resource bound exceeded.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use scatbench_core::homotopy::{abelianization, edge_path_group, homology_all, pi0, AbelianGroup};
use scatbench_core::scat::diag_nerve_iso;
use scatbench_core::spectra::{k_groups, mapping_space_into};
use scatbench_core::sset::{d_star, dec, diag, wbar, SimplicialSet};
use scatbench_core::Error as CoreError;

use crate::document::{parse_document, serialize_document, Config, Construction, Entity, Rho, WorkbenchDocument};
use crate::report::{render_json, render_text, SuiteReport};
use crate::suites::{run_suite, SUITES};
use crate::workspace::{
    biset_tables, category_table, scat_tables, spectrum_structure_tables, sset_tables, LoadError, Value, Workspace,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const LAST_REPORT: &str = ".scatbench/last-report.json";

#[derive(Parser, Debug)]
#[command(name = "scatbench", version, about = "Truncated simplicial categories: constructions, invariants and verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct an entity and print it as a document in table form.
    Build {
        /// entity name in --doc, a JSON construction, or shorthand like `delta:2`
        spec: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Compute a construction or an invariant of an entity.
    Compute {
        what: Computation,
        spec: String,
        /// target of `mapspace`
        #[arg(long)]
        target: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run verification suites.
    Verify {
        /// suite names; all suites when empty
        suites: Vec<String>,
        /// every suite, ignoring the document's list
        #[arg(long, conflicts_with = "suites")]
        all: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Render a saved report (by default the last one).
    Report {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args, Debug, Default)]
pub struct Opts {
    #[arg(long)]
    pub doc: Option<PathBuf>,
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long)]
    pub closure_bound: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_enum)]
    pub rho: Option<Rho>,
    #[arg(long)]
    pub pointed: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Computation {
    Nerve,
    Diag,
    Wbar,
    Dec,
    Dstar,
    Homology,
    Pi0,
    Pi1,
    Ktheory,
    Mapspace,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure { code: if e.is_resource() { EXIT_RESOURCE } else { EXIT_INPUT }, message: e.to_string() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::BoundExceeded { .. } | CoreError::CapExceeded { .. } => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Runs a parsed command; output goes to stdout or `--out`.
pub fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Build { spec, opts } => {
            let (config, value, name) = resolve(&spec, &opts)?;
            let doc = WorkbenchDocument { config, ..as_document(&name, &value) };
            emit(&opts, &serialize_document(&doc))?;
            Ok(EXIT_PASS)
        }
        Command::Compute { what, spec, target, opts } => {
            let (config, value, name) = resolve(&spec, &opts)?;
            let out = compute(what, &name, &value, target.as_deref(), &opts, &config)?;
            emit(&opts, &out)?;
            Ok(EXIT_PASS)
        }
        Command::Verify { suites, all, list, format, timings, opts } => {
            if list {
                emit(&opts, &(SUITES.join("\n") + "\n"))?;
                return Ok(EXIT_PASS);
            }
            let doc = match &opts.doc {
                Some(p) => Some(read_document(p)?),
                None => None,
            };
            if let Some(d) = &doc {
                Workspace::load(d)?;
            }
            let config = configure(doc.as_ref().map(|d| d.config).unwrap_or_default(), &opts);
            let names: Vec<String> = if !suites.is_empty() {
                suites
            } else if let Some(d) = doc.as_ref().filter(|d| !all && !d.suites.is_empty()) {
                d.suites.clone()
            } else {
                SUITES.iter().map(|s| s.to_string()).collect()
            };
            let reports = names
                .iter()
                .map(|n| run_suite(n, &config).map_err(|e| Failure::input(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            save_last(&reports);
            let text = match format {
                Format::Text => render_text(&reports, timings),
                Format::Json => render_json(&reports, timings),
            };
            emit(&opts, &text)?;
            Ok(verdict_code(&reports))
        }
        Command::Report { file, format, timings } => {
            let path = file.unwrap_or_else(|| PathBuf::from(LAST_REPORT));
            let text = std::fs::read_to_string(&path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let reports: Vec<SuiteReport> =
                serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let out = match format {
                Format::Text => render_text(&reports, timings),
                Format::Json => render_json(&reports, timings),
            };
            print!("{out}");
            Ok(verdict_code(&reports))
        }
    }
}

fn verdict_code(reports: &[SuiteReport]) -> i32 {
    use crate::report::Verdict;
    let all = || reports.iter().flat_map(|r| r.checks.iter());
    if all().any(|c| c.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else if all().any(|c| c.verdict == Verdict::ResourceExceeded) {
        EXIT_RESOURCE
    } else {
        EXIT_PASS
    }
}

fn save_last(reports: &[SuiteReport]) {
    let path = Path::new(LAST_REPORT);
    let written = path
        .parent()
        .map_or(Ok(()), std::fs::create_dir_all)
        .and_then(|_| std::fs::write(path, render_json(reports, true)));
    if let Err(e) = written {
        eprintln!("warning: could not save {LAST_REPORT}: {e}");
    }
}

fn emit(opts: &Opts, text: &str) -> Result<(), Failure> {
    match &opts.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn read_document(path: &Path) -> Result<WorkbenchDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn configure(mut c: Config, o: &Opts) -> Config {
    if let Some(b) = o.bound {
        c.bound = b;
    }
    if let Some(b) = o.closure_bound {
        c.closure_bound = b;
    }
    if let Some(b) = o.cap {
        c.cap = b;
    }
    if let Some(d) = o.degree {
        c.degree = d;
    }
    if let Some(r) = o.rho {
        c.rho = r;
    }
    c
}

/// Shorthand constructions: `delta:N`, `boundary:N`, `horn:N:I`,
/// `sphere:N`, `point`, `two-point`, `discrete:M`, `chaotic:N`,
/// `cyclic:N`, `ordinal:N`, `s0`, `terminal`.
pub fn parse_shorthand(s: &str, bound: usize) -> Option<Construction> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |k: usize| parts.get(k).and_then(|p| p.parse::<usize>().ok());
    Some(match (parts[0], parts.len()) {
        ("delta", 2) => Construction::Delta { n: num(1)?, bound },
        ("boundary", 2) => Construction::Boundary { n: num(1)?, bound },
        ("horn", 3) => Construction::Horn { n: num(1)?, i: num(2)?, bound },
        ("sphere", 2) => Construction::Sphere { n: num(1)?, bound },
        ("point", 1) => Construction::Point { bound },
        ("two-point", 1) => Construction::TwoPoint { bound },
        ("discrete", 2) => Construction::DiscreteSet { points: num(1)?, bound },
        ("chaotic", 2) => Construction::Chaotic { objects: num(1)? },
        ("cyclic", 2) => Construction::CyclicGroup { order: num(1)? },
        ("ordinal", 2) => Construction::Ordinal { n: num(1)? },
        ("s0", 1) => Construction::S0 { bound },
        ("terminal", 1) => Construction::Terminal { bound },
        _ => return None,
    })
}

fn resolve(spec: &str, opts: &Opts) -> Result<(Config, Value, String), Failure> {
    let (config, value, name) = if let Some(path) = &opts.doc {
        let doc = read_document(path)?;
        let config = configure(doc.config, opts);
        let ws = Workspace::load(&WorkbenchDocument { config, ..doc })?;
        let v = ws.get(spec).cloned().ok_or_else(|| Failure::input(format!("no entity named `{spec}`")))?;
        (config, v, spec.to_string())
    } else {
        let config = configure(Config::default(), opts);
        let c = if spec.trim_start().starts_with('{') {
            serde_json::from_str::<Construction>(spec).map_err(|e| Failure::input(format!("construction: {e}")))?
        } else {
            parse_shorthand(spec, config.bound).ok_or_else(|| Failure::input(format!("cannot read `{spec}`; pass --doc for named entities")))?
        };
        (config, Workspace::build_standalone(&c, config)?, "input".to_string())
    };
    let value = if opts.pointed { point_at_zero(value)? } else { value };
    Ok((config, value, name))
}

fn point_at_zero(v: Value) -> Result<Value, Failure> {
    Ok(match v {
        Value::Sset(x) if !x.is_pointed() => Value::Sset(Arc::new((*x).clone().with_basepoint(Some(0))?)),
        Value::Scat(c) if !c.is_pointed() => Value::Scat(Arc::new((*c).clone().pointed_at(0)?)),
        other => other,
    })
}

/// The value as a one-entity document in table form.
pub fn as_document(name: &str, v: &Value) -> WorkbenchDocument {
    let mut entities = Vec::new();
    let construction = match v {
        Value::Sset(x) => Construction::SimplicialTables(sset_tables(x)),
        Value::Biset(b) => Construction::BisimplicialTables(biset_tables(b)),
        Value::Category(c) => Construction::CategoryTable(category_table(c)),
        Value::Scat(c) => Construction::ScatTables(scat_tables(c)),
        Value::Spectrum(s) => {
            let levels = (0..s.len()).map(|n| format!("{name}.level{n}")).collect::<Vec<_>>();
            for (n, l) in levels.iter().enumerate() {
                entities.push(Entity { name: l.clone(), construction: Construction::ScatTables(scat_tables(s.level(n))) });
            }
            Construction::Spectrum { levels, structure: spectrum_structure_tables(s) }
        }
    };
    entities.push(Entity { name: name.to_string(), construction });
    WorkbenchDocument::new(entities)
}

fn group_json(g: &AbelianGroup) -> Json {
    json!({ "free_rank": g.free_rank, "torsion": g.torsion.iter().map(|t| t.to_string().parse::<u64>().map_or_else(|_| json!(t.to_string()), |v| json!(v))).collect::<Vec<_>>() })
}

fn homology_json(x: &SimplicialSet) -> Result<Json, Failure> {
    let h = homology_all(x)?;
    Ok(json!({
        "certified_through": x.bound().saturating_sub(1),
        "homology": h.iter().take(x.bound().max(1)).enumerate().map(|(i, g)| { let mut v = group_json(g); v["degree"] = json!(i); v }).collect::<Vec<_>>(),
    }))
}

/// The simplicial set an invariant is computed on: the set itself, the
/// nerve of a category, or `diag N•iso` of a simplicial category.
fn underlying(v: &Value, config: &Config) -> Result<SimplicialSet, Failure> {
    Ok(match v {
        Value::Sset(x) => (**x).clone(),
        Value::Category(c) => scatbench_core::cat::nerve(c, config.bound)?,
        Value::Scat(c) => diag_nerve_iso(c)?,
        Value::Biset(b) => diag(b)?,
        Value::Spectrum(_) => return Err(Failure::input("invariants of spectra are computed per level")),
    })
}

fn compute(what: Computation, name: &str, v: &Value, target: Option<&str>, opts: &Opts, config: &Config) -> Result<String, Failure> {
    let doc = |v: Value| serialize_document(&as_document(name, &v));
    let json_out = |j: Json| {
        let mut s = serde_json::to_string_pretty(&j).expect("json");
        s.push('\n');
        s
    };
    let sset_arg = || match v {
        Value::Sset(x) => Ok(x.clone()),
        other => Err(Failure::input(format!("expected a simplicial set, got a {}", other.kind()))),
    };
    let biset_arg = || match v {
        Value::Biset(b) => Ok(b.clone()),
        other => Err(Failure::input(format!("expected a bisimplicial set, got a {}", other.kind()))),
    };
    Ok(match what {
        Computation::Nerve => match v {
            Value::Category(c) => doc(Value::Sset(Arc::new(scatbench_core::cat::nerve(c, config.bound)?))),
            Value::Scat(c) => doc(Value::Biset(Arc::new(scatbench_core::scat::nerve_iso_levelwise(c, c.bound())?))),
            other => return Err(Failure::input(format!("no nerve of a {}", other.kind()))),
        },
        Computation::Diag => match v {
            Value::Scat(c) => doc(Value::Sset(Arc::new(diag_nerve_iso(c)?))),
            _ => doc(Value::Sset(Arc::new(diag(&*biset_arg()?)?))),
        },
        Computation::Wbar => match v {
            Value::Scat(c) => doc(Value::Sset(Arc::new(scatbench_core::scat::wbar_nerve_iso(c)?))),
            _ => doc(Value::Sset(Arc::new(wbar(&*biset_arg()?)?))),
        },
        Computation::Dec => doc(Value::Biset(Arc::new(dec(&*sset_arg()?)?))),
        Computation::Dstar => doc(Value::Biset(Arc::new(d_star(&*sset_arg()?)?))),
        Computation::Homology => json_out(homology_json(&underlying(v, config)?)?),
        Computation::Pi0 => {
            let c = pi0(&underlying(v, config)?);
            json_out(json!({ "count": c.count, "component_of_vertex": c.of_vertex }))
        }
        Computation::Pi1 => {
            let x = underlying(v, config)?;
            let b = x.basepoint().unwrap_or(0);
            let g = edge_path_group(&x, b)?;
            json_out(json!({
                "basepoint": b,
                "presentation": g.to_string(),
                "generators": g.generators,
                "relators": g.relators,
                "abelianization": group_json(&abelianization(&g)),
                "order": g.bounded_order(config.closure_bound)?,
            }))
        }
        Computation::Ktheory => {
            let c = match v {
                Value::Scat(c) => c.clone(),
                other => return Err(Failure::input(format!("K-groups need a pointed simplicial category, got a {}", other.kind()))),
            };
            let r = k_groups(&c, config.degree, config.closure_bound)?;
            json_out(json!({
                "k0": { "elements": r.components, "basepoint_class": r.basepoint_class },
                "k1": { "presentation": r.k1.to_string(), "abelianization": group_json(&r.k1_abelian), "order": r.k1_order },
                "h1_of_basepoint_component": group_json(&r.h1),
                "consistent": r.is_consistent(),
                "homology": r.homology.iter().map(|(i, h)| { let mut g = group_json(h); g["degree"] = json!(i); g }).collect::<Vec<_>>(),
                "caveat": r.caveat,
            }))
        }
        Computation::Mapspace => {
            let x = sset_arg()?;
            let t = target.ok_or_else(|| Failure::input("mapspace needs --target"))?;
            let (_, tv, _) = resolve(t, &Opts { pointed: false, out: None, doc: opts.doc.clone(), ..*opts })?;
            let y = Arc::new(underlying(&tv, config)?);
            if !y.is_pointed() || !x.is_pointed() {
                return Err(Failure::input("mapping spaces need pointed source and target (try --pointed)"));
            }
            let m = mapping_space_into(&x, &y, config.degree)?;
            doc(Value::Sset(m.space.clone()))
        }
    })
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        assert_eq!(parse_shorthand("horn:3:1", 4), Some(Construction::Horn { n: 3, i: 1, bound: 4 }));
        assert_eq!(parse_shorthand("cyclic:5", 4), Some(Construction::CyclicGroup { order: 5 }));
        assert_eq!(parse_shorthand("horn:3", 4), None);
        assert_eq!(parse_shorthand("delta:x", 4), None);
    }

    #[test]
    fn wrong_kinds_are_input_errors() {
        let doc = parse_document(
            r#"{"version": 1, "entities": [{"name": "z", "construction": {"cyclic_group": {"order": 2}}}, {"name": "d", "construction": {"dec": {"of": "z"}}}]}"#,
        )
        .unwrap();
        let e = Workspace::load(&doc).err().expect("kind mismatch");
        assert!(matches!(e, LoadError::WrongKind { .. }));
        assert_eq!(Failure::from(e).code, EXIT_INPUT);
    }
}
