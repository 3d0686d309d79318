//! The versioned JSON workbench document.

use serde::{Deserialize, Serialize};

use scatbench_core::scat::RhoChoice;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchDocument {
    pub version: u32,
    #[serde(default)]
    pub config: Config,
    #[serde(default)]
    pub entities: Vec<Entity>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<MapEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<String>,
}

impl WorkbenchDocument {
    pub fn new(entities: Vec<Entity>) -> Self {
        WorkbenchDocument { version: SCHEMA_VERSION, config: Config::default(), entities, maps: Vec::new(), suites: Vec::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub bound: usize,
    pub closure_bound: usize,
    pub cap: usize,
    pub degree: usize,
    pub rho: Rho,
}

impl Default for Config {
    fn default() -> Self {
        Config { bound: 3, closure_bound: 10_000, cap: 1_000_000, degree: 2, rho: Rho::Dec }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Rho {
    Dec,
    Dstar,
}

impl From<Rho> for RhoChoice {
    fn from(r: Rho) -> Self {
        match r {
            Rho::Dec => RhoChoice::PiDec,
            Rho::Dstar => RhoChoice::PiDStar,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entity {
    pub name: String,
    pub construction: Construction,
}

/// How an entity is obtained. References name earlier or later entities of
/// the same document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    // simplicial sets
    Delta { n: usize, bound: usize },
    Boundary { n: usize, bound: usize },
    Horn { n: usize, i: usize, bound: usize },
    Sphere { n: usize, bound: usize },
    Point { bound: usize },
    TwoPoint { bound: usize },
    DiscreteSet { points: usize, bound: usize },
    SimplicialTables(SsetTables),
    Nerve { of: String, bound: usize },
    NerveIso { of: String, bound: usize },
    Diag { of: String },
    Wbar { of: String },
    DiagNerveIso { of: String },
    WbarNerveIso { of: String },
    CSigma { n: usize, degree: usize, index: u32, bound: usize },
    Truncate { of: String, bound: usize },
    // bisimplicial sets
    Dec { of: String },
    Dstar { of: String },
    BoxProduct { left: String, right: String },
    NerveIsoLevelwise { of: String },
    BisimplicialTables(BisetTables),
    // categories
    Discrete { objects: usize },
    Chaotic { objects: usize },
    CyclicGroup { order: usize },
    Ordinal { n: usize },
    Poset { objects: usize, relation: Vec<(u32, u32)> },
    CategoryTable(CategoryTable),
    FundamentalGroupoid { of: String },
    // simplicial categories
    Constant { category: String, bound: usize, #[serde(default, skip_serializing_if = "Option::is_none")] basepoint: Option<u32> },
    S0 { bound: usize },
    Terminal { bound: usize },
    PiLevelwise { of: String },
    Rho { of: String, rho: Rho, levels: usize },
    Suspension { of: String, #[serde(default = "one")] times: usize },
    Smash { of: String, with: String, rho: Rho },
    ScatTables(ScatTables),
    // spectra
    SigmaInfinity { of: String, length: usize },
    ConstantStructure { levels: Vec<String> },
    Spectrum { levels: Vec<String>, structure: Vec<Vec<FunctorTable>> },
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SsetTables {
    pub bound: usize,
    pub sizes: Vec<usize>,
    /// `faces[n][i][x] = d_i x`
    pub faces: Vec<Vec<Vec<u32>>>,
    /// `degens[n][j][x] = s_j x`
    pub degens: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BisetTables {
    /// largest `q` per `p`
    pub shape: Vec<usize>,
    pub sizes: Vec<Vec<usize>>,
    pub hfaces: Vec<Vec<Vec<Vec<u32>>>>,
    pub hdegens: Vec<Vec<Vec<Vec<u32>>>>,
    pub vfaces: Vec<Vec<Vec<Vec<u32>>>>,
    pub vdegens: Vec<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryTable {
    pub objects: usize,
    pub sources: Vec<u32>,
    pub targets: Vec<u32>,
    pub identities: Vec<u32>,
    /// `(g, f, g ∘ f)` for composable non-identity pairs
    pub composition: Vec<(u32, u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorTable {
    pub objects: Vec<u32>,
    pub morphisms: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScatTables {
    pub levels: Vec<CategoryTable>,
    pub faces: Vec<Vec<FunctorTable>>,
    pub degens: Vec<Vec<FunctorTable>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub definition: MapDefinition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum MapDefinition {
    /// `components[n][x]`
    Components(Vec<Vec<u32>>),
    /// images of the vertices, for targets whose simplices are determined by
    /// their vertices
    ByVertices(Vec<u32>),
}

/// Parse failure with its position in the text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Syntax and schema only; [`crate::workspace::Workspace::load`] resolves and
/// audits.
pub fn parse_document(text: &str) -> Result<WorkbenchDocument, ParseError> {
    let doc: WorkbenchDocument = serde_json::from_str(text)
        .map_err(|e| ParseError { line: e.line(), column: e.column(), message: e.to_string() })?;
    if doc.version != SCHEMA_VERSION {
        return Err(ParseError { line: 1, column: 1, message: format!("unsupported schema version {}", doc.version) });
    }
    Ok(doc)
}

/// Canonical text: two-space pretty JSON with a trailing newline.
pub fn serialize_document(doc: &WorkbenchDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_carry_positions() {
        let e = parse_document("{\n  \"version\": 1,\n  \"entities\": [ { \"nam\": \"x\" } ]\n}").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("nam"));
        let e = parse_document(r#"{"version": 7, "entities": []}"#).unwrap_err();
        assert!(e.message.contains("version 7"));
    }

    #[test]
    fn defaults_fill_in_and_round_trip() {
        let doc = parse_document(r#"{"version": 1, "entities": [{"name": "s", "construction": {"suspension": {"of": "t"}}}]}"#).unwrap();
        assert_eq!(doc.config, Config::default());
        assert_eq!(doc.entities[0].construction, Construction::Suspension { of: "t".into(), times: 1 });
        assert_eq!(parse_document(&serialize_document(&doc)).unwrap(), doc);
    }
}
