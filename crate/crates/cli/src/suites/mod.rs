//! The named verification suites.

mod homotopical;
mod spectral;
mod structural;

pub use structural::{full_inclusion, groupoid_pushout_family};

use crate::document::Config;
use crate::report::{run_checks, CheckSpec, SuiteReport};

pub const SUITES: [&str; 12] = [
    "identities",
    "c-sigma-contractibility",
    "acyclic-cofibrations",
    "niso-pushout",
    "diag-wbar",
    "unit",
    "effective-mono",
    "suspension-ladder",
    "mapping-space",
    "k-theory",
    "omega-probe",
    "directed-colimit",
];

pub fn checks(name: &str) -> Option<Vec<CheckSpec>> {
    Some(match name {
        "identities" => structural::identities(),
        "c-sigma-contractibility" => structural::c_sigma_contractibility(),
        "acyclic-cofibrations" => homotopical::acyclic_cofibrations(),
        "niso-pushout" => structural::niso_pushout(),
        "diag-wbar" => homotopical::diag_wbar(),
        "unit" => homotopical::unit(),
        "effective-mono" => structural::effective_mono(),
        "suspension-ladder" => homotopical::suspension_ladder(),
        "mapping-space" => spectral::mapping_space_suite(),
        "k-theory" => spectral::k_theory(),
        "omega-probe" => spectral::omega_probe(),
        "directed-colimit" => homotopical::directed_colimit(),
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

pub fn run_suite(name: &str, config: &Config) -> Result<SuiteReport, UnknownSuite> {
    let specs = checks(name).ok_or_else(|| UnknownSuite(name.to_string()))?;
    Ok(run_checks(name, specs, config))
}
