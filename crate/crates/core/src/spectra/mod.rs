//! Spectrum objects of pointed simplicial categories, mapping spaces and
//! the K-group report.

pub mod k;
pub mod mapping;
pub mod spectrum;

pub use k::{k_groups, KReport, HOMOLOGY_CAVEAT};
pub use mapping::{is_degreewise_bijection, mapping_space, mapping_space_into, MappingSpace};
pub use spectrum::{
    constant_structure, omega_spectrum_probe, shift, sigma_infinity, LevelComparison, LevelVerdict, OmegaProbeReport,
    SpectrumObject,
};
