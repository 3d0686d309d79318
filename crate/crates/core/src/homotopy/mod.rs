//! Exact integral homology, components, edge-path groups and the
//! weak-equivalence probe.

pub mod chains;
pub mod groups;
pub mod probe;
pub mod scalar;
pub mod snf;

pub use chains::{
    component, homology, homology_all, homology_of, mapping_cone, normalized_chains, pi0, reduced_homology_all,
    AbelianGroup, ChainComplex, Components,
};
pub use groups::{abelianization, edge_path_group, PresentedGroup};
pub use probe::{weak_equivalence_probe, Invariant, ProbeVerdict, Witness};
pub use scalar::Scalar;
pub use snf::{smith_invariants, smith_invariants_exact, SparseMatrix};
