//! Simplicial objects in finite categories.

pub mod category;
pub mod colimit;
pub mod cotensor;
pub mod enumerate;
pub mod nerve;
pub mod pi;
pub mod tensor;

pub use category::{ScatViolation, SimplicialCategory, SimplicialFunctor};
pub use pi::{pi_bound, pi_levelwise, pi_levelwise_full, pi_levelwise_map, rho, rho_input, rho_map, rho_shape, PiLevelwise, RhoChoice};
pub use nerve::{
    diag_nerve_iso, diag_nerve_iso_map, diag_nerve_iso_to, nerve_iso_levelwise, nerve_iso_levelwise_map, wbar_nerve_iso,
    wbar_nerve_iso_map,
};
pub use colimit::{colimit_scat, equalizer_scat, pushout_scat, ScatColimit, ScatDiagram};
pub use tensor::{
    add_disjoint_basepoint, constant_at_basepoint, is_isomorphism, odot, odot_comparison, product_functor, smash, suspend,
    suspend_n, suspend_with, tensor_levels, tensor_rho, vertex_map, Smash, Tensor,
};
pub use enumerate::{
    colimit_of_hom_counts, count_simplicial_functors, enumerate_simplicial_functors, enumerate_simplicial_functors_fixing,
};
pub use cotensor::{cotensor, discrete_scat, evaluate_at_vertex, omega};
