//! Truncated simplicial and bisimplicial sets.

pub mod bisimplicial;
pub mod colimit;
pub mod csigma;
pub mod dec;
pub mod dstar;
pub mod maps;
pub mod product;
pub mod simplicial;
pub mod standard;
pub mod wbar;

pub use bisimplicial::{box_product, diag, diag_map, BidegreeShape, BisimplicialMap, BisimplicialSet};
pub use colimit::{colimit_sset, coproduct_sset, map_by_vertices, pushout_sset, SsetColimit, SsetDiagram};
pub use csigma::c_sigma;
pub use dec::{dec, dec_map, dec_on};
pub use dstar::{d_star, d_star_map, d_star_on};
pub use maps::{count_maps, enumerate_maps, SimplicialMap};
pub use product::product_sset;
pub use simplicial::{IdentityViolation, Simplex, SimplicialSet};
pub use standard::{build_standard, StandardKind};
pub use wbar::{wbar, wbar_map};
