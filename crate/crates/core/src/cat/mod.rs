//! Finite categories, functors, presented groupoids and their colimits.

pub mod category;
pub mod closure;
pub mod colimit;
pub mod functor;
pub mod groupoid;
pub mod nerve;

pub use category::{CategoryViolation, FinCategory};
pub use closure::{close_presentation, CategoryPresentation, ClosedCategory, Relation};
pub use colimit::{colimit_cat, coproduct_cat, pushout_cat, CatColimit, CatDiagram};
pub use functor::{
    check_equivalence, enumerate_functors, enumerate_functors_where, enumerate_transformations, enumerate_transformations_where, equalizer_cat, functor_category, EquivalenceVerdict,
    Functor, FunctorCategory, NaturalTransformation, DEFAULT_CAP,
};
pub use groupoid::{
    eval_word, fundamental_groupoid, fundamental_groupoid_of, group_order, induced_functor, materialize_groupoid, Groupoid,
    GroupoidRelation, PresentedGroupoid,
};
pub use nerve::{chains, iso_subgroupoid, nerve, nerve_iso, nerve_map, pointed_nerve};

/// Audit report for a category table; empty means valid.
pub fn validate_category(c: &FinCategory) -> Vec<CategoryViolation> {
    c.audit()
}
