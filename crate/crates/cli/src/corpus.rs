//! Named instances shared by the suites. Each entry builds its object from
//! the configuration so checks can run independently.

use std::sync::Arc;

use scatbench_core::cat::{fundamental_groupoid_of, FinCategory};
use scatbench_core::scat::{rho, suspend_n, RhoChoice, SimplicialCategory};
use scatbench_core::sset::standard::{boundary, delta, discrete, horn, point, sphere, two_point};
use scatbench_core::sset::{box_product, d_star, dec, BisimplicialSet, SimplicialSet};
use scatbench_core::Result;

use crate::document::Config;

pub type Make<T> = fn(&Config) -> Result<T>;

/// Degree bound used by the suites: homology through degree 2 needs 3.
pub fn bound(c: &Config) -> usize {
    c.bound.max(c.degree + 1)
}

pub fn simplicial_sets() -> Vec<(&'static str, Make<SimplicialSet>)> {
    vec![
        ("boundary-1", |c| boundary(1, bound(c))),
        ("boundary-2", |c| boundary(2, bound(c))),
        ("boundary-3", |c| boundary(3, bound(c))),
        ("delta-0", |c| delta(0, bound(c))),
        ("delta-1", |c| delta(1, bound(c))),
        ("delta-2", |c| delta(2, bound(c))),
        ("delta-3", |c| delta(3, bound(c))),
        ("discrete-3", |c| discrete(3, bound(c))),
        ("horn-2-0", |c| horn(2, 0, bound(c))),
        ("horn-2-1", |c| horn(2, 1, bound(c))),
        ("horn-2-2", |c| horn(2, 2, bound(c))),
        ("horn-3-1", |c| horn(3, 1, bound(c))),
        ("point", |c| point(bound(c))),
        ("sphere-1", |c| sphere(1, bound(c))),
        ("two-point", |c| two_point(bound(c))),
    ]
}

pub fn categories() -> Vec<(&'static str, Make<FinCategory>)> {
    vec![
        ("chaotic-2", |_| Ok(FinCategory::chaotic(2))),
        ("chaotic-3", |_| Ok(FinCategory::chaotic(3))),
        ("cyclic-2", |_| Ok(FinCategory::cyclic_group(2))),
        ("cyclic-3", |_| Ok(FinCategory::cyclic_group(3))),
        ("cyclic-4", |_| Ok(FinCategory::cyclic_group(4))),
        ("cyclic-2-x-chaotic-2", |_| Ok(FinCategory::cyclic_group(2).product(&FinCategory::chaotic(2)))),
        ("discrete-2", |_| Ok(FinCategory::discrete(2))),
        ("ordinal-1", |_| Ok(FinCategory::ordinal(1))),
        ("ordinal-2", |_| Ok(FinCategory::ordinal(2))),
        ("pi-delta-2", |c| Ok(fundamental_groupoid_of(&delta(2, 2)?, c.closure_bound)?.category)),
        ("pi-horn-3-1", |c| Ok(fundamental_groupoid_of(&horn(3, 1, 2)?, c.closure_bound)?.category)),
        ("poset-v", |_| FinCategory::poset(3, &[(0, 1), (0, 2)])),
        ("terminal", |_| Ok(FinCategory::terminal())),
    ]
}

fn constant(c: FinCategory, cfg: &Config) -> Result<SimplicialCategory> {
    SimplicialCategory::constant(c, bound(cfg)).pointed_at(0)
}

fn rho_of(x: Result<SimplicialSet>, choice: RhoChoice, cfg: &Config) -> Result<SimplicialCategory> {
    Ok((*rho(&x?, choice, bound(cfg), cfg.closure_bound)?.category).clone())
}

/// Pointed simplicial categories.
pub fn pointed_simplicial_categories() -> Vec<(&'static str, Make<SimplicialCategory>)> {
    vec![
        ("const-chaotic-2", |c| constant(FinCategory::chaotic(2), c)),
        ("const-cyclic-2", |c| constant(FinCategory::cyclic_group(2), c)),
        ("const-cyclic-3", |c| constant(FinCategory::cyclic_group(3), c)),
        ("const-ordinal-1", |c| constant(FinCategory::ordinal(1), c)),
        ("pi-dec-sphere-1", |c| rho_of(sphere(1, bound(c) + 3), RhoChoice::PiDec, c)),
        ("s0", |c| Ok(SimplicialCategory::s0(bound(c)))),
        ("suspension-1-s0", |c| Ok((*suspend_n(&SimplicialCategory::s0(bound(c)), 1, c.closure_bound)?).clone())),
        ("suspension-2-s0", |c| Ok((*suspend_n(&SimplicialCategory::s0(bound(c)), 2, c.closure_bound)?).clone())),
        ("terminal", |c| SimplicialCategory::terminal(bound(c)).pointed_at(0)),
    ]
}

/// Pointed ones plus unpointed levelwise groupoids.
pub fn simplicial_categories() -> Vec<(&'static str, Make<SimplicialCategory>)> {
    let mut v: Vec<(&'static str, Make<SimplicialCategory>)> = vec![
        ("pi-dec-boundary-2", |c| rho_of(boundary(2, bound(c) + 3), RhoChoice::PiDec, c)),
        ("pi-dec-delta-1", |c| rho_of(delta(1, bound(c) + 3), RhoChoice::PiDec, c)),
        ("pi-dstar-delta-1", |c| rho_of(delta(1, bound(c) + 3), RhoChoice::PiDStar, c)),
        ("pi-dstar-horn-2-1", |c| rho_of(horn(2, 1, bound(c) + 3), RhoChoice::PiDStar, c)),
    ];
    v.extend(pointed_simplicial_categories());
    v.sort_by_key(|e| e.0);
    v
}

/// Bisimplicial inputs whose diagonal and codiagonal reach degree 3.
pub fn bisimplicial_sets() -> Vec<(&'static str, Make<BisimplicialSet>)> {
    vec![
        ("box-delta-1-delta-1", |c| box_product(&delta(1, bound(c))?, &delta(1, bound(c))?)),
        ("dec-boundary-2", |c| dec(&boundary(2, 2 * bound(c) + 1)?)),
        ("dec-delta-2", |c| dec(&delta(2, 2 * bound(c) + 1)?)),
        ("dstar-boundary-2", |c| d_star(&boundary(2, 2 * bound(c) + 1)?)),
    ]
}

pub fn arc<T>(r: Result<T>) -> Result<Arc<T>> {
    r.map(Arc::new)
}
