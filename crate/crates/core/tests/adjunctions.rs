use std::sync::Arc;

use scatbench_core::cat::FinCategory;
use scatbench_core::scat::*;
use scatbench_core::sset::standard::{boundary, delta};
use scatbench_core::sset::{count_maps, d_star, dec};

const L: usize = 2;

fn targets() -> Vec<Arc<SimplicialCategory>> {
    vec![
        SimplicialCategory::constant(FinCategory::cyclic_group(2), L),
        SimplicialCategory::constant(FinCategory::chaotic(2), L),
        SimplicialCategory::constant(FinCategory::ordinal(1), L),
        SimplicialCategory::s0(L),
        (*suspend(&SimplicialCategory::s0(L), 10_000).unwrap().category).clone(),
    ]
    .into_iter()
    .map(Arc::new)
    .collect()
}

#[test]
fn hom_counts_match_on_both_sides() {
    for x in [delta(0, L + 3).unwrap(), delta(1, L + 3).unwrap(), boundary(1, L + 3).unwrap()] {
        let pd = Arc::new(pi_levelwise(&dec(&x).unwrap(), 1000).unwrap().truncate(L).unwrap());
        let ps = Arc::new(pi_levelwise(&d_star(&x).unwrap(), 1000).unwrap().truncate(L).unwrap());
        let xt = x.truncate(L).unwrap();
        for c in targets() {
            let left = count_simplicial_functors(&pd, &c, false, 1_000_000).unwrap();
            let right = count_maps(&xt, &wbar_nerve_iso(&c).unwrap(), false, 1_000_000).unwrap();
            assert_eq!(left, right, "dec side, X sizes {:?}", x.sizes());
            let left = count_simplicial_functors(&ps, &c, false, 1_000_000).unwrap();
            let right = count_maps(&xt, &diag_nerve_iso(&c).unwrap(), false, 1_000_000).unwrap();
            assert_eq!(left, right, "d-star side, X sizes {:?}", x.sizes());
        }
    }
}

#[test]
fn interval_into_suspended_s0() {
    let x = delta(1, L + 3).unwrap();
    let c = targets().pop().unwrap();
    let pd = Arc::new(pi_levelwise(&dec(&x).unwrap(), 1000).unwrap().truncate(L).unwrap());
    let ps = Arc::new(pi_levelwise(&d_star(&x).unwrap(), 1000).unwrap().truncate(L).unwrap());
    assert_eq!(count_simplicial_functors(&pd, &c, false, 100_000).unwrap(), 6);
    assert_eq!(count_simplicial_functors(&ps, &c, false, 100_000).unwrap(), 5);
}
