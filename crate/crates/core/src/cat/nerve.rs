use std::sync::Arc;

use crate::cat::category::FinCategory;
use crate::cat::functor::Functor;
use crate::error::Result;
use crate::sset::{SimplicialMap, SimplicialSet};

/// Composable chains of `k` morphisms, in path order. Degree 0 holds the
/// objects as one-element keys.
pub fn chains(c: &FinCategory, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return (0..c.object_count() as u32).map(|o| vec![o]).collect();
    }
    let mut out: Vec<Vec<u32>> = (0..c.morphism_count() as u32).map(|f| vec![f]).collect();
    for _ in 1..k {
        let mut next = Vec::new();
        for ch in &out {
            for &g in c.outgoing(c.tgt(*ch.last().unwrap())) {
                let mut e = ch.clone();
                e.push(g);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

pub(crate) fn chain_face(c: &FinCategory, n: usize, i: usize, ch: &[u32]) -> Vec<u32> {
    if n == 1 {
        return vec![if i == 0 { c.tgt(ch[0]) } else { c.src(ch[0]) }];
    }
    let mut out = ch.to_vec();
    if i == 0 {
        out.remove(0);
    } else if i == n {
        out.pop();
    } else {
        let g = out.remove(i);
        out[i - 1] = c.compose(g, out[i - 1]);
    }
    out
}

pub(crate) fn chain_degen(c: &FinCategory, n: usize, j: usize, ch: &[u32]) -> Vec<u32> {
    if n == 0 {
        return vec![c.identity(ch[0])];
    }
    let vertex = if j == 0 { c.src(ch[0]) } else { c.tgt(ch[j - 1]) };
    let mut out = ch.to_vec();
    out.insert(j, c.identity(vertex));
    out
}

/// The nerve truncated at `bound`.
pub fn nerve(c: &FinCategory, bound: usize) -> Result<SimplicialSet> {
    let keys: Vec<Vec<Vec<u32>>> = (0..=bound).map(|k| chains(c, k)).collect();
    SimplicialSet::from_keys(bound, &keys, |n, i, k| chain_face(c, n, i, k), |n, j, k| chain_degen(c, n, j, k))
}

/// Nerve with the basepoint at object `o`.
pub fn pointed_nerve(c: &FinCategory, bound: usize, o: u32) -> Result<SimplicialSet> {
    nerve(c, bound)?.with_basepoint(Some(o))
}

/// `N(F)` between the given nerves, which must be `nerve(F.source)` and
/// `nerve(F.target)` at a common bound.
pub fn nerve_map(f: &Functor, source: Arc<SimplicialSet>, target: Arc<SimplicialSet>) -> Result<SimplicialMap> {
    let bound = source.bound();
    let index_of = |k: usize| -> std::collections::HashMap<Vec<u32>, u32> {
        chains(f.target(), k).into_iter().enumerate().map(|(i, ch)| (ch, i as u32)).collect()
    };
    let mut components = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let index = index_of(k);
        let comp = chains(f.source(), k)
            .into_iter()
            .map(|ch| {
                let image: Vec<u32> =
                    if k == 0 { vec![f.on_object(ch[0])] } else { ch.iter().map(|&m| f.on_morphism(m)).collect() };
                index[&image]
            })
            .collect();
        components.push(comp);
    }
    SimplicialMap::new_unchecked(source, target, components)
}

/// The wide subcategory of invertible morphisms with its inclusion data:
/// returns the groupoid and the old index of each kept morphism.
pub fn iso_subgroupoid(c: &FinCategory) -> (FinCategory, Vec<u32>) {
    let keep: Vec<bool> = (0..c.morphism_count() as u32).map(|f| c.inverse(f).is_some()).collect();
    let (g, _, mor) = c.subcategory(&vec![true; c.object_count()], &keep).expect("invertibles form a wide subcategory");
    (g, mor)
}

/// `N(iso C)`.
pub fn nerve_iso(c: &FinCategory, bound: usize) -> Result<SimplicialSet> {
    nerve(&iso_subgroupoid(c).0, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::{homology, AbelianGroup};

    #[test]
    fn chaotic_nerve_counts() {
        for m in 1..4usize {
            let n = nerve(&FinCategory::chaotic(m), 3).unwrap();
            assert!(n.audit().is_empty());
            for k in 0..=3 {
                assert_eq!(n.size(k), m.pow(k as u32 + 1));
            }
        }
        let n = nerve(&FinCategory::discrete(2), 3).unwrap();
        assert_eq!(n.sizes(), &[2, 2, 2, 2]);
        assert_eq!(n.nondegenerate(1).count(), 0);
    }

    #[test]
    fn chain_count_matches_path_oracle() {
        // paths of length k in the morphism graph: powers of the adjacency count matrix
        let c = FinCategory::poset(3, &[(0, 1), (0, 2)]).unwrap();
        let m = c.object_count();
        let mut adj = vec![vec![0usize; m]; m];
        for f in 0..c.morphism_count() as u32 {
            adj[c.src(f) as usize][c.tgt(f) as usize] += 1;
        }
        let n = nerve(&c, 3).unwrap();
        let mut walk: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| usize::from(i == j)).collect()).collect();
        for k in 1..=3 {
            walk = (0..m).map(|i| (0..m).map(|j| (0..m).map(|l| walk[i][l] * adj[l][j]).sum()).collect()).collect();
            assert_eq!(n.size(k), walk.iter().flatten().sum::<usize>());
        }
    }

    #[test]
    fn classifying_space_of_z2() {
        let n = nerve(&FinCategory::cyclic_group(2), 4).unwrap();
        assert!(n.audit().is_empty());
        assert_eq!(homology(&n, 1).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(homology(&n, 2).unwrap(), AbelianGroup::trivial());
        assert_eq!(homology(&n, 3).unwrap(), AbelianGroup::cyclic(2));
    }

    #[test]
    fn iso_parts() {
        assert_eq!(iso_subgroupoid(&FinCategory::ordinal(1)).0, FinCategory::discrete(2));
        let z2 = FinCategory::cyclic_group(2);
        assert_eq!(iso_subgroupoid(&z2).0, z2);
        // a ⇄ b plus an idempotent endomorphism e of b
        let c = iso_pair_with_idempotent();
        assert!(c.audit().is_empty());
        let (g, kept) = iso_subgroupoid(&c);
        assert_eq!(g.morphism_count(), 4);
        assert!(g.is_groupoid());
        assert_eq!(c.morphism_count(), 8);
        assert!(kept.iter().all(|&f| c.inverse(f).is_some()));
    }

    /// a ⇄ b inverse to each other and an idempotent e on b.
    fn iso_pair_with_idempotent() -> FinCategory {
        use crate::cat::closure::{close_presentation, CategoryPresentation, Relation};
        let p = CategoryPresentation {
            objects: 2,
            generators: vec![(0, 1), (1, 0), (1, 1)],
            relations: vec![
                Relation { start: 0, lhs: vec![0, 1], rhs: vec![] },
                Relation { start: 1, lhs: vec![1, 0], rhs: vec![] },
                Relation { start: 1, lhs: vec![2, 2], rhs: vec![2] },
            ],
        };
        close_presentation(&p, 100).unwrap().category
    }
}
