use num_bigint::BigInt;
use proptest::prelude::*;

use scatbench_core::cat::{nerve, FinCategory};
use scatbench_core::homotopy::{
    abelianization, component, edge_path_group, homology, pi0, smith_invariants, SparseMatrix,
};
use scatbench_core::sset::standard::delta;
use scatbench_core::sset::SimplicialSet;
use scatbench_core::util::UnionFind;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

/// Product of elementary row operations: add `k` times row `a` to row `b`,
/// swap, negate.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, 0u8..3), 0..12).prop_map(move |ops| {
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
            .collect();
        for (a, b, k, kind) in ops {
            match kind {
                0 if a != b => {
                    for c in 0..n {
                        let add = &m[a][c] * k;
                        m[b][c] += add;
                    }
                }
                1 => m.swap(a, b),
                _ => {
                    for c in 0..n {
                        m[a][c] = -m[a][c].clone();
                    }
                }
            }
        }
        m
    })
}

fn big(m: &[Vec<i64>]) -> SparseMatrix<BigInt> {
    SparseMatrix::from_dense(&m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()).collect::<Vec<_>>()).unwrap()
}

fn strip(v: Vec<BigInt>) -> Vec<BigInt> {
    v.into_iter().filter(|d| *d != BigInt::from(0)).collect()
}

/// Quotient of `Δ³` identifying some pairs of vertices.
fn vertex_quotient(pairs: &[(u32, u32)]) -> SimplicialSet {
    let d = delta(3, 3).unwrap();
    let mut rel: Vec<UnionFind> = (0..=3).map(|n| UnionFind::new(d.size(n))).collect();
    for &(a, b) in pairs {
        rel[0].union(a, b);
    }
    d.quotient(rel).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_invariants_survive_unimodular_change(
        (m, u, v) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (matrix(r, c), unimodular(r), unimodular(c)))
    ) {
        let a = big(&m);
        let u = SparseMatrix::from_dense(&u).unwrap();
        let v = SparseMatrix::from_dense(&v).unwrap();
        let b = u.mul(&a).unwrap().mul(&v).unwrap();
        prop_assert_eq!(strip(smith_invariants(&a).unwrap()), strip(smith_invariants(&b).unwrap()));
    }

    #[test]
    fn random_posets_pass_audits(rel in prop::collection::vec((0u32..5, 0u32..5), 0..8)) {
        let rel: Vec<(u32, u32)> = rel.into_iter().filter(|(a, b)| a < b).collect();
        let c = FinCategory::poset(5, &rel).unwrap();
        prop_assert!(c.audit().is_empty());
        let n = nerve(&c, 3).unwrap();
        prop_assert!(n.audit().is_empty());
        prop_assert_eq!(homology(&n, 0).unwrap().free_rank, pi0(&n).count);
    }

    #[test]
    fn quotients_satisfy_identities_and_hurewicz(pairs in prop::collection::vec((0u32..4, 0u32..4), 0..3)) {
        let x = vertex_quotient(&pairs);
        prop_assert!(x.audit().is_empty());
        let comps = pi0(&x);
        prop_assert_eq!(homology(&x, 0).unwrap().free_rank, comps.count);
        let part = component(&x, &comps, 0).unwrap();
        let g = edge_path_group(&x, 0).unwrap();
        prop_assert_eq!(abelianization(&g), homology(&part, 1).unwrap());
    }
}
