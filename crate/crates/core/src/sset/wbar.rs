//! The codiagonal `W̄`, right adjoint of `Dec`.
//!
//! `W̄(B)_n` is the set of tuples `(x_0, …, x_n)` with `x_p ∈ B_{p,n-p}` and
//! `dᵛ_0 x_p = dʰ_{p+1} x_{p+1}`. Faces and degeneracies:
//!
//! ```text
//! d_i(x)_p = dᵛ_{i-p} x_p     (p < i)      s_i(x)_p = sᵛ_{i-p} x_p   (p <= i)
//!          = dʰ_i x_{p+1}     (p >= i)              = sʰ_i x_{p-1}   (p > i)
//! ```

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::bisimplicial::{BisimplicialMap, BisimplicialSet};
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;

fn tuples(b: &BisimplicialSet, bound: usize) -> Vec<Vec<Vec<u32>>> {
    let mut keys = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        // simplices of B_{p, n-p} grouped by dᵛ_0
        let by_vface: Vec<HashMap<u32, Vec<u32>>> = (0..n)
            .map(|p| {
                let mut m: HashMap<u32, Vec<u32>> = HashMap::new();
                for x in 0..b.size(p, n - p) as u32 {
                    m.entry(b.vface(p, n - p, 0, x)).or_default().push(x);
                }
                m
            })
            .collect();
        let mut level = Vec::new();
        let mut cur = vec![0u32; n + 1];
        fn fill(
            b: &BisimplicialSet,
            by_vface: &[HashMap<u32, Vec<u32>>],
            p: usize,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            // x_{p+1} is fixed; choose x_p
            let wanted = b.hface(p + 1, cur.len() - p - 2, p + 1, cur[p + 1]);
            if let Some(list) = by_vface[p].get(&wanted) {
                for &x in list {
                    cur[p] = x;
                    if p == 0 {
                        out.push(cur.clone());
                    } else {
                        fill(b, by_vface, p - 1, cur, out);
                    }
                }
            }
        }
        for top in 0..b.size(n, 0) as u32 {
            cur[n] = top;
            if n == 0 {
                level.push(cur.clone());
            } else {
                fill(b, &by_vface, n - 1, &mut cur, &mut level);
            }
        }
        level.sort_unstable();
        keys.push(level);
    }
    keys
}

/// `W̄B` up to the largest `N` whose anti-diagonals all lie in the shape.
pub fn wbar(b: &BisimplicialSet) -> Result<SimplicialSet> {
    let bound = b.shape().antidiagonal_bound().ok_or(Error::InsufficientShape("anti-diagonal"))?;
    let keys = tuples(b, bound);
    let face = |n: usize, i: usize, x: &Vec<u32>| -> Vec<u32> {
        (0..n)
            .map(|p| if p < i { b.vface(p, n - p, i - p, x[p]) } else { b.hface(p + 1, n - p - 1, i, x[p + 1]) })
            .collect()
    };
    let degen = |n: usize, i: usize, x: &Vec<u32>| -> Vec<u32> {
        (0..n + 2)
            .map(|p| if p <= i { b.vdegen(p, n - p, i - p, x[p]) } else { b.hdegen(p - 1, n + 1 - p, i, x[p - 1]) })
            .collect()
    };
    let w = SimplicialSet::from_keys(bound, &keys, face, degen)?;
    let bp = b.basepoint().map(|v| keys[0].iter().position(|k| k[0] == v).unwrap() as u32);
    w.with_basepoint(bp)
}

pub fn wbar_map(f: &BisimplicialMap) -> Result<SimplicialMap> {
    let (s, t) = (f.source(), f.target());
    let source = Arc::new(wbar(s)?);
    let target = wbar(t)?;
    let target = Arc::new(if target.bound() > source.bound() { target.truncate(source.bound())? } else { target });
    let skeys = tuples(s, source.bound());
    let tkeys = tuples(t, source.bound());
    let comps = (0..=source.bound())
        .map(|n| {
            let index: HashMap<&Vec<u32>, u32> = tkeys[n].iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
            skeys[n]
                .iter()
                .map(|k| {
                    let img: Vec<u32> = k.iter().enumerate().map(|(p, &x)| f.apply(p, n - p, x)).collect();
                    index[&img]
                })
                .collect()
        })
        .collect();
    SimplicialMap::new_unchecked(source, target, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::bisimplicial::box_product;
    use crate::sset::dec::dec;
    use crate::sset::dstar::d_star;
    use crate::sset::standard::{boundary, delta};

    #[test]
    fn wbar_of_dec_interval() {
        let w = wbar(&dec(&delta(1, 4).unwrap()).unwrap()).unwrap();
        assert_eq!(w.bound(), 3);
        assert_eq!(w.size(1), 6);
        assert!(w.audit().is_empty());
        let p = wbar(&dec(&delta(0, 4).unwrap()).unwrap()).unwrap();
        assert!(p.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn oracle_pairs_for_interval() {
        // W̄(Dec Δ¹)_1: pairs in Δ¹_2 × Δ¹_2 with d₁x = d₁y
        let y = delta(1, 4).unwrap();
        let mut count = 0;
        for a in 0..y.size(2) as u32 {
            for c in 0..y.size(2) as u32 {
                if y.face(2, 1, a) == y.face(2, 1, c) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn identities_hold_on_assorted_inputs() {
        let inputs = [
            dec(&boundary(2, 5).unwrap()).unwrap(),
            d_star(&boundary(2, 5).unwrap()).unwrap(),
            box_product(&delta(1, 3).unwrap(), &boundary(2, 3).unwrap()).unwrap(),
        ];
        for b in &inputs {
            let w = wbar(b).unwrap();
            assert!(w.audit().is_empty(), "{:?}", w.audit().first());
        }
    }
}
