use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;

/// Degreewise cartesian product. The pair `(x, y)` in degree `n` has index
/// `x * |Y_n| + y`.
pub fn product_sset(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet> {
    if x.bound() != y.bound() {
        return Err(Error::BoundMismatch { left: x.bound(), right: y.bound() });
    }
    let bound = x.bound();
    let pair = |n: usize, a: u32, b: u32| a * y.size(n) as u32 + b;
    let sizes: Vec<usize> = (0..=bound).map(|n| x.size(n) * y.size(n)).collect();
    let mut faces = vec![Vec::new(); bound + 1];
    let mut degens = vec![Vec::new(); bound + 1];
    for n in 0..=bound {
        let ys = y.size(n) as u32;
        if n > 0 {
            for i in 0..=n {
                faces[n].push(
                    (0..sizes[n] as u32)
                        .map(|k| pair(n - 1, x.face(n, i, k / ys), y.face(n, i, k % ys)))
                        .collect(),
                );
            }
        }
        if n < bound {
            for j in 0..=n {
                degens[n].push(
                    (0..sizes[n] as u32)
                        .map(|k| pair(n + 1, x.degen(n, j, k / ys), y.degen(n, j, k % ys)))
                        .collect(),
                );
            }
        }
    }
    let basepoint = match (x.basepoint(), y.basepoint()) {
        (Some(a), Some(b)) => Some(pair(0, a, b)),
        _ => None,
    };
    SimplicialSet::from_tables(bound, sizes, faces, degens, basepoint)
}

/// The two projections out of `product_sset(x, y)`.
pub fn projections(
    x: &Arc<SimplicialSet>,
    y: &Arc<SimplicialSet>,
    product: &Arc<SimplicialSet>,
) -> Result<(SimplicialMap, SimplicialMap)> {
    let bound = x.bound();
    let mut px = Vec::with_capacity(bound + 1);
    let mut py = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let ys = y.size(n) as u32;
        px.push((0..product.size(n) as u32).map(|k| k / ys).collect());
        py.push((0..product.size(n) as u32).map(|k| k % ys).collect());
    }
    Ok((
        SimplicialMap::new_unchecked(product.clone(), x.clone(), px)?,
        SimplicialMap::new_unchecked(product.clone(), y.clone(), py)?,
    ))
}

/// `f × g`, on products built by [`product_sset`].
pub fn product_map(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
    let source = Arc::new(product_sset(f.source(), g.source())?);
    let target = Arc::new(product_sset(f.target(), g.target())?);
    let bound = source.bound();
    let comps = (0..=bound)
        .map(|n| {
            let (sy, ty) = (g.source().size(n) as u32, g.target().size(n) as u32);
            (0..source.size(n) as u32)
                .map(|k| f.apply(n, k / sy) * ty + g.apply(n, k % sy))
                .collect()
        })
        .collect();
    SimplicialMap::new_unchecked(source, target, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::delta;

    #[test]
    fn square_counts() {
        let d1 = delta(1, 3).unwrap();
        let sq = product_sset(&d1, &d1).unwrap();
        assert_eq!(sq.size(1), 9);
        assert!(sq.audit().is_empty());
        assert_eq!(sq.nondegenerate_counts(), vec![4, 5, 2, 0]);
    }

    #[test]
    fn point_is_a_unit() {
        let d1 = delta(1, 3).unwrap();
        let p = product_sset(&d1, &delta(0, 3).unwrap()).unwrap();
        assert_eq!(p.sizes(), d1.sizes());
        assert_eq!(p.nondegenerate_counts(), d1.nondegenerate_counts());
    }
}
