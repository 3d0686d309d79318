use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::colimit::vertices_of;
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;
use crate::sset::standard::boundary;

/// The subcomplex of `∂Δⁿ` generated by the codimension-one faces `d_i eₙ`
/// that contain `σ`, i.e. those with `i` not a vertex of `σ`.
///
/// `σ` is given as `(degree, index)` in `boundary(n, bound)`. Returns the
/// subcomplex and its inclusion.
pub fn c_sigma(n: usize, sigma: (usize, u32), bound: usize) -> Result<(Arc<SimplicialSet>, SimplicialMap)> {
    if n == 0 {
        return Err(Error::NotInBoundary { degree: sigma.0, index: sigma.1 as usize });
    }
    let whole = Arc::new(boundary(n, bound)?);
    let (deg, idx) = sigma;
    if deg > bound || idx as usize >= whole.size(deg) {
        return Err(Error::NotInBoundary { degree: deg, index: idx as usize });
    }
    let verts = vertices_of(&whole, deg, idx);
    let mut generators = Vec::new();
    for i in 0..=n as u32 {
        if verts.contains(&i) {
            continue;
        }
        let face: Vec<u32> = (0..=n as u32).filter(|&v| v != i).collect();
        let y = whole
            .nondegenerate(n - 1)
            .find(|&y| vertices_of(&whole, n - 1, y) == face)
            .ok_or(Error::BoundTooSmall { bound, reason: "faces of ∂Δⁿ need bound >= n-1".into() })?;
        generators.push((n - 1, y));
    }
    debug_assert!(generators.len() < n + 1);
    let (sub, inclusion) = whole.generated_by(&generators)?;
    let sub = Arc::new(sub);
    let map = SimplicialMap::new(sub.clone(), whole, inclusion)?;
    Ok((sub, map))
}

/// Nondegenerate simplices of `∂Δⁿ`, i.e. every admissible `σ` up to
/// degeneracy.
pub fn boundary_simplices(n: usize, bound: usize) -> Result<Vec<(usize, u32)>> {
    let b = boundary(n, bound)?;
    Ok((0..=bound.min(n.saturating_sub(1))).flat_map(|d| b.nondegenerate(d).map(move |x| (d, x))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_and_edge_of_triangle() {
        // vertex 0 of ∂Δ²: both edges through it
        let (c, _) = c_sigma(2, (0, 0), 3).unwrap();
        assert_eq!(c.nondegenerate_counts(), vec![3, 2, 0, 0]);
        let edge = boundary(2, 3).unwrap().nondegenerate(1).next().unwrap();
        let (c, _) = c_sigma(2, (1, edge), 3).unwrap();
        assert_eq!(c.nondegenerate_counts(), vec![2, 1, 0, 0]);
    }

    #[test]
    fn rejects_outside_simplices() {
        assert!(matches!(c_sigma(2, (2, 99), 3), Err(Error::NotInBoundary { .. })));
    }
}
