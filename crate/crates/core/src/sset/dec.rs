use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::bisimplicial::{BidegreeShape, BisimplicialMap, BisimplicialSet};
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;

/// Total décalage: `Dec(Y)_{p,q} = Y_{p+q+1}` with `dʰ_i = d_i`,
/// `dᵛ_j = d_{p+1+j}` and likewise for degeneracies.
pub fn dec(y: &SimplicialSet) -> Result<BisimplicialSet> {
    if y.bound() == 0 {
        return Err(Error::BoundTooSmall { bound: 0, reason: "décalage needs bound >= 1".into() });
    }
    let shape = BidegreeShape::staircase(y.bound())?;
    let b = BisimplicialSet::from_index_maps(
        shape,
        |p, q| y.size(p + q + 1),
        |p, q, i, x| y.face(p + q + 1, i, x),
        |p, q, j, x| y.degen(p + q + 1, j, x),
        |p, q, j, x| y.face(p + q + 1, p + 1 + j, x),
        |p, q, j, x| y.degen(p + q + 1, p + 1 + j, x),
    )?;
    b.with_basepoint(y.basepoint().map(|v| y.degen(0, 0, v)))
}

pub fn dec_on(y: &SimplicialSet, shape: &BidegreeShape) -> Result<BisimplicialSet> {
    dec(y)?.restrict_shape(shape)
}

pub fn dec_map(f: &SimplicialMap, shape: Option<&BidegreeShape>) -> Result<BisimplicialMap> {
    let (mut s, mut t) = (dec(f.source())?, dec(f.target())?);
    if let Some(sh) = shape {
        s = s.restrict_shape(sh)?;
        t = t.restrict_shape(sh)?;
    }
    let comps = (0..=s.shape().max_p())
        .map(|p| (0..=s.shape().max_q(p).unwrap()).map(|q| f.components()[p + q + 1].clone()).collect())
        .collect();
    BisimplicialMap::new_unchecked(Arc::new(s), Arc::new(t), comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::bisimplicial::diag;
    use crate::sset::standard::{boundary, delta};

    #[test]
    fn dec_sizes() {
        let d = dec(&delta(1, 5).unwrap()).unwrap();
        for (p, q) in d.shape().cells() {
            assert_eq!(d.size(p, q), p + q + 3);
        }
        let dg = diag(&d).unwrap();
        for n in 0..=dg.bound() {
            assert_eq!(dg.size(n), 2 * n + 3);
        }
        let pt = dec(&delta(0, 4).unwrap()).unwrap();
        assert!(pt.shape().cells().all(|(p, q)| pt.size(p, q) == 1));
    }

    #[test]
    fn dec_of_boundary_passes_audit() {
        let d = dec(&boundary(2, 5).unwrap()).unwrap();
        assert!(d.audit().is_empty());
        assert!(dec(&delta(0, 0).unwrap()).is_err());
    }
}
