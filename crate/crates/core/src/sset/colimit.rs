use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;
use crate::util::UnionFind;

/// A finite diagram: objects plus arrows `(from, to, map)`.
#[derive(Debug, Clone, Default)]
pub struct SsetDiagram {
    pub objects: Vec<Arc<SimplicialSet>>,
    pub arrows: Vec<(usize, usize, SimplicialMap)>,
}

/// A colimit together with its cocone.
#[derive(Debug, Clone)]
pub struct SsetColimit {
    pub object: Arc<SimplicialSet>,
    pub cocone: Vec<SimplicialMap>,
}

/// Degreewise quotient of the coproduct by the relation `x ~ f(x)`.
///
/// The result is pointed when every object is pointed and every arrow keeps
/// basepoints; the basepoint is the image of the first object's basepoint.
pub fn colimit_sset(diagram: &SsetDiagram) -> Result<SsetColimit> {
    let parts: Vec<&SimplicialSet> = diagram.objects.iter().map(|o| o.as_ref()).collect();
    let (coproduct, offsets) = SimplicialSet::coproduct(&parts)?;
    let bound = coproduct.bound();
    let mut relation: Vec<UnionFind> = (0..=bound).map(|n| UnionFind::new(coproduct.size(n))).collect();
    for (from, to, f) in &diagram.arrows {
        let (from, to) = (*from, *to);
        if from >= parts.len() || to >= parts.len() {
            return Err(Error::invalid("arrow endpoint outside the diagram"));
        }
        if f.source().as_ref() != parts[from] || f.target().as_ref() != parts[to] {
            return Err(Error::invalid("arrow does not match its endpoints"));
        }
        for n in 0..=bound {
            for x in 0..parts[from].size(n) as u32 {
                relation[n].union(x + offsets[from][n], f.apply(n, x) + offsets[to][n]);
            }
        }
    }
    let (quotient, proj) = coproduct.quotient(relation)?;
    let pointed = diagram.objects.iter().all(|o| o.is_pointed())
        && diagram.arrows.iter().all(|(_, _, f)| f.preserves_basepoint());
    let basepoint = if pointed && !parts.is_empty() {
        let b = parts[0].basepoint().unwrap();
        Some(proj[0][(b + offsets[0][0]) as usize])
    } else {
        None
    };
    let object = Arc::new(quotient.with_basepoint(basepoint)?);
    let cocone = parts
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let components = (0..=bound)
                .map(|n| (0..p.size(n) as u32).map(|x| proj[n][(x + offsets[k][n]) as usize]).collect())
                .collect();
            SimplicialMap::new_unchecked(diagram.objects[k].clone(), object.clone(), components)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SsetColimit { object, cocone })
}

/// Pushout of `b <- a -> c`; cocone order is `(b, c)`.
pub fn pushout_sset(f: &SimplicialMap, g: &SimplicialMap) -> Result<(Arc<SimplicialSet>, SimplicialMap, SimplicialMap)> {
    let diagram = SsetDiagram {
        objects: vec![f.target().clone(), g.target().clone(), f.source().clone()],
        arrows: vec![(2, 0, f.clone()), (2, 1, g.clone())],
    };
    let mut c = colimit_sset(&diagram)?;
    c.cocone.truncate(2);
    let ic = c.cocone.pop().unwrap();
    let ib = c.cocone.pop().unwrap();
    Ok((c.object, ib, ic))
}

pub fn coproduct_sset(objects: &[Arc<SimplicialSet>]) -> Result<SsetColimit> {
    colimit_sset(&SsetDiagram { objects: objects.to_vec(), arrows: Vec::new() })
}

/// The unique map to the one-point simplicial set of the same bound.
pub fn to_point(x: &Arc<SimplicialSet>) -> Result<SimplicialMap> {
    let pt = Arc::new(crate::sset::standard::delta(0, x.bound())?);
    let components = (0..=x.bound()).map(|n| vec![0; x.size(n)]).collect();
    SimplicialMap::new_unchecked(x.clone(), pt, components)
}

/// Inclusion of a subobject given by old indices per degree.
pub fn inclusion_map(sub: Arc<SimplicialSet>, whole: Arc<SimplicialSet>, inclusion: Vec<Vec<u32>>) -> Result<SimplicialMap> {
    SimplicialMap::new(sub, whole, inclusion)
}

/// Vertex sequence of a simplex: its images under the vertex operators.
pub fn vertices_of(x: &SimplicialSet, n: usize, s: u32) -> Vec<u32> {
    (0..=n as u8).map(|k| x.act(n, s, &[k])).collect()
}

/// The map determined by a vertex assignment, for targets whose simplices
/// are determined by their vertex sequences (standard simplices, nerves of
/// preorders and their subobjects).
pub fn map_by_vertices(
    source: &Arc<SimplicialSet>,
    target: &Arc<SimplicialSet>,
    vertex_map: &[u32],
) -> Result<SimplicialMap> {
    let bound = source.bound();
    if target.bound() != bound {
        return Err(Error::BoundMismatch { left: bound, right: target.bound() });
    }
    let mut comps = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let mut index = HashMap::new();
        for y in 0..target.size(n) as u32 {
            if index.insert(vertices_of(target, n, y), y).is_some() {
                return Err(Error::invalid("target simplices are not determined by vertices"));
            }
        }
        let comp = (0..source.size(n) as u32)
            .map(|x| {
                let v: Vec<u32> = vertices_of(source, n, x).iter().map(|&v| vertex_map[v as usize]).collect();
                index.get(&v).copied().ok_or_else(|| Error::invalid("vertex image spans no simplex"))
            })
            .collect::<Result<Vec<_>>>()?;
        comps.push(comp);
    }
    SimplicialMap::new(source.clone(), target.clone(), comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, delta, point, sphere, two_point};

    #[test]
    fn circle_as_pushout() {
        let d1 = Arc::new(delta(1, 2).unwrap());
        let b1 = Arc::new(boundary(1, 2).unwrap());
        let i = map_by_vertices(&b1, &d1, &[0, 1]).unwrap();
        let c = to_point(&b1).unwrap();
        let (p, _, _) = pushout_sset(&c, &i).unwrap();
        assert_eq!(p.sizes(), &[1, 2, 3]);
        let s = sphere(1, 2).unwrap();
        assert_eq!(p.nondegenerate_counts(), s.nondegenerate_counts());
        assert!(p.audit().is_empty());
    }

    #[test]
    fn coproduct_of_points() {
        let p = Arc::new(delta(0, 3).unwrap());
        let c = coproduct_sset(&[p.clone(), p]).unwrap();
        let s0 = two_point(3).unwrap();
        assert_eq!(c.object.sizes(), s0.sizes());
        assert_eq!(c.object.basepoint(), None);
    }

    #[test]
    fn pushout_along_identity() {
        let d2 = Arc::new(delta(2, 3).unwrap());
        let id = SimplicialMap::identity(d2.clone());
        let pt = Arc::new(point(3).unwrap());
        let v = SimplicialMap::new(pt.clone(), d2.clone(), (0..=3).map(|_| vec![0]).collect()).unwrap();
        let (p, _, _) = pushout_sset(&v, &SimplicialMap::identity(pt)).unwrap();
        assert_eq!(p.sizes(), d2.sizes());
        let (p, _, _) = pushout_sset(&id, &id).unwrap();
        assert_eq!(p.sizes(), d2.sizes());
    }
}
