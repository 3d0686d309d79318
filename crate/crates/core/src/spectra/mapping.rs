use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scat::{diag_nerve_iso, SimplicialCategory};
use crate::sset::colimit::vertices_of;
use crate::sset::standard::delta;
use crate::sset::{enumerate_maps, map_by_vertices, product_sset, SimplicialMap, SimplicialSet};
use crate::util::{codegeneracy, coface, UnionFind};

/// `X ⋉ Δⁿ = (X × Δⁿ)/({x₀} × Δⁿ)` with its projection per degree.
struct HalfSmash {
    space: Arc<SimplicialSet>,
    proj: Vec<Vec<u32>>,
    /// one preimage per class
    reps: Vec<Vec<u32>>,
    simplex_sizes: Vec<usize>,
}

fn half_smash(x: &SimplicialSet, n: usize, bound: usize) -> Result<HalfSmash> {
    let d = delta(n, bound)?;
    let p = product_sset(x, &d)?;
    let x0 = x.basepoint().ok_or_else(|| Error::invalid("mapping spaces need a pointed source"))?;
    let mut relation = Vec::with_capacity(bound + 1);
    for m in 0..=bound {
        let mut uf = UnionFind::new(p.size(m));
        let a = x.act(0, x0, &vec![0; m + 1]);
        let ds = d.size(m) as u32;
        for b in 1..ds {
            uf.union(a * ds, a * ds + b);
        }
        relation.push(uf);
    }
    let (q, proj) = p.quotient(relation)?;
    let q = q.with_basepoint(Some(proj[0][(x.act(0, x0, &[0]) * d.size(0) as u32) as usize]))?;
    let reps = proj
        .iter()
        .enumerate()
        .map(|(m, pr)| {
            let mut r = vec![u32::MAX; q.size(m)];
            for (k, &c) in pr.iter().enumerate().rev() {
                r[c as usize] = k as u32;
            }
            r
        })
        .collect();
    Ok(HalfSmash { space: Arc::new(q), proj, reps, simplex_sizes: d.sizes().to_vec() })
}

/// The map `X ⋉ Δᵐ -> X ⋉ Δⁿ` induced by a map of standard simplices.
fn induced(from: &HalfSmash, to: &HalfSmash, theta: &SimplicialMap) -> Result<SimplicialMap> {
    let comps = (0..=from.space.bound())
        .map(|m| {
            let (fs, ts) = (from.simplex_sizes[m] as u32, to.simplex_sizes[m] as u32);
            from.reps[m]
                .iter()
                .map(|&k| to.proj[m][((k / fs) * ts + theta.apply(m, k % fs)) as usize])
                .collect()
        })
        .collect();
    SimplicialMap::new_unchecked(from.space.clone(), to.space.clone(), comps)
}

/// `Map(X, Y)` for `Y = diag N•iso C`, through degree `n_max`.
#[derive(Debug, Clone)]
pub struct MappingSpace {
    pub space: Arc<SimplicialSet>,
    /// `diag N•iso C` at its full bound
    pub target: Arc<SimplicialSet>,
    /// the maps `X ⋉ Δⁿ -> Y` forming degree `n`
    pub simplices: Vec<Vec<SimplicialMap>>,
    sources: Vec<Arc<SimplicialSet>>,
    source_proj: Vec<Vec<Vec<u32>>>,
    source_simplex_sizes: Vec<Vec<usize>>,
}

/// Pointed maps `X × Δⁿ -> diag N•iso C` sending `{x₀} × Δⁿ` to the
/// basepoint, for `n ≤ n_max`. Needs `Y` at bound at least `dim X + n_max`.
pub fn mapping_space(x: &SimplicialSet, c: &SimplicialCategory, n_max: usize) -> Result<MappingSpace> {
    if !c.is_pointed() {
        return Err(Error::invalid("mapping spaces need a pointed target"));
    }
    let y = Arc::new(diag_nerve_iso(c)?);
    mapping_space_into(x, &y, n_max)
}

/// [`mapping_space`] into a given pointed simplicial set.
pub fn mapping_space_into(x: &SimplicialSet, y: &Arc<SimplicialSet>, n_max: usize) -> Result<MappingSpace> {
    let bound = x.bound().min(y.bound());
    let dim = x.dimension().unwrap_or(0);
    if dim + n_max > bound {
        return Err(Error::Uncertified { degree: dim + n_max, bound });
    }
    let x = if x.bound() > bound { x.truncate(bound)? } else { x.clone() };
    let smashes = (0..=n_max).map(|n| half_smash(&x, n, bound)).collect::<Result<Vec<_>>>()?;
    let mut simplices = Vec::with_capacity(n_max + 1);
    let mut index: Vec<HashMap<Vec<Vec<u32>>, u32>> = Vec::with_capacity(n_max + 1);
    for h in &smashes {
        let maps = enumerate_maps(&h.space, y, true)?;
        index.push(maps.iter().enumerate().map(|(i, f)| (f.components().to_vec(), i as u32)).collect());
        simplices.push(maps);
    }
    let deltas = (0..=n_max + 1).map(|n| delta(n, bound).map(Arc::new)).collect::<Result<Vec<_>>>()?;
    let pull = |from: usize, to: usize, theta: &SimplicialMap, f: &SimplicialMap| -> Result<u32> {
        let g = induced(&smashes[from], &smashes[to], theta)?.then(f)?;
        index[from].get(g.components()).copied().ok_or_else(|| Error::invalid("precomposite is not a pointed map"))
    };
    let mut faces = vec![Vec::new(); n_max + 1];
    let mut degens = vec![Vec::new(); n_max + 1];
    for n in 0..=n_max {
        if n > 0 {
            for i in 0..=n {
                let theta = map_by_vertices(&deltas[n - 1], &deltas[n], &to_u32(&coface(n, i)))?;
                faces[n].push(simplices[n].iter().map(|f| pull(n - 1, n, &theta, f)).collect::<Result<Vec<_>>>()?);
            }
        }
        if n < n_max {
            for j in 0..=n {
                let theta = map_by_vertices(&deltas[n + 1], &deltas[n], &to_u32(&codegeneracy(n, j)))?;
                degens[n].push(simplices[n].iter().map(|f| pull(n + 1, n, &theta, f)).collect::<Result<Vec<_>>>()?);
            }
        }
    }
    let constant = simplices[0]
        .iter()
        .position(|f| f.components()[0].iter().all(|&v| Some(v) == y.basepoint()))
        .map(|i| i as u32);
    let sizes = simplices.iter().map(Vec::len).collect();
    let space = SimplicialSet::from_tables(n_max, sizes, faces, degens, constant)?;
    Ok(MappingSpace {
        space: Arc::new(space),
        target: y.clone(),
        sources: smashes.iter().map(|h| h.space.clone()).collect(),
        source_proj: smashes.iter().map(|h| h.proj.clone()).collect(),
        source_simplex_sizes: smashes.iter().map(|h| h.simplex_sizes.clone()).collect(),
        simplices,
    })
}

fn to_u32(theta: &[u8]) -> Vec<u32> {
    theta.iter().map(|&k| k as u32).collect()
}

impl MappingSpace {
    pub fn degrees(&self) -> usize {
        self.space.bound()
    }

    /// Evaluation at the simplex `(v, ιₙ)`: `Map(X, Y) -> Y` through the
    /// computed degrees.
    pub fn evaluate_at(&self, x: &SimplicialSet, v: u32) -> Result<SimplicialMap> {
        let top = self.degrees();
        let y = Arc::new(self.target.truncate(top)?);
        let mut comps = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let d = delta(n, self.sources[n].bound())?;
            let iota = (0..d.size(n) as u32)
                .find(|&s| vertices_of(&d, n, s) == (0..=n as u32).collect::<Vec<_>>())
                .expect("standard simplex has a top simplex");
            let vn = x.act(0, v, &vec![0; n + 1]);
            let k = vn * self.source_simplex_sizes[n][n] as u32 + iota;
            let cls = self.source_proj[n][n][k as usize];
            comps.push(self.simplices[n].iter().map(|f| f.apply(n, cls)).collect());
        }
        SimplicialMap::new(self.space.clone(), y, comps)
    }
}

/// Bijective in every degree.
pub fn is_degreewise_bijection(f: &SimplicialMap) -> bool {
    f.is_injective() && (0..=f.source().bound()).all(|n| f.source().size(n) == f.target().size(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCategory;
    use crate::sset::standard::{point, two_point};

    fn s0_source(bound: usize) -> SimplicialSet {
        two_point(bound).unwrap().with_basepoint(Some(0)).unwrap()
    }

    #[test]
    fn maps_out_of_s0_are_simplices() {
        let c = SimplicialCategory::s0(3);
        let m = mapping_space(&s0_source(3), &c, 3).unwrap();
        assert_eq!(m.space.size(0), 2);
        assert!(m.space.audit().is_empty());
        let ev = m.evaluate_at(&s0_source(3), 1).unwrap();
        assert!(is_degreewise_bijection(&ev));
    }

    #[test]
    fn group_target() {
        let c = SimplicialCategory::constant(FinCategory::cyclic_group(2), 3).pointed_at(0).unwrap();
        let m = mapping_space(&s0_source(3), &c, 3).unwrap();
        assert_eq!(m.space.sizes(), &[1, 2, 4, 8]);
        assert!(is_degreewise_bijection(&m.evaluate_at(&s0_source(3), 1).unwrap()));
    }

    #[test]
    fn point_source_gives_a_point() {
        let x = point(2).unwrap().with_basepoint(Some(0)).unwrap();
        let m = mapping_space(&x, &SimplicialCategory::s0(2), 2).unwrap();
        assert_eq!(m.space.sizes(), &[1, 1, 1]);
    }

    #[test]
    fn too_short_target_is_uncertified() {
        let x = crate::sset::standard::sphere(1, 3).unwrap();
        let e = mapping_space(&x, &SimplicialCategory::s0(2), 2).unwrap_err();
        assert!(matches!(e, Error::Uncertified { .. }));
    }
}
