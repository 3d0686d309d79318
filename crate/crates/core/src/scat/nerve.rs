use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::nerve::{chain_degen, chain_face};
use crate::cat::{chains, iso_subgroupoid, FinCategory, Functor};
use crate::error::{Error, Result};
use crate::scat::category::{SimplicialCategory, SimplicialFunctor};
use crate::sset::{diag, diag_map, wbar, wbar_map, BidegreeShape, BisimplicialMap, BisimplicialSet, SimplicialMap, SimplicialSet};

/// `iso(C_n)` with the translation between old and new morphism indices.
struct IsoLevel {
    groupoid: FinCategory,
    kept: Vec<u32>,
    new_of_old: HashMap<u32, u32>,
}

impl IsoLevel {
    fn new(c: &FinCategory) -> Self {
        let (groupoid, kept) = iso_subgroupoid(c);
        let new_of_old = kept.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        IsoLevel { groupoid, kept, new_of_old }
    }

    /// Image of a chain of this level under `f`, landing in `to`.
    fn push(&self, f: &Functor, to: &IsoLevel, p: usize, ch: &[u32]) -> Vec<u32> {
        if p == 0 {
            vec![f.on_object(ch[0])]
        } else {
            ch.iter().map(|&m| to.new_of_old[&f.on_morphism(self.kept[m as usize])]).collect()
        }
    }
}

struct IsoNerve {
    bisimplicial: BisimplicialSet,
    keys: Vec<Vec<Vec<Vec<u32>>>>,
}

fn iso_nerve(c: &SimplicialCategory, d: usize) -> Result<IsoNerve> {
    let bound = c.bound();
    let isos: Vec<IsoLevel> = c.levels().iter().map(|l| IsoLevel::new(l)).collect();
    let shape = BidegreeShape::rectangle(d, bound);
    let keys: Vec<Vec<Vec<Vec<u32>>>> =
        (0..=d).map(|p| (0..=bound).map(|n| chains(&isos[n].groupoid, p)).collect()).collect();
    let b = BisimplicialSet::from_keys(
        shape,
        &keys,
        |p, n, i, k| chain_face(&isos[n].groupoid, p, i, k),
        |p, n, j, k| chain_degen(&isos[n].groupoid, p, j, k),
        |p, n, i, k| isos[n].push(c.face(n, i), &isos[n - 1], p, k),
        |p, n, j, k| isos[n].push(c.degen(n, j), &isos[n + 1], p, k),
    )?;
    let b = b.with_basepoint(c.basepoint_at(0))?;
    Ok(IsoNerve { bisimplicial: b, keys })
}

/// `N•iso` applied levelwise: bidegree `(p, n)` holds the `p`-chains of
/// `iso(C_n)`, for `p <= d`.
pub fn nerve_iso_levelwise(c: &SimplicialCategory, d: usize) -> Result<BisimplicialSet> {
    Ok(iso_nerve(c, d)?.bisimplicial)
}

/// `N•iso(F)` on the rectangle `p <= d`.
pub fn nerve_iso_levelwise_map(f: &SimplicialFunctor, d: usize) -> Result<BisimplicialMap> {
    let (s, t) = (f.source(), f.target());
    let bound = s.bound();
    let t = if t.bound() > bound { Arc::new(t.truncate(bound)?) } else { t.clone() };
    let sn = iso_nerve(s, d)?;
    let tn = iso_nerve(&t, d)?;
    let s_iso: Vec<IsoLevel> = s.levels().iter().map(|l| IsoLevel::new(l)).collect();
    let t_iso: Vec<IsoLevel> = t.levels().iter().map(|l| IsoLevel::new(l)).collect();
    let mut components = vec![vec![Vec::new(); bound + 1]; d + 1];
    for (p, row) in components.iter_mut().enumerate() {
        for (n, comp) in row.iter_mut().enumerate() {
            let index: HashMap<&Vec<u32>, u32> = tn.keys[p][n].iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
            *comp = sn.keys[p][n].iter().map(|k| index[&s_iso[n].push(f.level(n), &t_iso[n], p, k)]).collect();
        }
    }
    BisimplicialMap::new_unchecked(Arc::new(sn.bisimplicial), Arc::new(tn.bisimplicial), components)
}

/// `diag N•iso C` up to the bound of `C`; pointed when `C` is.
pub fn diag_nerve_iso(c: &SimplicialCategory) -> Result<SimplicialSet> {
    diag(&nerve_iso_levelwise(c, c.bound())?)
}

pub fn diag_nerve_iso_map(f: &SimplicialFunctor) -> Result<SimplicialMap> {
    diag_map(&nerve_iso_levelwise_map(f, f.source().bound())?)
}

/// `W̄ N•iso C` up to the bound of `C`.
pub fn wbar_nerve_iso(c: &SimplicialCategory) -> Result<SimplicialSet> {
    wbar(&nerve_iso_levelwise(c, c.bound())?)
}

pub fn wbar_nerve_iso_map(f: &SimplicialFunctor) -> Result<SimplicialMap> {
    wbar_map(&nerve_iso_levelwise_map(f, f.source().bound())?)
}

/// `diag N•iso C` truncated to `bound`, which may not exceed that of `C`.
pub fn diag_nerve_iso_to(c: &SimplicialCategory, bound: usize) -> Result<SimplicialSet> {
    if bound > c.bound() {
        return Err(Error::BoundTooSmall { bound: c.bound(), reason: format!("diagonal nerve requested to degree {bound}") });
    }
    diag_nerve_iso(&c.truncate(bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::nerve;
    use crate::homotopy::{homology, pi0, AbelianGroup};
    use crate::scat::pi::pi_levelwise;
    use crate::sset::d_star;
    use crate::sset::standard::{boundary, delta};

    #[test]
    fn constant_and_terminal() {
        let z2 = SimplicialCategory::constant(FinCategory::cyclic_group(2), 4);
        let b = nerve_iso_levelwise(&z2, 4).unwrap();
        assert!(b.audit().is_empty());
        let n = nerve(&FinCategory::cyclic_group(2), 4).unwrap();
        for q in 0..=4 {
            assert_eq!(b.row(q).unwrap(), n);
        }
        let d = diag_nerve_iso(&z2).unwrap();
        assert_eq!(d, n);
        assert_eq!(homology(&d, 1).unwrap(), AbelianGroup::cyclic(2));
        let t = diag_nerve_iso(&SimplicialCategory::terminal(3)).unwrap();
        assert_eq!(t.sizes(), &[1, 1, 1, 1]);
    }

    #[test]
    fn level_sizes_of_pi_dstar_interval() {
        let c = pi_levelwise(&d_star(&delta(1, 6).unwrap()).unwrap(), 100).unwrap();
        let b = nerve_iso_levelwise(&c, 3).unwrap();
        assert!(b.audit().is_empty());
        for n in 0..=c.bound() {
            for p in 0..=3 {
                assert_eq!(b.size(p, n), (n + 2) << (p + 1));
            }
        }
    }

    #[test]
    fn s0_diagonal_has_two_components() {
        let d = diag_nerve_iso(&SimplicialCategory::s0(3)).unwrap();
        assert_eq!(pi0(&d).count, 2);
        assert_eq!(d.basepoint(), Some(0));
    }

    #[test]
    fn dstar_boundary_recovers_circle_homology() {
        let x = boundary(2, 6).unwrap();
        let c = pi_levelwise(&d_star(&x).unwrap(), 1000).unwrap();
        let d = diag_nerve_iso(&c).unwrap();
        for i in 0..=1 {
            assert_eq!(homology(&d, i).unwrap(), homology(&x, i).unwrap());
        }
    }

    #[test]
    fn map_of_identity_is_identity() {
        let c = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2));
        let m = diag_nerve_iso_map(&SimplicialFunctor::identity(c.clone())).unwrap();
        assert!(m.violation().is_none());
        for n in 0..=2 {
            assert!(m.components()[n].iter().enumerate().all(|(i, &y)| i as u32 == y));
        }
    }
}
