use std::sync::Arc;

use crate::cat::{enumerate_functors_where, Functor};
use crate::error::{Error, Result};
use crate::scat::category::{SimplicialCategory, SimplicialFunctor};
use crate::util::UnionFind;

/// Images forced on level `n` by the degeneracies from level `n - 1`;
/// `None` when two degeneracies disagree.
fn forced(c: &SimplicialCategory, d: &SimplicialCategory, n: usize, prev: &Functor) -> Option<(Vec<Option<u32>>, Vec<Option<u32>>)> {
    let level = c.level(n);
    let mut objects = vec![None; level.object_count()];
    let mut morphisms = vec![None; level.morphism_count()];
    for j in 0..n {
        let (sc, sd) = (c.degen(n - 1, j), d.degen(n - 1, j));
        for y in 0..c.level(n - 1).object_count() as u32 {
            let (x, t) = (sc.on_object(y), sd.on_object(prev.on_object(y)));
            match objects[x as usize] {
                Some(u) if u != t => return None,
                _ => objects[x as usize] = Some(t),
            }
        }
        for y in 0..c.level(n - 1).morphism_count() as u32 {
            let (x, t) = (sc.on_morphism(y), sd.on_morphism(prev.on_morphism(y)));
            match morphisms[x as usize] {
                Some(u) if u != t => return None,
                _ => morphisms[x as usize] = Some(t),
            }
        }
    }
    Some((objects, morphisms))
}

/// Functors at level `n` compatible with `prev` at level `n - 1`.
fn level_candidates(
    c: &SimplicialCategory,
    d: &SimplicialCategory,
    n: usize,
    prev: Option<&Functor>,
    fixed: &dyn Fn(usize, u32) -> Option<u32>,
    cap: usize,
) -> Result<Vec<Functor>> {
    let (cn, dn) = (c.level(n), d.level(n));
    let (fo, fm) = match prev {
        None => (vec![None; cn.object_count()], vec![None; cn.morphism_count()]),
        Some(p) => match forced(c, d, n, p) {
            Some(f) => f,
            None => return Ok(Vec::new()),
        },
    };
    let object_ok = |o: u32, t: u32| {
        if fixed(n, o).is_some_and(|u| u != t) {
            return false;
        }
        if fo[o as usize].is_some_and(|u| u != t) {
            return false;
        }
        match prev {
            None => true,
            Some(p) => (0..=n).all(|i| d.face(n, i).on_object(t) == p.on_object(c.face(n, i).on_object(o))),
        }
    };
    let morphism_ok = |m: u32, t: u32| {
        if fm[m as usize].is_some_and(|u| u != t) {
            return false;
        }
        match prev {
            None => true,
            Some(p) => (0..=n).all(|i| d.face(n, i).on_morphism(t) == p.on_morphism(c.face(n, i).on_morphism(m))),
        }
    };
    enumerate_functors_where(cn, dn, &object_ok, &morphism_ok, cap)
}

/// All simplicial functors `C -> D` (pointed ones with `pointed`). A target
/// with a larger bound is truncated to the bound of `C`.
pub fn enumerate_simplicial_functors(
    c: &Arc<SimplicialCategory>,
    d: &Arc<SimplicialCategory>,
    pointed: bool,
    cap: usize,
) -> Result<Vec<SimplicialFunctor>> {
    let bound = c.bound();
    if d.bound() < bound {
        return Err(Error::BoundMismatch { left: bound, right: d.bound() });
    }
    if pointed && (!c.is_pointed() || !d.is_pointed()) {
        return Err(Error::invalid("pointed enumeration needs pointed categories"));
    }
    let fixed = |n: usize, o: u32| {
        if pointed && c.basepoint_at(n) == Some(o) { d.basepoint_at(n) } else { None }
    };
    enumerate_simplicial_functors_fixing(c, d, &fixed, cap)
}

/// Simplicial functors with prescribed images `fixed(level, object)` on some
/// objects.
pub fn enumerate_simplicial_functors_fixing(
    c: &Arc<SimplicialCategory>,
    d: &Arc<SimplicialCategory>,
    fixed: &dyn Fn(usize, u32) -> Option<u32>,
    cap: usize,
) -> Result<Vec<SimplicialFunctor>> {
    let bound = c.bound();
    if d.bound() < bound {
        return Err(Error::BoundMismatch { left: bound, right: d.bound() });
    }
    let d = if d.bound() > bound { Arc::new(d.truncate(bound)?) } else { d.clone() };
    let mut out = Vec::new();
    let mut stack: Vec<Functor> = Vec::with_capacity(bound + 1);
    fn go(
        c: &Arc<SimplicialCategory>,
        d: &Arc<SimplicialCategory>,
        fixed: &dyn Fn(usize, u32) -> Option<u32>,
        cap: usize,
        stack: &mut Vec<Functor>,
        out: &mut Vec<SimplicialFunctor>,
    ) -> Result<()> {
        let n = stack.len();
        if n == c.bound() + 1 {
            if out.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(SimplicialFunctor::new_unchecked(c.clone(), d.clone(), stack.clone())?);
            return Ok(());
        }
        for f in level_candidates(c, d, n, stack.last(), fixed, cap)? {
            stack.push(f);
            go(c, d, fixed, cap, stack, out)?;
            stack.pop();
        }
        Ok(())
    }
    go(c, &d, fixed, cap, &mut stack, &mut out)?;
    Ok(out)
}

pub fn count_simplicial_functors(c: &Arc<SimplicialCategory>, d: &Arc<SimplicialCategory>, pointed: bool, cap: usize) -> Result<usize> {
    Ok(enumerate_simplicial_functors(c, d, pointed, cap)?.len())
}

/// `colim_k Hom(A, C_k)` along a chain `C_0 -> C_1 -> …` with transition
/// functors `chain[k] : C_k -> C_{k+1}`: hom-sets glued under
/// postcomposition, counted by union-find.
pub fn colimit_of_hom_counts(a: &Arc<SimplicialCategory>, objects: &[Arc<SimplicialCategory>], chain: &[SimplicialFunctor], cap: usize) -> Result<usize> {
    if chain.len() + 1 != objects.len() {
        return Err(Error::invalid("a chain of k objects needs k - 1 functors"));
    }
    let homs = objects.iter().map(|o| enumerate_simplicial_functors(a, o, false, cap)).collect::<Result<Vec<_>>>()?;
    let mut offsets = Vec::with_capacity(homs.len());
    let mut total = 0u32;
    for h in &homs {
        offsets.push(total);
        total += h.len() as u32;
    }
    let mut uf = UnionFind::new(total as usize);
    for (k, f) in chain.iter().enumerate() {
        let index: std::collections::HashMap<Vec<Vec<u32>>, u32> =
            homs[k + 1].iter().enumerate().map(|(i, g)| (signature(g), i as u32)).collect();
        for (i, g) in homs[k].iter().enumerate() {
            let h = g.then(f)?;
            let j = index.get(&signature(&h)).ok_or_else(|| Error::invalid("postcomposite missing from hom-set"))?;
            uf.union(offsets[k] + i as u32, offsets[k + 1] + j);
        }
    }
    Ok(uf.classes().0)
}

fn signature(f: &SimplicialFunctor) -> Vec<Vec<u32>> {
    f.levels().iter().flat_map(|l| [l.object_map().to_vec(), l.morphism_map().to_vec()]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCategory;

    #[test]
    fn constant_categories_reduce_to_functor_counts() {
        let a = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2));
        let b = Arc::new(SimplicialCategory::constant(FinCategory::cyclic_group(2), 2));
        let direct = crate::cat::enumerate_functors(a.level(0), b.level(0), 1000).unwrap().len();
        assert_eq!(count_simplicial_functors(&a, &b, false, 1000).unwrap(), direct);
        assert_eq!(direct, 2);
    }

    #[test]
    fn pointed_functors_into_s0() {
        let s0 = Arc::new(SimplicialCategory::s0(2));
        assert_eq!(count_simplicial_functors(&s0, &s0, true, 100).unwrap(), 2);
        assert_eq!(count_simplicial_functors(&s0, &s0, false, 100).unwrap(), 4);
        let t = Arc::new(SimplicialCategory::terminal(2));
        assert_eq!(count_simplicial_functors(&t, &s0, true, 100).unwrap(), 1);
    }

    #[test]
    fn every_enumerated_functor_is_simplicial() {
        let a = Arc::new(crate::scat::pi::pi_levelwise(&crate::sset::d_star(&crate::sset::standard::delta(1, 5).unwrap()).unwrap(), 100).unwrap());
        let b = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2));
        let fs = enumerate_simplicial_functors(&a, &b, false, 10_000).unwrap();
        assert!(!fs.is_empty());
        assert!(fs.iter().all(|f| f.violation().is_none()));
    }
}
