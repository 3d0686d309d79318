use std::sync::Arc;

use crate::cat::Functor;
use crate::error::{Error, Result};
use crate::scat::category::{SimplicialCategory, SimplicialFunctor};
use crate::scat::colimit::{colimit_scat, ScatColimit, ScatDiagram};
use crate::scat::pi::{rho, rho_map, PiLevelwise, RhoChoice};
use crate::sset::standard::{point, sphere};
use crate::sset::{SimplicialMap, SimplicialSet};

/// The map `Δ⁰ -> X` picking the vertex `v`.
pub fn vertex_map(x: &Arc<SimplicialSet>, v: u32) -> Result<SimplicialMap> {
    let pt = Arc::new(point(x.bound())?);
    let comps = (0..=x.bound()).map(|n| vec![x.act(0, v, &vec![0; n + 1])]).collect();
    SimplicialMap::new_unchecked(pt, x.clone(), comps)
}

/// Levelwise `F × G` between levelwise products.
pub fn product_functor(
    f: &SimplicialFunctor,
    g: &SimplicialFunctor,
    source: Arc<SimplicialCategory>,
    target: Arc<SimplicialCategory>,
) -> Result<SimplicialFunctor> {
    let levels = (0..=source.bound())
        .map(|n| Functor::product(f.level(n), g.level(n), source.level(n).clone(), target.level(n).clone()))
        .collect::<Result<Vec<_>>>()?;
    SimplicialFunctor::new_unchecked(source, target, levels)
}

/// The simplicial functor constant at the basepoint of `target`.
pub fn constant_at_basepoint(source: Arc<SimplicialCategory>, target: Arc<SimplicialCategory>) -> Result<SimplicialFunctor> {
    let bp = target.basepoint().ok_or_else(|| Error::invalid("target is not pointed"))?.to_vec();
    let levels = (0..=source.bound()).map(|n| Functor::constant(source.level(n).clone(), target.level(n).clone(), bp[n])).collect();
    SimplicialFunctor::new_unchecked(source, target, levels)
}

/// Levels available for `C ⊗ρ X`.
pub fn tensor_levels(c: &SimplicialCategory, x: &SimplicialSet) -> Result<usize> {
    if x.bound() < 3 {
        return Err(Error::BoundTooSmall { bound: x.bound(), reason: "rho needs bound at least 3".into() });
    }
    Ok(c.bound().min(x.bound() - 3))
}

#[derive(Debug, Clone)]
pub struct Tensor {
    pub category: Arc<SimplicialCategory>,
    pub rho: PiLevelwise,
}

/// `C ⊗ρ X = C × ρX`, levelwise.
pub fn tensor_rho(c: &SimplicialCategory, x: &SimplicialSet, choice: RhoChoice, closure_bound: usize) -> Result<Tensor> {
    let levels = tensor_levels(c, x)?;
    let r = rho(x, choice, levels, closure_bound)?;
    let category = Arc::new(c.truncate(levels)?.product(&r.category)?);
    Ok(Tensor { category, rho: r })
}

/// `C ∧ρ X` with the colimit data behind it.
#[derive(Debug, Clone)]
pub struct Smash {
    pub category: Arc<SimplicialCategory>,
    pub colimit: ScatColimit,
    /// `C ⊗ρ X`, diagram object 1.
    pub tensor: Arc<SimplicialCategory>,
    pub rho: PiLevelwise,
}

/// Index of `C ⊗ρ X` in the smash diagram.
const TENSOR: usize = 1;

/// `C ∧ρ X` for pointed `C` and `X`: the levelwise colimit collapsing both
/// `∗ ⊗ρ X` and `C ⊗ρ {x₀}` to the basepoint. Diagram objects are, in order,
/// the point, `C ⊗ρ X`, `∗ ⊗ρ X` and `C ⊗ρ {x₀}`.
pub fn smash(c: &SimplicialCategory, x: &SimplicialSet, choice: RhoChoice, closure_bound: usize) -> Result<Smash> {
    let x0 = x.basepoint().ok_or_else(|| Error::invalid("smash needs a pointed simplicial set"))?;
    let cb = c.basepoint().ok_or_else(|| Error::invalid("smash needs a pointed simplicial category"))?;
    let levels = tensor_levels(c, x)?;
    let x = Arc::new(x.clone());
    let c = Arc::new(c.truncate(levels)?);
    let r = rho(&x, choice, levels, closure_bound)?;
    let v = vertex_map(&x, x0)?;
    let r0 = rho(v.source(), choice, levels, closure_bound)?;
    let rv = rho_map(&v, choice, &r0, &r)?;

    let pt = Arc::new(SimplicialCategory::terminal(levels));
    let a = Arc::new(c.product(&r.category)?);
    let b = Arc::new(pt.product(&r.category)?);
    let e = Arc::new(c.product(&r0.category)?);
    let bp = SimplicialFunctor::new_unchecked(
        pt.clone(),
        c.clone(),
        (0..=levels).map(|n| Functor::constant(pt.level(n).clone(), c.level(n).clone(), cb[n])).collect(),
    )?;
    let b_to_a = product_functor(&bp, &SimplicialFunctor::identity(r.category.clone()), b.clone(), a.clone())?;
    let e_to_a = product_functor(&SimplicialFunctor::identity(c.clone()), &rv, e.clone(), a.clone())?;
    let d = ScatDiagram {
        objects: vec![pt.clone(), a.clone(), b.clone(), e.clone()],
        arrows: vec![
            (2, 1, b_to_a),
            (2, 0, constant_at_basepoint(b, pt.clone())?),
            (3, 1, e_to_a),
            (3, 0, constant_at_basepoint(e, pt)?),
        ],
    };
    let colimit = colimit_scat(&d, closure_bound)?;
    Ok(Smash { category: colimit.category.clone(), colimit, tensor: a, rho: r })
}

/// `C ⊙ρ X` for unpointed `X`: `C ⊗ρ X` with `∗ ⊗ρ X` collapsed.
pub fn odot(c: &SimplicialCategory, x: &SimplicialSet, choice: RhoChoice, closure_bound: usize) -> Result<Smash> {
    let cb = c.basepoint().ok_or_else(|| Error::invalid("odot needs a pointed simplicial category"))?;
    let levels = tensor_levels(c, x)?;
    let c = Arc::new(c.truncate(levels)?);
    let r = rho(x, choice, levels, closure_bound)?;
    let pt = Arc::new(SimplicialCategory::terminal(levels));
    let a = Arc::new(c.product(&r.category)?);
    let b = Arc::new(pt.product(&r.category)?);
    let bp = SimplicialFunctor::new_unchecked(
        pt.clone(),
        c.clone(),
        (0..=levels).map(|n| Functor::constant(pt.level(n).clone(), c.level(n).clone(), cb[n])).collect(),
    )?;
    let b_to_a = product_functor(&bp, &SimplicialFunctor::identity(r.category.clone()), b.clone(), a.clone())?;
    let d = ScatDiagram {
        objects: vec![pt.clone(), a.clone(), b.clone()],
        arrows: vec![(2, 1, b_to_a), (2, 0, constant_at_basepoint(b, pt)?)],
    };
    let colimit = colimit_scat(&d, closure_bound)?;
    Ok(Smash { category: colimit.category.clone(), colimit, tensor: a, rho: r })
}

impl Smash {
    /// The composite `C ⊗ρ X -> C ∧ρ X`.
    pub fn quotient(&self) -> &SimplicialFunctor {
        &self.colimit.cocone[TENSOR]
    }

    /// The functor `C -> C ∧ρ X` sending `c` to the class of `(c, v)`, for a
    /// vertex `v` of `X`.
    pub fn at_vertex(&self, c: &Arc<SimplicialCategory>, x: &Arc<SimplicialSet>, v: u32, choice: RhoChoice, closure_bound: usize) -> Result<SimplicialFunctor> {
        let levels = self.category.bound();
        let c = if c.bound() > levels { Arc::new(c.truncate(levels)?) } else { c.clone() };
        let vm = vertex_map(x, v)?;
        let r0 = rho(vm.source(), choice, levels, closure_bound)?;
        let rv = rho_map(&vm, choice, &r0, &self.rho)?;
        let e = Arc::new(c.product(&r0.category)?);
        let into = product_functor(&SimplicialFunctor::identity(c.clone()), &rv, e.clone(), self.tensor.clone())?.then(self.quotient())?;
        // C ≅ C × terminal
        let levels_f = (0..=levels)
            .map(|n| Functor::new_unchecked(c.level(n).clone(), self.category.level(n).clone(), into.level(n).object_map().to_vec(), into.level(n).morphism_map().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        SimplicialFunctor::new_unchecked(c, self.category.clone(), levels_f)
    }
}

/// `Σ C = C ∧ S¹` with `S¹ = Δ¹/∂Δ¹` and `ρ = π•Dec`.
pub fn suspend(c: &SimplicialCategory, closure_bound: usize) -> Result<Smash> {
    suspend_with(c, RhoChoice::PiDec, closure_bound)
}

pub fn suspend_with(c: &SimplicialCategory, choice: RhoChoice, closure_bound: usize) -> Result<Smash> {
    smash(c, &sphere(1, c.bound() + 3)?, choice, closure_bound)
}

/// `Σⁿ C`.
pub fn suspend_n(c: &SimplicialCategory, n: usize, closure_bound: usize) -> Result<Arc<SimplicialCategory>> {
    let mut cur = Arc::new(c.clone());
    for _ in 0..n {
        cur = suspend(&cur, closure_bound)?.category;
    }
    Ok(cur)
}

/// The comparison `C ⊙ρ X -> C ∧ρ X₊` induced by `X -> X₊`, for checking
/// `C ∧ X₊ = C ⊙ X`.
pub fn odot_comparison(
    c: &SimplicialCategory,
    x: &SimplicialSet,
    choice: RhoChoice,
    closure_bound: usize,
) -> Result<(Smash, Smash, SimplicialFunctor)> {
    let (xp, incl) = add_disjoint_basepoint(x)?;
    let o = odot(c, x, choice, closure_bound)?;
    let s = smash(c, &xp, choice, closure_bound)?;
    let ri = rho_map(&incl, choice, &o.rho, &s.rho)?;
    let levels = o.category.bound();
    let functors = (0..=levels)
        .map(|n| {
            let on_rho = ri.level(n);
            let rs = o.rho.category.level(n).object_count() as u32;
            let rm = o.rho.category.level(n).morphism_count() as u32;
            let ts = s.rho.category.level(n).object_count() as u32;
            let tm = s.rho.category.level(n).morphism_count() as u32;
            let q = s.quotient().level(n);
            let pt_cocone = s.colimit.cocone[0].level(n);
            o.colimit.levels[n].induced(
                s.category.level(n).clone(),
                |k, ob| match k {
                    0 => pt_cocone.on_object(ob),
                    1 => q.on_object((ob / rs) * ts + on_rho.on_object(ob % rs)),
                    _ => q.on_object(c.basepoint_at(n).unwrap() * ts + on_rho.on_object(ob)),
                },
                |k, m| match k {
                    0 => pt_cocone.on_morphism(m),
                    1 => q.on_morphism((m / rm) * tm + on_rho.on_morphism(m % rm)),
                    _ => {
                        let id = c.level(n).identity(c.basepoint_at(n).unwrap());
                        q.on_morphism(id * tm + on_rho.on_morphism(m))
                    }
                },
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let f = SimplicialFunctor::new_unchecked(o.category.clone(), s.category.clone(), functors)?;
    Ok((o, s, f))
}

/// `X₊ = X ⊔ Δ⁰` pointed at the new vertex, with the inclusion of `X`.
pub fn add_disjoint_basepoint(x: &SimplicialSet) -> Result<(Arc<SimplicialSet>, SimplicialMap)> {
    let pt = point(x.bound())?;
    let (xp, _) = SimplicialSet::coproduct(&[x, &pt])?;
    let xp = Arc::new(xp.with_basepoint(Some(x.size(0) as u32))?);
    let comps = (0..=x.bound()).map(|n| (0..x.size(n) as u32).collect()).collect();
    let incl = SimplicialMap::new_unchecked(Arc::new(x.clone().with_basepoint(None)?), xp.clone(), comps)?;
    Ok((xp, incl))
}

/// Whether two pointed simplicial categories are isomorphic through the
/// given functor, level by level.
pub fn is_isomorphism(f: &SimplicialFunctor) -> bool {
    f.violation().is_none() && f.levels().iter().all(Functor::is_isomorphism)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinCategory;
    use crate::homotopy::{reduced_homology_all, AbelianGroup};
    use crate::scat::nerve::diag_nerve_iso;
    use crate::sset::standard::{delta, two_point};

    const CB: usize = 10_000;

    #[test]
    fn tensor_with_point_and_interval() {
        let z2 = SimplicialCategory::constant(FinCategory::cyclic_group(2), 2);
        let t = tensor_rho(&z2, &delta(0, 5).unwrap(), RhoChoice::PiDec, CB).unwrap();
        assert!(t.category.levels().iter().all(|l| **l == FinCategory::cyclic_group(2)));
        let t = tensor_rho(&z2, &delta(1, 5).unwrap(), RhoChoice::PiDec, CB).unwrap();
        assert_eq!(t.category.level(0).object_count(), 3);
        assert!(t.category.audit().is_empty());
    }

    #[test]
    fn smash_with_s0_is_identity() {
        let c = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2).pointed_at(1).unwrap());
        let x = Arc::new(two_point(5).unwrap());
        let s = smash(&c, &x, RhoChoice::PiDec, CB).unwrap();
        let f = s.at_vertex(&c, &x, 1, RhoChoice::PiDec, CB).unwrap();
        assert!(is_isomorphism(&f));
        assert!(f.preserves_basepoint());
    }

    #[test]
    fn terminal_smash_is_terminal() {
        let s = smash(&SimplicialCategory::terminal(2), &sphere(1, 5).unwrap(), RhoChoice::PiDec, CB).unwrap();
        assert_eq!(*s.category, SimplicialCategory::terminal(2));
        assert_eq!(*suspend(&SimplicialCategory::terminal(2), CB).unwrap().category, SimplicialCategory::terminal(2));
    }

    #[test]
    fn suspensions_of_s0_are_spheres() {
        let s1 = suspend(&SimplicialCategory::s0(3), CB).unwrap().category;
        assert!(s1.audit().is_empty());
        let h = reduced_homology_all(&diag_nerve_iso(&s1).unwrap()).unwrap();
        assert_eq!(&h[..2], &[AbelianGroup::trivial(), AbelianGroup::free(1)]);
        let s2 = suspend(&s1, CB).unwrap().category;
        let h = reduced_homology_all(&diag_nerve_iso(&s2).unwrap()).unwrap();
        assert_eq!(&h[..3], &[AbelianGroup::trivial(), AbelianGroup::trivial(), AbelianGroup::free(1)]);
    }

    #[test]
    fn smash_with_disjoint_basepoint_is_odot() {
        let z2 = SimplicialCategory::constant(FinCategory::cyclic_group(2), 2).pointed_at(0).unwrap();
        let ch = SimplicialCategory::constant(FinCategory::chaotic(2), 2).pointed_at(0).unwrap();
        // rows of Dec Δ¹ have two components and Z/2 ∨ Z/2 is infinite, so Z/2 only meets Δ⁰
        for (c, x) in [(&z2, delta(0, 5).unwrap()), (&ch, delta(1, 5).unwrap()), (&ch, two_point(5).unwrap())] {
            let (_, _, f) = odot_comparison(c, &x, RhoChoice::PiDec, CB).unwrap();
            assert!(is_isomorphism(&f));
        }
    }
}
