use std::sync::Arc;

use crate::cat::{colimit_cat, CatColimit, CatDiagram, FinCategory};
use crate::error::{Error, Result};
use crate::scat::category::{SimplicialCategory, SimplicialFunctor};

/// A finite diagram of simplicial categories; arrows are `(from, to, F)`.
#[derive(Debug, Clone, Default)]
pub struct ScatDiagram {
    pub objects: Vec<Arc<SimplicialCategory>>,
    pub arrows: Vec<(usize, usize, SimplicialFunctor)>,
}

#[derive(Debug, Clone)]
pub struct ScatColimit {
    pub category: Arc<SimplicialCategory>,
    pub cocone: Vec<SimplicialFunctor>,
    pub levels: Vec<CatColimit>,
}

/// Colimits are computed degreewise; the structure functors come from the
/// universal property of each level. The result is pointed when some
/// diagram object is, at the image of the first such basepoint.
pub fn colimit_scat(d: &ScatDiagram, closure_bound: usize) -> Result<ScatColimit> {
    let bound = d.objects.first().ok_or_else(|| Error::invalid("empty diagram"))?.bound();
    if let Some(c) = d.objects.iter().find(|c| c.bound() != bound) {
        return Err(Error::BoundMismatch { left: bound, right: c.bound() });
    }
    for (k, (i, j, f)) in d.arrows.iter().enumerate() {
        if *i >= d.objects.len() || *j >= d.objects.len() || f.source() != &d.objects[*i] || f.target() != &d.objects[*j] {
            return Err(Error::invalid(format!("arrow {k} does not match the diagram objects")));
        }
    }
    let levels = (0..=bound)
        .map(|n| {
            let cd = CatDiagram {
                objects: d.objects.iter().map(|c| c.level(n).clone()).collect(),
                arrows: d.arrows.iter().map(|(i, j, f)| (*i, *j, f.level(n).clone())).collect(),
            };
            colimit_cat(&cd, closure_bound).map_err(|e| e.with_context(format!("level {n}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let cats: Vec<Arc<FinCategory>> = levels.iter().map(|l| l.category.clone()).collect();
    let structure = |n: usize, to: usize, op: &dyn Fn(&SimplicialCategory) -> &crate::cat::Functor| {
        levels[n].induced(
            cats[to].clone(),
            |k, o| levels[to].cocone[k].on_object(op(&d.objects[k]).on_object(o)),
            |k, m| levels[to].cocone[k].on_morphism(op(&d.objects[k]).on_morphism(m)),
        )
    };
    let category = SimplicialCategory::from_fn(
        bound,
        |n| Ok(cats[n].clone()),
        |n, i, _, _| structure(n, n - 1, &|c| c.face(n, i)),
        |n, j, _, _| structure(n, n + 1, &|c| c.degen(n, j)),
    )?;
    let basepoint = d.objects.iter().position(|c| c.is_pointed()).map(|k| {
        (0..=bound).map(|n| levels[n].cocone[k].on_object(d.objects[k].basepoint_at(n).unwrap())).collect()
    });
    let category = Arc::new(category.with_basepoint(basepoint)?);
    let cocone = d
        .objects
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let fs = (0..=bound)
                .map(|n| crate::cat::Functor::new_unchecked(c.level(n).clone(), cats[n].clone(), levels[n].cocone[k].object_map().to_vec(), levels[n].cocone[k].morphism_map().to_vec()))
                .collect::<Result<Vec<_>>>()?;
            SimplicialFunctor::new_unchecked(c.clone(), category.clone(), fs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScatColimit { category, cocone, levels })
}

/// `B ⊔_A C` degreewise, with the two legs into it.
pub fn pushout_scat(
    f: &SimplicialFunctor,
    g: &SimplicialFunctor,
    closure_bound: usize,
) -> Result<(Arc<SimplicialCategory>, SimplicialFunctor, SimplicialFunctor)> {
    if f.source() != g.source() {
        return Err(Error::invalid("pushout legs must share their source"));
    }
    let d = ScatDiagram {
        objects: vec![f.source().clone(), f.target().clone(), g.target().clone()],
        arrows: vec![(0, 1, f.clone()), (0, 2, g.clone())],
    };
    let mut out = colimit_scat(&d, closure_bound)?;
    let ic = out.cocone.pop().unwrap();
    let ib = out.cocone.pop().unwrap();
    Ok((out.category, ib, ic))
}

/// Degreewise equalizer of two parallel simplicial functors, with its inclusion.
pub fn equalizer_scat(f: &SimplicialFunctor, g: &SimplicialFunctor) -> Result<(Arc<SimplicialCategory>, SimplicialFunctor)> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::invalid("equalizer needs parallel functors"));
    }
    let src = f.source();
    let eqs = (0..=src.bound())
        .map(|n| crate::cat::equalizer_cat(f.level(n), g.level(n)))
        .collect::<Result<Vec<_>>>()?;
    let cats: Vec<Arc<FinCategory>> = eqs.iter().map(|(e, _)| Arc::new(e.clone())).collect();
    // structure functors restrict because f and g commute with them
    let restrict = |n: usize, to: usize, op: &crate::cat::Functor| -> Result<crate::cat::Functor> {
        let (inc_n, inc_to) = (&eqs[n].1, &eqs[to].1);
        let obj_back = |o: u32| inc_to.object_map().iter().position(|&x| x == o).map(|p| p as u32);
        let mor_back = |m: u32| inc_to.morphism_map().iter().position(|&x| x == m).map(|p| p as u32);
        let objects = inc_n
            .object_map()
            .iter()
            .map(|&o| obj_back(op.on_object(o)).ok_or_else(|| Error::invalid("structure functor leaves the equalizer")))
            .collect::<Result<Vec<_>>>()?;
        let morphisms = inc_n
            .morphism_map()
            .iter()
            .map(|&m| mor_back(op.on_morphism(m)).ok_or_else(|| Error::invalid("structure functor leaves the equalizer")))
            .collect::<Result<Vec<_>>>()?;
        crate::cat::Functor::new_unchecked(cats[n].clone(), cats[to].clone(), objects, morphisms)
    };
    let e = SimplicialCategory::from_fn(
        src.bound(),
        |n| Ok(cats[n].clone()),
        |n, i, _, _| restrict(n, n - 1, src.face(n, i)),
        |n, j, _, _| restrict(n, n + 1, src.degen(n, j)),
    )?;
    let e = Arc::new(e);
    let inc = (0..=src.bound())
        .map(|n| crate::cat::Functor::new_unchecked(cats[n].clone(), src.level(n).clone(), eqs[n].1.object_map().to_vec(), eqs[n].1.morphism_map().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let inc = SimplicialFunctor::new_unchecked(e.clone(), src.clone(), inc)?;
    Ok((e, inc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_of_terminals_is_s0() {
        let t = Arc::new(SimplicialCategory::constant(FinCategory::terminal(), 3));
        let c = colimit_scat(&ScatDiagram { objects: vec![t.clone(), t], arrows: vec![] }, 100).unwrap();
        assert_eq!(*c.category, SimplicialCategory::constant(FinCategory::discrete(2), 3));
        assert!(c.cocone.iter().all(|f| f.violation().is_none()));
    }

    #[test]
    fn pushout_along_identity() {
        let a = Arc::new(SimplicialCategory::constant(FinCategory::terminal(), 2));
        let b = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(3), 2));
        let f = SimplicialFunctor::new(a.clone(), b.clone(), (0..=2).map(|_| crate::cat::Functor::constant(a.level(0).clone(), b.level(0).clone(), 1)).collect()).unwrap();
        let (p, ib, _) = pushout_scat(&f, &SimplicialFunctor::identity(a), 100).unwrap();
        assert!(p.audit().is_empty());
        assert!(ib.levels().iter().all(|l| l.is_isomorphism()));
    }

    #[test]
    fn levelwise_groupoid_pushout() {
        let a = Arc::new(SimplicialCategory::constant(FinCategory::terminal(), 2));
        let b = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2));
        let c = Arc::new(SimplicialCategory::constant(FinCategory::cyclic_group(2), 2));
        let leg = |t: &Arc<SimplicialCategory>| {
            SimplicialFunctor::new(a.clone(), t.clone(), (0..=2).map(|n| crate::cat::Functor::constant(a.level(n).clone(), t.level(n).clone(), 0)).collect()).unwrap()
        };
        let (p, _, _) = pushout_scat(&leg(&b), &leg(&c), 100).unwrap();
        assert!(p.audit().is_empty());
        assert!(p.levels().iter().all(|l| l.morphism_count() == 8));
    }

    #[test]
    fn levelwise_effective_monomorphism() {
        let c = Arc::new(SimplicialCategory::constant(FinCategory::terminal(), 2));
        let d = Arc::new(SimplicialCategory::constant(FinCategory::chaotic(2), 2));
        let i = SimplicialFunctor::new(c.clone(), d.clone(), (0..=2).map(|n| crate::cat::Functor::constant(c.level(n).clone(), d.level(n).clone(), 0)).collect()).unwrap();
        let (_, l, r) = pushout_scat(&i, &i, 100).unwrap();
        let (e, inc) = equalizer_scat(&l, &r).unwrap();
        assert_eq!(*e, *c);
        assert!(inc.violation().is_none());
    }
}
