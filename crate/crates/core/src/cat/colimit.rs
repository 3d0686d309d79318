use std::sync::Arc;

use crate::cat::category::FinCategory;
use crate::cat::closure::{close_presentation, CategoryPresentation, Relation};
use crate::cat::functor::Functor;
use crate::error::{Error, Result};
use crate::util::UnionFind;

/// A finite diagram of categories; arrows are `(from, to, functor)`.
#[derive(Debug, Clone, Default)]
pub struct CatDiagram {
    pub objects: Vec<Arc<FinCategory>>,
    pub arrows: Vec<(usize, usize, Functor)>,
}

#[derive(Debug, Clone)]
pub struct CatColimit {
    pub category: Arc<FinCategory>,
    pub cocone: Vec<Functor>,
    /// `(diagram object, morphism)` behind each generator.
    pub generators: Vec<(usize, u32)>,
    /// A generator word for each morphism of the colimit.
    pub words: Vec<Vec<u32>>,
    /// A preimage `(diagram object, object)` of each colimit object.
    pub object_reps: Vec<(usize, u32)>,
}

impl CatColimit {
    /// The functor out of the colimit determined by a compatible family,
    /// given on objects and morphisms of the diagram objects.
    pub fn induced(
        &self,
        target: Arc<FinCategory>,
        on_object: impl Fn(usize, u32) -> u32,
        on_morphism: impl Fn(usize, u32) -> u32,
    ) -> Result<Functor> {
        let c = &self.category;
        let objects: Vec<u32> = self.object_reps.iter().map(|&(i, o)| on_object(i, o)).collect();
        let images: Vec<u32> = self.generators.iter().map(|&(i, m)| on_morphism(i, m)).collect();
        let morphisms = (0..c.morphism_count())
            .map(|m| {
                self.words[m]
                    .iter()
                    .fold(target.identity(objects[c.src(m as u32) as usize]), |acc, &g| target.compose(images[g as usize], acc))
            })
            .collect();
        let f = Functor::new_unchecked(c.clone(), target, objects, morphisms)?;
        Ok(f)
    }
}

/// The colimit as a presented category: objects glued by union-find, one
/// generator per non-identity morphism, relations from every composition
/// table and every functor in the diagram, then bounded word closure.
pub fn colimit_cat(d: &CatDiagram, bound: usize) -> Result<CatColimit> {
    for (k, (i, j, f)) in d.arrows.iter().enumerate() {
        if *i >= d.objects.len() || *j >= d.objects.len() || f.source() != &d.objects[*i] || f.target() != &d.objects[*j] {
            return Err(Error::invalid(format!("arrow {k} does not match the diagram objects")));
        }
    }
    let mut obj_offset = Vec::with_capacity(d.objects.len());
    let mut total = 0u32;
    for c in &d.objects {
        obj_offset.push(total);
        total += c.object_count() as u32;
    }
    let mut uf = UnionFind::new(total as usize);
    for (i, j, f) in &d.arrows {
        for o in 0..d.objects[*i].object_count() as u32 {
            uf.union(obj_offset[*i] + o, obj_offset[*j] + f.on_object(o));
        }
    }
    let (count, class) = uf.classes();
    let obj = |i: usize, o: u32| class[(obj_offset[i] + o) as usize];
    let mut generators = Vec::new();
    let mut provenance = Vec::new();
    let mut gen_of: Vec<Vec<u32>> = Vec::with_capacity(d.objects.len());
    for (i, c) in d.objects.iter().enumerate() {
        let mut g = vec![u32::MAX; c.morphism_count()];
        for m in 0..c.morphism_count() as u32 {
            if !c.is_identity(m) {
                g[m as usize] = generators.len() as u32;
                generators.push((obj(i, c.src(m)), obj(i, c.tgt(m))));
                provenance.push((i, m));
            }
        }
        gen_of.push(g);
    }
    let word = |i: usize, m: u32| -> Vec<u32> {
        let g = gen_of[i][m as usize];
        if g == u32::MAX { Vec::new() } else { vec![g] }
    };
    let mut relations = Vec::new();
    for (i, c) in d.objects.iter().enumerate() {
        for (g, f, h) in c.composition_triples() {
            let mut lhs = word(i, f);
            lhs.extend(word(i, g));
            relations.push(Relation { start: obj(i, c.src(f)), lhs, rhs: word(i, h) });
        }
    }
    for (i, j, f) in &d.arrows {
        let c = &d.objects[*i];
        for m in 0..c.morphism_count() as u32 {
            if !c.is_identity(m) {
                relations.push(Relation { start: obj(*i, c.src(m)), lhs: word(*i, m), rhs: word(*j, f.on_morphism(m)) });
            }
        }
    }
    relations.sort_by(|a, b| (a.start, &a.lhs, &a.rhs).cmp(&(b.start, &b.lhs, &b.rhs)));
    relations.dedup();
    let pres = CategoryPresentation { objects: count, generators, relations };
    let closed = close_presentation(&pres, bound)?;
    let category = Arc::new(closed.category);
    let cocone = d
        .objects
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let objects: Vec<u32> = (0..c.object_count() as u32).map(|o| obj(i, o)).collect();
            let morphisms = (0..c.morphism_count() as u32)
                .map(|m| {
                    let g = gen_of[i][m as usize];
                    if g == u32::MAX { category.identity(obj(i, c.src(m))) } else { closed.generator_morphism[g as usize] }
                })
                .collect();
            Functor::new_unchecked(c.clone(), category.clone(), objects, morphisms)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut object_reps = vec![(usize::MAX, 0); count];
    for (i, c) in d.objects.iter().enumerate() {
        for o in 0..c.object_count() as u32 {
            let k = obj(i, o) as usize;
            if object_reps[k].0 == usize::MAX {
                object_reps[k] = (i, o);
            }
        }
    }
    Ok(CatColimit { category, cocone, generators: provenance, words: closed.words, object_reps })
}

/// `B ⊔_A C` for `f: A -> B`, `g: A -> C`.
pub fn pushout_cat(f: &Functor, g: &Functor, bound: usize) -> Result<(Arc<FinCategory>, Functor, Functor)> {
    if f.source() != g.source() {
        return Err(Error::invalid("pushout legs must share their source"));
    }
    let d = CatDiagram {
        objects: vec![f.source().clone(), f.target().clone(), g.target().clone()],
        arrows: vec![(0, 1, f.clone()), (0, 2, g.clone())],
    };
    let mut out = colimit_cat(&d, bound)?;
    let ic = out.cocone.pop().unwrap();
    let ib = out.cocone.pop().unwrap();
    Ok((out.category, ib, ic))
}

pub fn coproduct_cat(objects: &[Arc<FinCategory>], bound: usize) -> Result<CatColimit> {
    colimit_cat(&CatDiagram { objects: objects.to_vec(), arrows: vec![] }, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::functor::equalizer_cat;

    fn arc(c: FinCategory) -> Arc<FinCategory> {
        Arc::new(c)
    }

    #[test]
    fn coproduct_sizes() {
        let c = coproduct_cat(&[arc(FinCategory::cyclic_group(2)), arc(FinCategory::terminal())], 100).unwrap();
        assert_eq!(c.category.morphism_count(), 3);
        assert!(c.cocone.iter().all(|f| f.violation().is_none()));
    }

    #[test]
    fn pushout_along_point() {
        let a = arc(FinCategory::terminal());
        let b = arc(FinCategory::chaotic(2));
        let f = Functor::new(a.clone(), b.clone(), vec![0], vec![0]).unwrap();
        let g = Functor::identity(a.clone());
        let (p, ib, _) = pushout_cat(&f, &g, 100).unwrap();
        assert!(ib.is_isomorphism());
        assert_eq!(p.morphism_count(), 4);
    }

    #[test]
    fn groupoid_pushout_has_hom_sets_of_size_two() {
        // A = {x}, B = chaotic on {x, y}, C = Z/2 at x
        let a = arc(FinCategory::terminal());
        let b = arc(FinCategory::chaotic(2));
        let c = arc(FinCategory::cyclic_group(2));
        let f = Functor::new(a.clone(), b, vec![0], vec![0]).unwrap();
        let g = Functor::new(a, c, vec![0], vec![0]).unwrap();
        let (p, ib, ic) = pushout_cat(&f, &g, 100).unwrap();
        assert_eq!(p.object_count(), 2);
        assert_eq!(p.morphism_count(), 8);
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(p.hom(x, y).len(), 2);
            }
        }
        assert!(p.audit().is_empty() && p.is_groupoid());
        assert!(ib.violation().is_none() && ic.violation().is_none());
    }

    #[test]
    fn effective_monomorphism() {
        // C = {a} ⊂ D = chaotic {a, b}; equalizer of D ⇉ D ⊔_C D is C
        let c = arc(FinCategory::terminal());
        let d = arc(FinCategory::chaotic(2));
        let i = Functor::new(c, d, vec![0], vec![0]).unwrap();
        let (_, l, r) = pushout_cat(&i, &i, 100).unwrap();
        let (e, inc) = equalizer_cat(&l, &r).unwrap();
        assert_eq!(e, FinCategory::terminal());
        assert_eq!(inc.object_map(), &[0]);
    }
}
