use std::fmt;
use std::sync::Arc;

use crate::cat::category::FinCategory;
use crate::error::{Error, Result};

/// A functor between finite categories, stored as object and morphism maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Functor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    objects: Vec<u32>,
    morphisms: Vec<u32>,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functor({:?} -> {:?}, {:?})", self.source, self.target, self.morphisms)
    }
}

impl Functor {
    pub fn new(source: Arc<FinCategory>, target: Arc<FinCategory>, objects: Vec<u32>, morphisms: Vec<u32>) -> Result<Self> {
        let f = Self::new_unchecked(source, target, objects, morphisms)?;
        if let Some(v) = f.violation() {
            return Err(Error::invalid(v));
        }
        Ok(f)
    }

    /// Checks only the lengths and ranges of the maps.
    pub fn new_unchecked(source: Arc<FinCategory>, target: Arc<FinCategory>, objects: Vec<u32>, morphisms: Vec<u32>) -> Result<Self> {
        if objects.len() != source.object_count() || morphisms.len() != source.morphism_count() {
            return Err(Error::invalid("functor maps have the wrong length"));
        }
        if objects.iter().any(|&o| o as usize >= target.object_count())
            || morphisms.iter().any(|&m| m as usize >= target.morphism_count())
        {
            return Err(Error::invalid("functor image out of range"));
        }
        Ok(Functor { source, target, objects, morphisms })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        let objects = (0..c.object_count() as u32).collect();
        let morphisms = (0..c.morphism_count() as u32).collect();
        Functor { source: c.clone(), target: c, objects, morphisms }
    }

    /// The functor sending everything to object `o` of the target.
    pub fn constant(source: Arc<FinCategory>, target: Arc<FinCategory>, o: u32) -> Self {
        let id = target.identity(o);
        Functor {
            objects: vec![o; source.object_count()],
            morphisms: vec![id; source.morphism_count()],
            source,
            target,
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn object_map(&self) -> &[u32] {
        &self.objects
    }

    pub fn morphism_map(&self) -> &[u32] {
        &self.morphisms
    }

    pub fn on_object(&self, o: u32) -> u32 {
        self.objects[o as usize]
    }

    pub fn on_morphism(&self, f: u32) -> u32 {
        self.morphisms[f as usize]
    }

    /// First failed functor law, described.
    pub fn violation(&self) -> Option<String> {
        let (c, d) = (&self.source, &self.target);
        for f in 0..c.morphism_count() as u32 {
            let g = self.on_morphism(f);
            if d.src(g) != self.on_object(c.src(f)) || d.tgt(g) != self.on_object(c.tgt(f)) {
                return Some(format!("morphism {f} lands on the wrong endpoints"));
            }
        }
        for o in 0..c.object_count() as u32 {
            if self.on_morphism(c.identity(o)) != d.identity(self.on_object(o)) {
                return Some(format!("identity of object {o} is not preserved"));
            }
        }
        for f in 0..c.morphism_count() as u32 {
            for &g in c.outgoing(c.tgt(f)) {
                if self.on_morphism(c.compose(g, f)) != d.compose(self.on_morphism(g), self.on_morphism(f)) {
                    return Some(format!("composite {g} ∘ {f} is not preserved"));
                }
            }
        }
        None
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if self.target.as_ref() != other.source.as_ref() {
            return Err(Error::invalid("functors do not compose"));
        }
        Ok(Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.iter().map(|&o| other.on_object(o)).collect(),
            morphisms: self.morphisms.iter().map(|&m| other.on_morphism(m)).collect(),
        })
    }

    /// `F × G` between product categories built by [`FinCategory::product`].
    pub fn product(f: &Functor, g: &Functor, source: Arc<FinCategory>, target: Arc<FinCategory>) -> Result<Functor> {
        let (gs, gt) = (g.source(), g.target());
        let (so, sm) = (gs.object_count() as u32, gs.morphism_count() as u32);
        let (to, tm) = (gt.object_count() as u32, gt.morphism_count() as u32);
        let objects = (0..source.object_count() as u32).map(|o| f.on_object(o / so) * to + g.on_object(o % so)).collect();
        let morphisms =
            (0..source.morphism_count() as u32).map(|m| f.on_morphism(m / sm) * tm + g.on_morphism(m % sm)).collect();
        Functor::new_unchecked(source, target, objects, morphisms)
    }

    pub fn is_injective(&self) -> bool {
        injective(&self.objects) && injective(&self.morphisms)
    }

    /// Bijective on objects and morphisms, hence an isomorphism of categories.
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective()
            && self.objects.len() == self.target.object_count()
            && self.morphisms.len() == self.target.morphism_count()
    }

    pub fn is_fully_faithful(&self) -> bool {
        let (c, d) = (&self.source, &self.target);
        for a in 0..c.object_count() as u32 {
            for b in 0..c.object_count() as u32 {
                let hom = c.hom(a, b);
                let image: Vec<u32> = hom.iter().map(|&f| self.on_morphism(f)).collect();
                if !injective(&image) || image.len() != d.hom(self.on_object(a), self.on_object(b)).len() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_essentially_surjective(&self) -> bool {
        let d = &self.target;
        let mut reached = vec![false; d.object_count()];
        for &o in &self.objects {
            for &f in d.outgoing(o) {
                if d.inverse(f).is_some() {
                    reached[d.tgt(f) as usize] = true;
                }
            }
        }
        reached.into_iter().all(|r| r)
    }
}

fn injective(v: &[u32]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Outcome of [`check_equivalence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub fully_faithful: bool,
    pub essentially_surjective: bool,
}

impl EquivalenceVerdict {
    pub fn holds(&self) -> bool {
        self.fully_faithful && self.essentially_surjective
    }
}

pub fn check_equivalence(f: &Functor) -> EquivalenceVerdict {
    EquivalenceVerdict { fully_faithful: f.is_fully_faithful(), essentially_surjective: f.is_essentially_surjective() }
}

/// Components `α_a : F a -> G a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalTransformation {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<u32>,
}

impl NaturalTransformation {
    pub fn new(source: Functor, target: Functor, components: Vec<u32>) -> Result<Self> {
        let t = NaturalTransformation { source, target, components };
        if !t.is_natural() {
            return Err(Error::invalid("naturality square fails"));
        }
        Ok(t)
    }

    pub fn is_natural(&self) -> bool {
        let (c, d) = (self.source.source(), self.source.target());
        if self.components.len() != c.object_count() {
            return false;
        }
        for a in 0..c.object_count() as u32 {
            let m = self.components[a as usize];
            if d.src(m) != self.source.on_object(a) || d.tgt(m) != self.target.on_object(a) {
                return false;
            }
        }
        (0..c.morphism_count() as u32).all(|f| {
            let (a, b) = (c.src(f), c.tgt(f));
            d.compose(self.target.on_morphism(f), self.components[a as usize])
                == d.compose(self.components[b as usize], self.source.on_morphism(f))
        })
    }
}

/// Counts candidate assignments against a cap.
struct Budget {
    cap: usize,
    used: usize,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::CapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// Default cap on candidate assignments during enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

/// All functors `C -> D` in lexicographic order of their maps.
pub fn enumerate_functors(c: &Arc<FinCategory>, d: &Arc<FinCategory>, cap: usize) -> Result<Vec<Functor>> {
    enumerate_functors_where(c, d, &|_, _| true, &|_, _| true, cap)
}

/// Functors whose object and morphism assignments pass the given filters,
/// which see `(source element, candidate image)`.
pub fn enumerate_functors_where(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    object_ok: &dyn Fn(u32, u32) -> bool,
    morphism_ok: &dyn Fn(u32, u32) -> bool,
    cap: usize,
) -> Result<Vec<Functor>> {
    let mut s = Search { c, d, object_ok, morphism_ok, budget: Budget { cap, used: 0 }, out: Vec::new() };
    let mut objects = vec![0u32; c.object_count()];
    s.objects(0, &mut objects)?;
    Ok(s.out)
}

struct Search<'a> {
    c: &'a Arc<FinCategory>,
    d: &'a Arc<FinCategory>,
    object_ok: &'a dyn Fn(u32, u32) -> bool,
    morphism_ok: &'a dyn Fn(u32, u32) -> bool,
    budget: Budget,
    out: Vec<Functor>,
}

impl Search<'_> {
    fn objects(&mut self, k: usize, objects: &mut Vec<u32>) -> Result<()> {
        let (c, d) = (self.c, self.d);
        if k == objects.len() {
            let order: Vec<u32> = (0..c.morphism_count() as u32).filter(|&f| !c.is_identity(f)).collect();
            let mut morphisms = vec![u32::MAX; c.morphism_count()];
            for o in 0..c.object_count() as u32 {
                let id = d.identity(objects[o as usize]);
                if !(self.morphism_ok)(c.identity(o), id) {
                    return Ok(());
                }
                morphisms[c.identity(o) as usize] = id;
            }
            return self.morphisms(&order, 0, objects, &mut morphisms);
        }
        for o in 0..d.object_count() as u32 {
            self.budget.tick()?;
            if (self.object_ok)(k as u32, o) {
                objects[k] = o;
                self.objects(k + 1, objects)?;
            }
        }
        Ok(())
    }

    fn morphisms(&mut self, order: &[u32], k: usize, objects: &[u32], morphisms: &mut Vec<u32>) -> Result<()> {
        let (c, d) = (self.c, self.d);
        if k == order.len() {
            self.out.push(Functor { source: c.clone(), target: d.clone(), objects: objects.to_vec(), morphisms: morphisms.clone() });
            return Ok(());
        }
        let f = order[k];
        for g in d.hom(objects[c.src(f) as usize], objects[c.tgt(f) as usize]) {
            self.budget.tick()?;
            if !(self.morphism_ok)(f, g) {
                continue;
            }
            morphisms[f as usize] = g;
            if consistent_at(c, d, f, morphisms) {
                self.morphisms(order, k + 1, objects, morphisms)?;
            }
        }
        morphisms[f as usize] = u32::MAX;
        Ok(())
    }
}

/// Checks every composition triple involving `f` whose three entries are set.
fn consistent_at(c: &FinCategory, d: &FinCategory, f: u32, m: &[u32]) -> bool {
    let set = |x: u32| m[x as usize] != u32::MAX;
    for h in 0..c.morphism_count() as u32 {
        for &g in c.outgoing(c.tgt(h)) {
            let gh = c.compose(g, h);
            if (g == f || h == f || gh == f)
                && set(g)
                && set(h)
                && set(gh)
                && m[gh as usize] != d.compose(m[g as usize], m[h as usize])
            {
                return false;
            }
        }
    }
    true
}

/// Natural transformations `F => G`.
pub fn enumerate_transformations(f: &Functor, g: &Functor, cap: usize) -> Result<Vec<Vec<u32>>> {
    enumerate_transformations_where(f, g, &|_, _| true, cap)
}

/// Natural transformations whose components pass `component_ok(object, morphism)`.
pub fn enumerate_transformations_where(
    f: &Functor,
    g: &Functor,
    component_ok: &dyn Fn(u32, u32) -> bool,
    cap: usize,
) -> Result<Vec<Vec<u32>>> {
    let (c, d) = (f.source().clone(), f.target().clone());
    let mut budget = Budget { cap, used: 0 };
    let mut out = Vec::new();
    let mut comps = vec![u32::MAX; c.object_count()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        c: &FinCategory,
        d: &FinCategory,
        f: &Functor,
        g: &Functor,
        ok_at: &dyn Fn(u32, u32) -> bool,
        k: u32,
        comps: &mut Vec<u32>,
        budget: &mut Budget,
        out: &mut Vec<Vec<u32>>,
    ) -> Result<()> {
        if k as usize == comps.len() {
            out.push(comps.clone());
            return Ok(());
        }
        for m in d.hom(f.on_object(k), g.on_object(k)) {
            budget.tick()?;
            if !ok_at(k, m) {
                continue;
            }
            comps[k as usize] = m;
            // naturality for morphisms between already assigned objects
            let ok = (0..c.morphism_count() as u32).all(|h| {
                let (a, b) = (c.src(h), c.tgt(h));
                if a > k || b > k || (a != k && b != k) {
                    return true;
                }
                d.compose(g.on_morphism(h), comps[a as usize]) == d.compose(comps[b as usize], f.on_morphism(h))
            });
            if ok {
                go(c, d, f, g, ok_at, k + 1, comps, budget, out)?;
            }
        }
        comps[k as usize] = u32::MAX;
        Ok(())
    }
    go(&c, &d, f, g, component_ok, 0, &mut comps, &mut budget, &mut out)?;
    Ok(out)
}

/// The functor category `HOM(C, D)`: objects are the enumerated functors,
/// morphisms the natural transformations, composed componentwise.
pub struct FunctorCategory {
    pub category: FinCategory,
    pub functors: Vec<Functor>,
    /// `(source functor, target functor, components)` per morphism.
    pub transformations: Vec<(u32, u32, Vec<u32>)>,
}

pub fn functor_category(c: &Arc<FinCategory>, d: &Arc<FinCategory>, cap: usize) -> Result<FunctorCategory> {
    let functors = enumerate_functors(c, d, cap)?;
    let mut transformations = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut identity = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for comps in enumerate_transformations(f, g, cap)? {
                if i == j && (0..c.object_count() as u32).all(|o| comps[o as usize] == d.identity(f.on_object(o))) {
                    identity.push(transformations.len() as u32);
                }
                index.insert((i as u32, j as u32, comps.clone()), transformations.len() as u32);
                transformations.push((i as u32, j as u32, comps));
                if transformations.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
            }
        }
    }
    let src = transformations.iter().map(|t| t.0).collect();
    let tgt = transformations.iter().map(|t| t.1).collect();
    let category = FinCategory::from_fn(functors.len(), src, tgt, identity, |b, a| {
        let (ta, tb) = (&transformations[a as usize], &transformations[b as usize]);
        let comps: Vec<u32> = (0..c.object_count()).map(|o| d.compose(tb.2[o], ta.2[o])).collect();
        index[&(ta.0, tb.1, comps)]
    })?;
    Ok(FunctorCategory { category, functors, transformations })
}

/// The subcategory of the common source on which `F` and `G` agree, with
/// its inclusion.
pub fn equalizer_cat(f: &Functor, g: &Functor) -> Result<(FinCategory, Functor)> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::invalid("functors are not parallel"));
    }
    let c = f.source();
    let objects: Vec<bool> = (0..c.object_count() as u32).map(|o| f.on_object(o) == g.on_object(o)).collect();
    let morphisms: Vec<bool> = (0..c.morphism_count() as u32).map(|m| f.on_morphism(m) == g.on_morphism(m)).collect();
    let (sub, obj, mor) = c.subcategory(&objects, &morphisms)?;
    let sub = Arc::new(sub);
    let inclusion = Functor::new_unchecked(sub.clone(), c.clone(), obj, mor)?;
    Ok((Arc::try_unwrap(sub).unwrap_or_else(|a| (*a).clone()), inclusion))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(c: FinCategory) -> Arc<FinCategory> {
        Arc::new(c)
    }

    #[test]
    fn functor_category_counts() {
        // HOM(chaotic 2, Z/2): two functors, two transformations per pair
        let h = functor_category(&arc(FinCategory::chaotic(2)), &arc(FinCategory::cyclic_group(2)), DEFAULT_CAP).unwrap();
        assert_eq!(h.functors.len(), 2);
        assert_eq!(h.category.morphism_count(), 8);
        assert!(h.category.audit().is_empty());
        let z2 = arc(FinCategory::cyclic_group(2));
        let h = functor_category(&arc(FinCategory::terminal()), &z2, DEFAULT_CAP).unwrap();
        assert_eq!(h.category, *z2);
        let h = functor_category(&z2, &arc(FinCategory::terminal()), DEFAULT_CAP).unwrap();
        assert_eq!(h.category, FinCategory::terminal());
    }

    #[test]
    fn functor_counts_match_brute_force() {
        // oracle: every pair of object images and every morphism assignment, filtered by the laws
        let c = arc(FinCategory::ordinal(2));
        let d = arc(FinCategory::chaotic(2));
        let mut brute = 0;
        let nm = c.morphism_count() as u32;
        let total = (d.morphism_count() as u32).pow(nm);
        for code in 0..total {
            let mut x = code;
            let mut morphisms = Vec::new();
            for _ in 0..nm {
                morphisms.push(x % d.morphism_count() as u32);
                x /= d.morphism_count() as u32;
            }
            let objects: Vec<u32> = (0..c.object_count() as u32).map(|o| d.src(morphisms[c.identity(o) as usize])).collect();
            if let Ok(f) = Functor::new(c.clone(), d.clone(), objects, morphisms) {
                let _ = f;
                brute += 1;
            }
        }
        assert_eq!(enumerate_functors(&c, &d, DEFAULT_CAP).unwrap().len(), brute);
        assert_eq!(brute, 8);
    }

    #[test]
    fn cap_is_enforced() {
        let c = arc(FinCategory::discrete(6));
        let d = arc(FinCategory::discrete(6));
        assert!(matches!(enumerate_functors(&c, &d, 100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn equivalences() {
        let ch = arc(FinCategory::chaotic(2));
        let pt = arc(FinCategory::terminal());
        let inc = Functor::new(pt.clone(), ch.clone(), vec![0], vec![0]).unwrap();
        assert!(check_equivalence(&inc).holds());
        let two = arc(FinCategory::discrete(2));
        let inc = Functor::new(pt, two, vec![0], vec![0]).unwrap();
        let v = check_equivalence(&inc);
        assert!(v.fully_faithful && !v.essentially_surjective);
    }

    #[test]
    fn equalizers() {
        let ch = arc(FinCategory::chaotic(2));
        let id = Functor::identity(ch.clone());
        assert_eq!(equalizer_cat(&id, &id).unwrap().0, *ch);
        let a = Functor::constant(ch.clone(), ch.clone(), 0);
        let b = Functor::constant(ch.clone(), ch.clone(), 1);
        assert_eq!(equalizer_cat(&a, &b).unwrap().0.object_count(), 0);
    }
}
