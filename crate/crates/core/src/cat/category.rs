use std::fmt;

use crate::error::{Error, Result};

/// A finite category given by an explicit composition table.
///
/// `comp[g][pos_in[f]] = g ∘ f` whenever `tgt f = src g`, where `pos_in[f]`
/// is the position of `f` among the morphisms into `tgt f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    objects: usize,
    src: Vec<u32>,
    tgt: Vec<u32>,
    identity: Vec<u32>,
    incoming: Vec<Vec<u32>>,
    outgoing: Vec<Vec<u32>>,
    pos_in: Vec<u32>,
    comp: Vec<Vec<u32>>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCategory({} objects, {} morphisms)", self.objects, self.src.len())
    }
}

/// A failed category axiom with the morphisms witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryViolation {
    LeftIdentity { morphism: u32 },
    RightIdentity { morphism: u32 },
    Associativity { h: u32, g: u32, f: u32 },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryViolation::LeftIdentity { morphism } => write!(fm, "id ∘ {morphism} != {morphism}"),
            CategoryViolation::RightIdentity { morphism } => write!(fm, "{morphism} ∘ id != {morphism}"),
            CategoryViolation::Associativity { h, g, f } => write!(fm, "({h} ∘ {g}) ∘ {f} != {h} ∘ ({g} ∘ {f})"),
        }
    }
}

impl FinCategory {
    /// Builds the table from `compose(g, f) = g ∘ f`, called on every
    /// composable pair. Endpoints of composites are checked; the axioms are
    /// left to [`FinCategory::audit`].
    pub fn from_fn(
        objects: usize,
        src: Vec<u32>,
        tgt: Vec<u32>,
        identity: Vec<u32>,
        compose: impl Fn(u32, u32) -> u32,
    ) -> Result<Self> {
        let m = src.len();
        if tgt.len() != m || identity.len() != objects {
            return Err(Error::invalid("source, target and identity lists disagree in length"));
        }
        if src.iter().chain(&tgt).any(|&o| o as usize >= objects) {
            return Err(Error::invalid("morphism endpoint is not an object"));
        }
        for (o, &i) in identity.iter().enumerate() {
            if i as usize >= m || src[i as usize] != o as u32 || tgt[i as usize] != o as u32 {
                return Err(Error::invalid(format!("identity of object {o} is not an endomorphism of it")));
            }
        }
        let mut incoming = vec![Vec::new(); objects];
        let mut outgoing = vec![Vec::new(); objects];
        let mut pos_in = vec![0u32; m];
        for f in 0..m {
            pos_in[f] = incoming[tgt[f] as usize].len() as u32;
            incoming[tgt[f] as usize].push(f as u32);
            outgoing[src[f] as usize].push(f as u32);
        }
        let mut comp = Vec::with_capacity(m);
        for g in 0..m as u32 {
            let row = incoming[src[g as usize] as usize]
                .iter()
                .map(|&f| {
                    let h = compose(g, f);
                    if h as usize >= m || src[h as usize] != src[f as usize] || tgt[h as usize] != tgt[g as usize] {
                        Err(Error::invalid(format!("composite {g} ∘ {f} has the wrong endpoints")))
                    } else {
                        Ok(h)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            comp.push(row);
        }
        Ok(FinCategory { objects, src, tgt, identity, incoming, outgoing, pos_in, comp })
    }

    /// From composition triples `(g, f, g ∘ f)`; every composable pair must
    /// appear exactly once, identities may be omitted.
    pub fn from_triples(
        objects: usize,
        src: Vec<u32>,
        tgt: Vec<u32>,
        identity: Vec<u32>,
        triples: &[(u32, u32, u32)],
    ) -> Result<Self> {
        let mut table = std::collections::HashMap::new();
        for &(g, f, h) in triples {
            if table.insert((g, f), h).is_some() {
                return Err(Error::invalid(format!("composite {g} ∘ {f} given twice")));
            }
        }
        let ids: std::collections::HashSet<u32> = identity.iter().copied().collect();
        let missing = std::cell::RefCell::new(None);
        let c = Self::from_fn(objects, src, tgt, identity, |g, f| {
            if let Some(&h) = table.get(&(g, f)) {
                h
            } else if ids.contains(&g) {
                f
            } else if ids.contains(&f) {
                g
            } else {
                missing.borrow_mut().get_or_insert((g, f));
                g
            }
        })?;
        if let Some((g, f)) = missing.into_inner() {
            return Err(Error::invalid(format!("composite {g} ∘ {f} is missing")));
        }
        Ok(c)
    }

    pub fn discrete(n: usize) -> Self {
        let ids: Vec<u32> = (0..n as u32).collect();
        Self::from_fn(n, ids.clone(), ids.clone(), ids, |g, _| g).unwrap()
    }

    pub fn terminal() -> Self {
        Self::discrete(1)
    }

    pub fn empty() -> Self {
        Self::discrete(0)
    }

    /// Exactly one morphism `a -> b` for every pair; it has index `a * n + b`.
    pub fn chaotic(n: usize) -> Self {
        let nn = n as u32;
        let src = (0..nn * nn).map(|m| m / nn).collect();
        let tgt = (0..nn * nn).map(|m| m % nn).collect();
        let identity = (0..nn).map(|a| a * nn + a).collect();
        Self::from_fn(n, src, tgt, identity, |g, f| (f / nn) * nn + g % nn).unwrap()
    }

    /// One object, morphisms `0..n`, composition by addition mod `n`.
    pub fn cyclic_group(n: usize) -> Self {
        let nn = n as u32;
        Self::from_fn(1, vec![0; n], vec![0; n], vec![0], |g, f| (g + f) % nn).unwrap()
    }

    /// One object with the given multiplication table, `table[g][f] = g ∘ f`.
    pub fn group_from_table(table: &[Vec<u32>], identity: u32) -> Result<Self> {
        let n = table.len();
        Self::from_fn(1, vec![0; n], vec![0; n], vec![identity], |g, f| table[g as usize][f as usize])
    }

    /// The poset on `0..n` generated by the relation pairs `(a, b)` meaning `a <= b`.
    pub fn poset(n: usize, relation: &[(u32, u32)]) -> Result<Self> {
        let mut le = vec![vec![false; n]; n];
        for a in 0..n {
            le[a][a] = true;
        }
        for &(a, b) in relation {
            le[a as usize][b as usize] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && le[a][b] && le[b][a] {
                    return Err(Error::invalid("relation is not antisymmetric"));
                }
            }
        }
        let pairs: Vec<(u32, u32)> =
            (0..n as u32).flat_map(|a| (0..n as u32).map(move |b| (a, b))).filter(|&(a, b)| le[a as usize][b as usize]).collect();
        let index: std::collections::HashMap<(u32, u32), u32> = pairs.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        let src = pairs.iter().map(|p| p.0).collect();
        let tgt = pairs.iter().map(|p| p.1).collect();
        let identity = (0..n as u32).map(|a| index[&(a, a)]).collect();
        Self::from_fn(n, src, tgt, identity, |g, f| index[&(pairs[f as usize].0, pairs[g as usize].1)])
    }

    /// The linear order `[n] = {0 < 1 < … < n}`.
    pub fn ordinal(n: usize) -> Self {
        let rel: Vec<(u32, u32)> = (0..n as u32).map(|a| (a, a + 1)).collect();
        Self::poset(n + 1, &rel).unwrap()
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: u32) -> u32 {
        self.src[f as usize]
    }

    pub fn tgt(&self, f: u32) -> u32 {
        self.tgt[f as usize]
    }

    pub fn identity(&self, o: u32) -> u32 {
        self.identity[o as usize]
    }

    pub fn is_identity(&self, f: u32) -> bool {
        self.identity[self.src(f) as usize] == f
    }

    pub fn incoming(&self, o: u32) -> &[u32] {
        &self.incoming[o as usize]
    }

    pub fn outgoing(&self, o: u32) -> &[u32] {
        &self.outgoing[o as usize]
    }

    /// `g ∘ f`, requiring `tgt f = src g`.
    pub fn compose(&self, g: u32, f: u32) -> u32 {
        debug_assert_eq!(self.tgt(f), self.src(g));
        self.comp[g as usize][self.pos_in[f as usize] as usize]
    }

    pub fn try_compose(&self, g: u32, f: u32) -> Option<u32> {
        (self.tgt(f) == self.src(g)).then(|| self.compose(g, f))
    }

    pub fn hom(&self, a: u32, b: u32) -> Vec<u32> {
        self.outgoing[a as usize].iter().copied().filter(|&f| self.tgt(f) == b).collect()
    }

    pub fn inverse(&self, f: u32) -> Option<u32> {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a)
            .into_iter()
            .find(|&g| self.compose(g, f) == self.identity(a) && self.compose(f, g) == self.identity(b))
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.morphism_count() as u32).all(|f| self.inverse(f).is_some())
    }

    /// Identity and associativity failures; empty means the table is a category.
    pub fn audit(&self) -> Vec<CategoryViolation> {
        let mut out = Vec::new();
        for f in 0..self.morphism_count() as u32 {
            if self.compose(self.identity(self.tgt(f)), f) != f {
                out.push(CategoryViolation::LeftIdentity { morphism: f });
            }
            if self.compose(f, self.identity(self.src(f))) != f {
                out.push(CategoryViolation::RightIdentity { morphism: f });
            }
        }
        for f in 0..self.morphism_count() as u32 {
            for &g in self.outgoing(self.tgt(f)) {
                let gf = self.compose(g, f);
                for &h in self.outgoing(self.tgt(g)) {
                    if self.compose(self.compose(h, g), f) != self.compose(h, gf) {
                        out.push(CategoryViolation::Associativity { h, g, f });
                    }
                }
            }
        }
        out
    }

    /// Full subcategory data: keeps the given morphisms (which must be closed
    /// under composition and contain the identities of the kept objects).
    /// Returns the subcategory and the old indices of its objects and morphisms.
    pub fn subcategory(&self, objects: &[bool], morphisms: &[bool]) -> Result<(FinCategory, Vec<u32>, Vec<u32>)> {
        let obj_old: Vec<u32> = (0..self.objects as u32).filter(|&o| objects[o as usize]).collect();
        let mor_old: Vec<u32> = (0..self.morphism_count() as u32).filter(|&f| morphisms[f as usize]).collect();
        let mut obj_new = vec![u32::MAX; self.objects];
        for (i, &o) in obj_old.iter().enumerate() {
            obj_new[o as usize] = i as u32;
        }
        let mut mor_new = vec![u32::MAX; self.morphism_count()];
        for (i, &f) in mor_old.iter().enumerate() {
            mor_new[f as usize] = i as u32;
        }
        let remap_obj = |o: u32| -> Result<u32> {
            let v = obj_new[o as usize];
            if v == u32::MAX { Err(Error::invalid("kept morphism has a dropped endpoint")) } else { Ok(v) }
        };
        let src = mor_old.iter().map(|&f| remap_obj(self.src(f))).collect::<Result<Vec<_>>>()?;
        let tgt = mor_old.iter().map(|&f| remap_obj(self.tgt(f))).collect::<Result<Vec<_>>>()?;
        let identity = obj_old
            .iter()
            .map(|&o| {
                let i = mor_new[self.identity(o) as usize];
                if i == u32::MAX { Err(Error::invalid("identity of a kept object is dropped")) } else { Ok(i) }
            })
            .collect::<Result<Vec<_>>>()?;
        let closed = std::cell::Cell::new(true);
        let sub = FinCategory::from_fn(obj_old.len(), src, tgt, identity, |g, f| {
            let h = mor_new[self.compose(mor_old[g as usize], mor_old[f as usize]) as usize];
            if h == u32::MAX {
                closed.set(false);
                g
            } else {
                h
            }
        });
        if !closed.get() {
            return Err(Error::invalid("kept morphisms are not closed under composition"));
        }
        Ok((sub?, obj_old, mor_old))
    }

    /// Cartesian product; `(a, b)` has index `a * |D| + b` on objects and
    /// morphisms alike.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (no, nm) = (other.objects as u32, other.morphism_count() as u32);
        let m = self.morphism_count() as u32 * nm;
        let src = (0..m).map(|k| self.src(k / nm) * no + other.src(k % nm)).collect();
        let tgt = (0..m).map(|k| self.tgt(k / nm) * no + other.tgt(k % nm)).collect();
        let identity = (0..self.objects as u32 * no).map(|o| self.identity(o / no) * nm + other.identity(o % no)).collect();
        FinCategory::from_fn(self.objects * other.objects, src, tgt, identity, |g, f| {
            self.compose(g / nm, f / nm) * nm + other.compose(g % nm, f % nm)
        })
        .unwrap()
    }

    /// Disjoint union; returns the object and morphism offsets of each part.
    pub fn coproduct(parts: &[&FinCategory]) -> (FinCategory, Vec<(u32, u32)>) {
        let mut offsets = Vec::new();
        let (mut oo, mut mo) = (0u32, 0u32);
        let (mut src, mut tgt, mut identity) = (Vec::new(), Vec::new(), Vec::new());
        let mut owner = Vec::new();
        for (k, c) in parts.iter().enumerate() {
            offsets.push((oo, mo));
            src.extend(c.src.iter().map(|&o| o + oo));
            tgt.extend(c.tgt.iter().map(|&o| o + oo));
            identity.extend(c.identity.iter().map(|&f| f + mo));
            owner.extend(std::iter::repeat(k).take(c.morphism_count()));
            oo += c.objects as u32;
            mo += c.morphism_count() as u32;
        }
        let c = FinCategory::from_fn(oo as usize, src, tgt, identity, |g, f| {
            let k = owner[g as usize];
            let off = offsets[k].1;
            parts[k].compose(g - off, f - off) + off
        })
        .unwrap();
        (c, offsets)
    }

    pub fn sources(&self) -> &[u32] {
        &self.src
    }

    pub fn targets(&self) -> &[u32] {
        &self.tgt
    }

    pub fn identities(&self) -> &[u32] {
        &self.identity
    }

    /// All composition triples `(g, f, g ∘ f)` with neither side an identity.
    pub fn composition_triples(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for f in 0..self.morphism_count() as u32 {
            if self.is_identity(f) {
                continue;
            }
            for &g in self.outgoing(self.tgt(f)) {
                if !self.is_identity(g) {
                    out.push((g, f, self.compose(g, f)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_tables_are_categories() {
        for c in [FinCategory::cyclic_group(2), FinCategory::chaotic(3), FinCategory::ordinal(2), FinCategory::discrete(2)] {
            assert!(c.audit().is_empty());
        }
        let z2 = FinCategory::cyclic_group(2);
        assert_eq!(z2.compose(1, 1), 0);
        assert!(z2.is_groupoid());
        assert!(!FinCategory::ordinal(1).is_groupoid());
    }

    #[test]
    fn bad_table_is_reported() {
        // t ∘ t = t with t != id: identity laws hold but the table is still
        // a category (t idempotent); make it fail via a wrong identity row
        let c = FinCategory::from_fn(1, vec![0, 0], vec![0, 0], vec![0], |g, f| if g == 0 { 1 } else { f }).unwrap();
        assert!(!c.audit().is_empty());
    }

    #[test]
    fn triples_round_trip() {
        let c = FinCategory::chaotic(2);
        let t = c.composition_triples();
        let d = FinCategory::from_triples(2, c.sources().to_vec(), c.targets().to_vec(), c.identities().to_vec(), &t).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn products_and_coproducts() {
        let p = FinCategory::cyclic_group(2).product(&FinCategory::chaotic(2));
        assert_eq!(p.morphism_count(), 8);
        assert!(p.audit().is_empty());
        let (c, _) = FinCategory::coproduct(&[&FinCategory::cyclic_group(2), &FinCategory::discrete(1)]);
        assert_eq!(c.morphism_count(), 3);
        assert!(c.audit().is_empty());
    }
}
