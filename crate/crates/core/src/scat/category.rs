use std::fmt;
use std::sync::Arc;

use crate::cat::{FinCategory, Functor};
use crate::error::{Error, Result};

/// A simplicial object in finite categories, truncated at `bound`, with an
/// optional basepoint object per level.
///
/// `faces[n][i] : C_n -> C_{n-1}` for `n >= 1`, `degens[n][j] : C_n -> C_{n+1}`
/// for `n < bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialCategory {
    bound: usize,
    levels: Vec<Arc<FinCategory>>,
    faces: Vec<Vec<Functor>>,
    degens: Vec<Vec<Functor>>,
    basepoint: Option<Vec<u32>>,
}

impl fmt::Debug for SimplicialCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<(usize, usize)> = self.levels.iter().map(|c| (c.object_count(), c.morphism_count())).collect();
        write!(f, "SimplicialCategory(bound {}, levels {:?}, basepoint {:?})", self.bound, sizes, self.basepoint)
    }
}

/// A failed structure law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScatViolation {
    pub level: usize,
    pub law: String,
}

impl fmt::Display for ScatViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "level {}: {}", self.level, self.law)
    }
}

impl SimplicialCategory {
    /// Checks shapes only; see [`SimplicialCategory::audit`].
    pub fn new(
        levels: Vec<Arc<FinCategory>>,
        faces: Vec<Vec<Functor>>,
        degens: Vec<Vec<Functor>>,
        basepoint: Option<Vec<u32>>,
    ) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::invalid("a simplicial category needs level 0"));
        }
        let bound = levels.len() - 1;
        if faces.len() != bound + 1 || degens.len() != bound + 1 {
            return Err(Error::invalid("one list of faces and degeneracies per level is required"));
        }
        for n in 0..=bound {
            let nf = if n == 0 { 0 } else { n + 1 };
            let nd = if n == bound { 0 } else { n + 1 };
            if faces[n].len() != nf || degens[n].len() != nd {
                return Err(Error::invalid(format!("wrong number of structure functors at level {n}")));
            }
            for f in &faces[n] {
                if f.source() != &levels[n] || f.target() != &levels[n - 1] {
                    return Err(Error::invalid(format!("face at level {n} has the wrong endpoints")));
                }
            }
            for s in &degens[n] {
                if s.source() != &levels[n] || s.target() != &levels[n + 1] {
                    return Err(Error::invalid(format!("degeneracy at level {n} has the wrong endpoints")));
                }
            }
        }
        if let Some(b) = &basepoint {
            if b.len() != bound + 1 || b.iter().zip(&levels).any(|(&o, c)| o as usize >= c.object_count()) {
                return Err(Error::invalid("basepoint must name an object of every level"));
            }
        }
        Ok(SimplicialCategory { bound, levels, faces, degens, basepoint })
    }

    /// The constant simplicial category with identity structure functors.
    pub fn constant(c: FinCategory, bound: usize) -> Self {
        let c = Arc::new(c);
        let id = Functor::identity(c.clone());
        SimplicialCategory {
            bound,
            levels: vec![c; bound + 1],
            faces: (0..=bound).map(|n| vec![id.clone(); if n == 0 { 0 } else { n + 1 }]).collect(),
            degens: (0..=bound).map(|n| vec![id.clone(); if n == bound { 0 } else { n + 1 }]).collect(),
            basepoint: None,
        }
    }

    pub fn terminal(bound: usize) -> Self {
        Self::constant(FinCategory::terminal(), bound).with_basepoint(Some(vec![0; bound + 1])).unwrap()
    }

    /// The constant discrete category on two objects, pointed at object 0.
    pub fn s0(bound: usize) -> Self {
        Self::constant(FinCategory::discrete(2), bound).with_basepoint(Some(vec![0; bound + 1])).unwrap()
    }

    pub fn empty(bound: usize) -> Self {
        Self::constant(FinCategory::empty(), bound)
    }

    pub fn with_basepoint(self, basepoint: Option<Vec<u32>>) -> Result<Self> {
        Self::new(self.levels, self.faces, self.degens, basepoint)
    }

    /// Basepoint at a constant object index on every level.
    pub fn pointed_at(self, o: u32) -> Result<Self> {
        let b = vec![o; self.bound + 1];
        self.with_basepoint(Some(b))
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn level(&self, n: usize) -> &Arc<FinCategory> {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Arc<FinCategory>] {
        &self.levels
    }

    pub fn face(&self, n: usize, i: usize) -> &Functor {
        &self.faces[n][i]
    }

    pub fn degen(&self, n: usize, j: usize) -> &Functor {
        &self.degens[n][j]
    }

    pub fn basepoint(&self) -> Option<&[u32]> {
        self.basepoint.as_deref()
    }

    pub fn basepoint_at(&self, n: usize) -> Option<u32> {
        self.basepoint.as_ref().map(|b| b[n])
    }

    pub fn is_pointed(&self) -> bool {
        self.basepoint.is_some()
    }

    /// Levels `0..=bound` only.
    pub fn truncate(&self, bound: usize) -> Result<Self> {
        if bound > self.bound {
            return Err(Error::BoundMismatch { left: bound, right: self.bound });
        }
        let mut degens = self.degens[..=bound].to_vec();
        degens[bound].clear();
        Self::new(
            self.levels[..=bound].to_vec(),
            self.faces[..=bound].to_vec(),
            degens,
            self.basepoint.as_ref().map(|b| b[..=bound].to_vec()),
        )
    }

    /// Level categories, functor laws, the simplicial identities as
    /// equalities of functors, and basepoint stability.
    pub fn audit(&self) -> Vec<ScatViolation> {
        let mut out = Vec::new();
        let v = |level: usize, law: String| ScatViolation { level, law };
        for (n, c) in self.levels.iter().enumerate() {
            if let Some(w) = c.audit().first() {
                out.push(v(n, format!("category axiom: {w}")));
            }
            for (i, f) in self.faces[n].iter().enumerate() {
                if let Some(w) = f.violation() {
                    out.push(v(n, format!("d_{i} is not a functor: {w}")));
                }
            }
            for (j, s) in self.degens[n].iter().enumerate() {
                if let Some(w) = s.violation() {
                    out.push(v(n, format!("s_{j} is not a functor: {w}")));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        let eq = |a: &Functor, b: &Functor| a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map();
        let comp = |a: &Functor, b: &Functor| a.then(b).expect("composable by construction");
        for n in 0..=self.bound {
            // d_i d_j = d_{j-1} d_i for i < j, as maps out of level n
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        if !eq(&comp(&self.faces[n][j], &self.faces[n - 1][i]), &comp(&self.faces[n][i], &self.faces[n - 1][j - 1])) {
                            out.push(v(n, format!("d_{i} d_{j} = d_{} d_{i}", j - 1)));
                        }
                    }
                }
            }
            if n < self.bound {
                let m = n + 1;
                for j in 0..=n {
                    for i in 0..=m {
                        let lhs = comp(&self.degens[n][j], &self.faces[m][i]);
                        let ok = if i < j {
                            eq(&lhs, &comp(&self.faces[n][i], &self.degens[n - 1][j - 1]))
                        } else if i == j || i == j + 1 {
                            eq(&lhs, &Functor::identity(self.levels[n].clone()))
                        } else {
                            eq(&lhs, &comp(&self.faces[n][i - 1], &self.degens[n - 1][j]))
                        };
                        if !ok {
                            out.push(v(n, format!("d_{i} s_{j}")));
                        }
                    }
                }
                if m < self.bound {
                    for j in 0..=n {
                        for i in 0..=j {
                            if !eq(&comp(&self.degens[n][j], &self.degens[m][i]), &comp(&self.degens[n][i], &self.degens[m][j + 1])) {
                                out.push(v(n, format!("s_{i} s_{j} = s_{} s_{i}", j + 1)));
                            }
                        }
                    }
                }
            }
        }
        if let Some(b) = &self.basepoint {
            for n in 0..=self.bound {
                if self.faces[n].iter().any(|f| f.on_object(b[n]) != b[n - 1])
                    || self.degens[n].iter().any(|s| s.on_object(b[n]) != b[n + 1])
                {
                    out.push(v(n, "basepoint is not stable".into()));
                }
            }
        }
        out
    }

    /// Builds levels from a per-level category constructor and induced
    /// structure functors.
    pub fn from_fn(
        bound: usize,
        level: impl Fn(usize) -> Result<Arc<FinCategory>>,
        face: impl Fn(usize, usize, &Arc<FinCategory>, &Arc<FinCategory>) -> Result<Functor>,
        degen: impl Fn(usize, usize, &Arc<FinCategory>, &Arc<FinCategory>) -> Result<Functor>,
    ) -> Result<Self> {
        let levels = (0..=bound).map(level).collect::<Result<Vec<_>>>()?;
        let mut faces = Vec::with_capacity(bound + 1);
        let mut degens = Vec::with_capacity(bound + 1);
        for n in 0..=bound {
            let fs = if n == 0 { Vec::new() } else { (0..=n).map(|i| face(n, i, &levels[n], &levels[n - 1])).collect::<Result<_>>()? };
            let ds = if n == bound { Vec::new() } else { (0..=n).map(|j| degen(n, j, &levels[n], &levels[n + 1])).collect::<Result<_>>()? };
            faces.push(fs);
            degens.push(ds);
        }
        Self::new(levels, faces, degens, None)
    }

    /// Levelwise product with the product structure functors; basepoint is
    /// the pair when both are pointed.
    pub fn product(&self, other: &SimplicialCategory) -> Result<Self> {
        let bound = self.bound.min(other.bound);
        let out = Self::from_fn(
            bound,
            |n| Ok(Arc::new(self.levels[n].product(&other.levels[n]))),
            |n, i, s, t| Functor::product(&self.faces[n][i], &other.faces[n][i], s.clone(), t.clone()),
            |n, j, s, t| Functor::product(&self.degens[n][j], &other.degens[n][j], s.clone(), t.clone()),
        )?;
        let bp = match (&self.basepoint, &other.basepoint) {
            (Some(a), Some(b)) => {
                Some((0..=bound).map(|n| a[n] * other.levels[n].object_count() as u32 + b[n]).collect())
            }
            _ => None,
        };
        out.with_basepoint(bp)
    }

    /// `C₊`: a disjoint terminal object added on every level, made the basepoint.
    pub fn add_basepoint(&self) -> Result<Self> {
        let pt = FinCategory::terminal();
        let ext = |f: &Functor, s: &Arc<FinCategory>, t: &Arc<FinCategory>| -> Result<Functor> {
            let mut objects = f.object_map().to_vec();
            objects.push(t.object_count() as u32 - 1);
            let mut morphisms = f.morphism_map().to_vec();
            morphisms.push(t.morphism_count() as u32 - 1);
            Functor::new_unchecked(s.clone(), t.clone(), objects, morphisms)
        };
        let out = Self::from_fn(
            self.bound,
            |n| Ok(Arc::new(FinCategory::coproduct(&[&self.levels[n], &pt]).0)),
            |n, i, s, t| ext(&self.faces[n][i], s, t),
            |n, j, s, t| ext(&self.degens[n][j], s, t),
        )?;
        let bp = (0..=self.bound).map(|n| self.levels[n].object_count() as u32).collect();
        out.with_basepoint(Some(bp))
    }
}

/// Levelwise functors commuting with all structure functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialFunctor {
    source: Arc<SimplicialCategory>,
    target: Arc<SimplicialCategory>,
    levels: Vec<Functor>,
}

impl SimplicialFunctor {
    pub fn new(source: Arc<SimplicialCategory>, target: Arc<SimplicialCategory>, levels: Vec<Functor>) -> Result<Self> {
        let f = Self::new_unchecked(source, target, levels)?;
        if let Some(v) = f.violation() {
            return Err(Error::invalid(v));
        }
        Ok(f)
    }

    pub fn new_unchecked(source: Arc<SimplicialCategory>, target: Arc<SimplicialCategory>, levels: Vec<Functor>) -> Result<Self> {
        if levels.len() != source.bound + 1 || target.bound < source.bound {
            return Err(Error::BoundMismatch { left: source.bound, right: target.bound });
        }
        Ok(SimplicialFunctor { source, target, levels })
    }

    pub fn identity(c: Arc<SimplicialCategory>) -> Self {
        let levels = c.levels.iter().map(|l| Functor::identity(l.clone())).collect();
        SimplicialFunctor { source: c.clone(), target: c, levels }
    }

    pub fn source(&self) -> &Arc<SimplicialCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialCategory> {
        &self.target
    }

    pub fn level(&self, n: usize) -> &Functor {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Functor] {
        &self.levels
    }

    pub fn then(&self, other: &SimplicialFunctor) -> Result<SimplicialFunctor> {
        let levels = self.levels.iter().zip(&other.levels).map(|(a, b)| a.then(b)).collect::<Result<Vec<_>>>()?;
        SimplicialFunctor::new_unchecked(self.source.clone(), other.target.clone(), levels)
    }

    pub fn preserves_basepoint(&self) -> bool {
        match (self.source.basepoint(), self.target.basepoint()) {
            (Some(a), Some(b)) => (0..=self.source.bound).all(|n| self.levels[n].on_object(a[n]) == b[n]),
            _ => false,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(Functor::is_injective)
    }

    pub fn violation(&self) -> Option<String> {
        let (s, t) = (&self.source, &self.target);
        for n in 0..=s.bound {
            let f = &self.levels[n];
            if f.source() != &s.levels[n] || f.target() != &t.levels[n] {
                return Some(format!("level {n} has the wrong endpoints"));
            }
            if let Some(w) = f.violation() {
                return Some(format!("level {n}: {w}"));
            }
        }
        let same = |a: Result<Functor>, b: Result<Functor>| match (a, b) {
            (Ok(a), Ok(b)) => a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map(),
            _ => false,
        };
        for n in 0..=s.bound {
            for i in 0..s.faces[n].len() {
                if !same(s.faces[n][i].then(&self.levels[n - 1]), self.levels[n].then(&t.faces[n][i])) {
                    return Some(format!("does not commute with d_{i} at level {n}"));
                }
            }
            for j in 0..s.degens[n].len() {
                if !same(s.degens[n][j].then(&self.levels[n + 1]), self.levels[n].then(&t.degens[n][j])) {
                    return Some(format!("does not commute with s_{j} at level {n}"));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_basepoints() {
        let z = SimplicialCategory::constant(FinCategory::cyclic_group(2), 3);
        assert!(z.audit().is_empty());
        let p = SimplicialCategory::empty(2).add_basepoint().unwrap();
        assert_eq!(p, SimplicialCategory::terminal(2));
        let s = SimplicialCategory::constant(FinCategory::discrete(2), 2).add_basepoint().unwrap();
        assert!(s.audit().is_empty());
        assert!(s.levels().iter().all(|c| c.object_count() == 3));
    }

    #[test]
    fn product_with_terminal() {
        let z = SimplicialCategory::constant(FinCategory::cyclic_group(2), 2).pointed_at(0).unwrap();
        let p = z.product(&SimplicialCategory::terminal(2)).unwrap();
        assert_eq!(p, z);
    }
}
