use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::simplicial::SimplicialSet;

/// A map of truncated simplicial sets with equal bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    components: Vec<Vec<u32>>,
}

impl SimplicialMap {
    /// Checks totality, bounds and commutation with every structure map.
    pub fn new(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        components: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(source, target, components)?;
        if let Some(msg) = m.violation() {
            return Err(Error::Invalid(msg));
        }
        Ok(m)
    }

    /// Only checks shapes; used where commutation holds by construction.
    pub fn new_unchecked(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        components: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if source.bound() != target.bound() {
            return Err(Error::BoundMismatch { left: source.bound(), right: target.bound() });
        }
        if components.len() != source.bound() + 1 {
            return Err(Error::invalid("one component per degree is required"));
        }
        for (n, c) in components.iter().enumerate() {
            if c.len() != source.size(n) || c.iter().any(|&y| y as usize >= target.size(n)) {
                return Err(Error::invalid(format!("component in degree {n} is not a total map")));
            }
        }
        Ok(SimplicialMap { source, target, components })
    }

    pub fn identity(x: Arc<SimplicialSet>) -> Self {
        let components = (0..=x.bound()).map(|n| (0..x.size(n) as u32).collect()).collect();
        SimplicialMap { source: x.clone(), target: x, components }
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn apply(&self, n: usize, x: u32) -> u32 {
        self.components[n][x as usize]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::invalid("maps are not composable"));
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(n, c)| c.iter().map(|&y| other.apply(n, y)).collect())
            .collect();
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            components,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().enumerate().all(|(n, c)| {
            let mut seen = vec![false; self.target.size(n)];
            c.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
        })
    }

    pub fn preserves_basepoint(&self) -> bool {
        match (self.source.basepoint(), self.target.basepoint()) {
            (Some(a), Some(b)) => self.apply(0, a) == b,
            _ => true,
        }
    }

    /// First failing commutation square, if any.
    pub fn violation(&self) -> Option<String> {
        let (s, t) = (&self.source, &self.target);
        for n in 0..=s.bound() {
            for x in 0..s.size(n) as u32 {
                let fx = self.apply(n, x);
                if n > 0 {
                    for i in 0..=n {
                        if self.apply(n - 1, s.face(n, i, x)) != t.face(n, i, fx) {
                            return Some(format!("map does not commute with d{i} at ({n}, {x})"));
                        }
                    }
                }
                if n < s.bound() {
                    for j in 0..=n {
                        if self.apply(n + 1, s.degen(n, j, x)) != t.degen(n, j, fx) {
                            return Some(format!("map does not commute with s{j} at ({n}, {x})"));
                        }
                    }
                }
            }
        }
        if !self.preserves_basepoint() {
            return Some("map does not preserve the basepoint".into());
        }
        None
    }
}

/// Searches assignments on nondegenerate simplices of `source` compatible
/// with faces; degenerate simplices follow from their Eilenberg–Zilber forms.
struct MapSearch<'a> {
    source: &'a SimplicialSet,
    target: &'a SimplicialSet,
    order: Vec<(usize, u32)>,
    /// target simplices of degree n grouped by their last face
    by_last_face: Vec<HashMap<u32, Vec<u32>>>,
    assigned: Vec<Vec<u32>>,
}

impl<'a> MapSearch<'a> {
    fn new(source: &'a SimplicialSet, target: &'a SimplicialSet, pointed: bool) -> Option<Self> {
        let bound = source.bound();
        let mut order = Vec::new();
        for n in 0..=bound {
            order.extend(source.nondegenerate(n).map(|x| (n, x)));
        }
        let mut by_last_face = vec![HashMap::new(); bound + 1];
        for (n, table) in by_last_face.iter_mut().enumerate().skip(1) {
            for y in 0..target.size(n) as u32 {
                table.entry(target.face(n, n, y)).or_insert_with(Vec::new).push(y);
            }
        }
        let mut assigned: Vec<Vec<u32>> =
            (0..=bound).map(|n| vec![u32::MAX; source.size(n)]).collect();
        if pointed {
            if let (Some(a), Some(b)) = (source.basepoint(), target.basepoint()) {
                assigned[0][a as usize] = b;
            } else if source.basepoint().is_some() {
                return None;
            }
        }
        Some(MapSearch { source, target, order, by_last_face, assigned })
    }

    /// Image of any simplex whose nondegenerate base is already assigned.
    fn image(&self, n: usize, x: u32) -> u32 {
        let s = self.source.simplex(n, x);
        let mut y = self.assigned[s.base_degree][s.base as usize];
        let mut deg = s.base_degree;
        for &j in s.degeneracy_word.iter().rev() {
            y = self.target.degen(deg, j as usize, y);
            deg += 1;
        }
        y
    }

    fn candidates(&self, n: usize, x: u32) -> Vec<u32> {
        if n == 0 {
            if self.assigned[0][x as usize] != u32::MAX {
                return vec![self.assigned[0][x as usize]];
            }
            return (0..self.target.size(0) as u32).collect();
        }
        let wanted: Vec<u32> = (0..=n).map(|i| self.image(n - 1, self.source.face(n, i, x))).collect();
        match self.by_last_face[n].get(&wanted[n]) {
            None => Vec::new(),
            Some(list) => list
                .iter()
                .copied()
                .filter(|&y| (0..n).all(|i| self.target.face(n, i, y) == wanted[i]))
                .collect(),
        }
    }

    fn run<F: FnMut(&Self) -> bool>(&mut self, pos: usize, visit: &mut F) -> bool {
        if pos == self.order.len() {
            return visit(self);
        }
        let (n, x) = self.order[pos];
        let saved = self.assigned[n][x as usize];
        for y in self.candidates(n, x) {
            self.assigned[n][x as usize] = y;
            if !self.run(pos + 1, visit) {
                self.assigned[n][x as usize] = saved;
                return false;
            }
        }
        self.assigned[n][x as usize] = saved;
        true
    }

    fn components(&self) -> Vec<Vec<u32>> {
        (0..=self.source.bound())
            .map(|n| (0..self.source.size(n) as u32).map(|x| self.image(n, x)).collect())
            .collect()
    }
}

fn align_target(source: &SimplicialSet, target: &SimplicialSet) -> Result<Option<SimplicialSet>> {
    if target.bound() < source.bound() {
        return Err(Error::BoundMismatch { left: source.bound(), right: target.bound() });
    }
    if target.bound() > source.bound() {
        return Ok(Some(target.truncate(source.bound())?));
    }
    Ok(None)
}

/// All simplicial maps `source -> target`. A target with a larger bound is
/// truncated to the source bound first. With `pointed`, only maps sending
/// basepoint to basepoint are returned.
pub fn enumerate_maps(
    source: &Arc<SimplicialSet>,
    target: &Arc<SimplicialSet>,
    pointed: bool,
) -> Result<Vec<SimplicialMap>> {
    let target = match align_target(source, target)? {
        Some(t) => Arc::new(t),
        None => target.clone(),
    };
    let mut out = Vec::new();
    if let Some(mut search) = MapSearch::new(source, &target, pointed) {
        search.run(0, &mut |s| {
            out.push(s.components());
            true
        });
    }
    out.into_iter()
        .map(|c| SimplicialMap::new_unchecked(source.clone(), target.clone(), c))
        .collect()
}

/// Number of maps, without materializing them. Stops with `CapExceeded`
/// once `cap` is passed.
pub fn count_maps(source: &SimplicialSet, target: &SimplicialSet, pointed: bool, cap: usize) -> Result<usize> {
    let truncated = align_target(source, target)?;
    let target = truncated.as_ref().unwrap_or(target);
    let mut count = 0usize;
    if let Some(mut search) = MapSearch::new(source, target, pointed) {
        search.run(0, &mut |_| {
            count += 1;
            count <= cap
        });
    }
    if count > cap {
        return Err(Error::CapExceeded { cap });
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, delta, sphere};

    #[test]
    fn vertices_and_edges() {
        let y = Arc::new(sphere(1, 3).unwrap());
        let p = Arc::new(delta(0, 3).unwrap());
        assert_eq!(enumerate_maps(&p, &y, false).unwrap().len(), 1);
        let d1 = Arc::new(delta(1, 2).unwrap());
        let b1 = Arc::new(boundary(1, 2).unwrap());
        assert_eq!(enumerate_maps(&b1, &d1, false).unwrap().len(), 4);
        // Δ¹ -> Δ¹: monotone maps [1] -> [1]
        assert_eq!(count_maps(&d1, &d1, false, 100).unwrap(), 3);
        for m in enumerate_maps(&d1, &d1, false).unwrap() {
            assert!(m.violation().is_none());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d1 = delta(1, 2).unwrap();
        let d2 = delta(2, 2).unwrap();
        assert_eq!(count_maps(&d1, &d2, false, 2), Err(Error::CapExceeded { cap: 2 }));
    }
}
