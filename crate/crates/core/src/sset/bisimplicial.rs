use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;

/// A finite downward-closed set of bidegrees, stored as the largest `q` of
/// each row `p`. Row maxima are non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BidegreeShape {
    rows: Vec<usize>,
}

impl BidegreeShape {
    pub fn from_row_maxima(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InsufficientShape("support"));
        }
        if rows.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::invalid("shape is not downward closed"));
        }
        Ok(BidegreeShape { rows })
    }

    /// Builds the shape from an explicit support, checking downward closure.
    pub fn from_support(support: &[(usize, usize)]) -> Result<Self> {
        let pmax = support.iter().map(|c| c.0).max().ok_or(Error::InsufficientShape("support"))?;
        let mut rows = vec![None::<usize>; pmax + 1];
        for &(p, q) in support {
            rows[p] = Some(rows[p].map_or(q, |m: usize| m.max(q)));
        }
        let rows: Vec<usize> = rows
            .into_iter()
            .map(|r| r.ok_or_else(|| Error::invalid("shape is not downward closed")))
            .collect::<Result<_>>()?;
        let shape = Self::from_row_maxima(rows)?;
        let count: usize = shape.cells().count();
        let mut distinct: Vec<_> = support.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if count != distinct.len() {
            return Err(Error::invalid("shape is not downward closed"));
        }
        Ok(shape)
    }

    pub fn rectangle(pmax: usize, qmax: usize) -> Self {
        BidegreeShape { rows: vec![qmax; pmax + 1] }
    }

    /// `{(p, q) : p + q + 1 <= d}`.
    pub fn staircase(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::BoundTooSmall { bound: 0, reason: "staircase needs d >= 1".into() });
        }
        Ok(BidegreeShape { rows: (0..d).map(|p| d - 1 - p).collect() })
    }

    pub fn intersect(&self, other: &BidegreeShape) -> Result<Self> {
        let rows: Vec<usize> = self.rows.iter().zip(&other.rows).map(|(a, b)| *a.min(b)).collect();
        Self::from_row_maxima(rows)
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        p < self.rows.len() && q <= self.rows[p]
    }

    pub fn max_p(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn max_q(&self, p: usize) -> Option<usize> {
        self.rows.get(p).copied()
    }

    /// Largest `p` with `(p, q)` in the shape.
    pub fn max_p_at(&self, q: usize) -> Option<usize> {
        (0..self.rows.len()).rev().find(|&p| self.rows[p] >= q)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(p, &m)| (0..=m).map(move |q| (p, q)))
    }

    /// Largest `n` with `(n, n)` supported.
    pub fn diagonal_bound(&self) -> Option<usize> {
        (0..self.rows.len()).rev().find(|&n| self.rows[n] >= n)
    }

    /// Largest `N` such that every anti-diagonal `p + q = n <= N` is supported.
    pub fn antidiagonal_bound(&self) -> Option<usize> {
        let mut n = 0;
        if !self.contains(0, 0) {
            return None;
        }
        while (0..=n + 1).all(|p| self.contains(p, n + 1 - p)) {
            n += 1;
        }
        Some(n)
    }
}

type Tables = Vec<Vec<Vec<Vec<u32>>>>;

/// A bisimplicial set truncated to a [`BidegreeShape`]. Horizontal operators
/// act on `p`, vertical on `q`. Degeneracies exist only where the target
/// bidegree is in the shape.
#[derive(Clone, PartialEq, Eq)]
pub struct BisimplicialSet {
    shape: BidegreeShape,
    sizes: Vec<Vec<usize>>,
    hfaces: Tables,
    hdegens: Tables,
    vfaces: Tables,
    vdegens: Tables,
    basepoint: Option<u32>,
}

impl fmt::Debug for BisimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BisimplicialSet")
            .field("shape", &self.shape)
            .field("sizes", &self.sizes)
            .field("basepoint", &self.basepoint)
            .finish()
    }
}

/// A failed bisimplicial identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiIdentityViolation {
    pub identity: String,
    pub p: usize,
    pub q: usize,
    pub simplex: u32,
}

impl fmt::Display for BiIdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails on simplex {} at ({}, {})", self.identity, self.simplex, self.p, self.q)
    }
}

impl BisimplicialSet {
    /// Builds a bisimplicial set from keys per bidegree and the four families
    /// of structure functions. `keys[p][q]` must be present exactly on the
    /// shape.
    pub fn from_keys<K, HF, HS, VF, VS>(
        shape: BidegreeShape,
        keys: &[Vec<Vec<K>>],
        hface: HF,
        hdegen: HS,
        vface: VF,
        vdegen: VS,
    ) -> Result<Self>
    where
        K: Hash + Eq,
        HF: Fn(usize, usize, usize, &K) -> K,
        HS: Fn(usize, usize, usize, &K) -> K,
        VF: Fn(usize, usize, usize, &K) -> K,
        VS: Fn(usize, usize, usize, &K) -> K,
    {
        let index: Vec<Vec<HashMap<&K, u32>>> = keys
            .iter()
            .map(|row| row.iter().map(|ks| ks.iter().enumerate().map(|(i, k)| (k, i as u32)).collect()).collect())
            .collect();
        for (p, q) in shape.cells() {
            let ks = keys.get(p).and_then(|r| r.get(q)).ok_or(Error::OutsideShape { p, q })?;
            if index[p][q].len() != ks.len() {
                return Err(Error::invalid(format!("duplicate keys at ({p}, {q})")));
            }
        }
        let look = |p: usize, q: usize, k: &K| -> Result<u32> {
            index[p][q].get(k).copied().ok_or_else(|| Error::invalid(format!("structure map lands outside ({p}, {q})")))
        };
        let mut t = Self::empty_tables(&shape);
        for (p, q) in shape.cells() {
            let ks = &keys[p][q];
            if p > 0 {
                for i in 0..=p {
                    t.hfaces[p][q][i] = ks.iter().map(|k| look(p - 1, q, &hface(p, q, i, k))).collect::<Result<_>>()?;
                }
            }
            if shape.contains(p + 1, q) {
                for j in 0..=p {
                    t.hdegens[p][q][j] = ks.iter().map(|k| look(p + 1, q, &hdegen(p, q, j, k))).collect::<Result<_>>()?;
                }
            }
            if q > 0 {
                for i in 0..=q {
                    t.vfaces[p][q][i] = ks.iter().map(|k| look(p, q - 1, &vface(p, q, i, k))).collect::<Result<_>>()?;
                }
            }
            if shape.contains(p, q + 1) {
                for j in 0..=q {
                    t.vdegens[p][q][j] = ks.iter().map(|k| look(p, q + 1, &vdegen(p, q, j, k))).collect::<Result<_>>()?;
                }
            }
            t.sizes[p][q] = ks.len();
        }
        Ok(t)
    }

    fn empty_tables(shape: &BidegreeShape) -> Self {
        let rows = shape.max_p() + 1;
        let mk = |count: &dyn Fn(usize, usize) -> usize| -> Tables {
            (0..rows)
                .map(|p| {
                    let qn = shape.max_q(p).unwrap() + 1;
                    (0..qn).map(|q| vec![Vec::new(); count(p, q)]).collect()
                })
                .collect()
        };
        BisimplicialSet {
            shape: shape.clone(),
            sizes: (0..rows).map(|p| vec![0; shape.max_q(p).unwrap() + 1]).collect(),
            hfaces: mk(&|p, _| if p > 0 { p + 1 } else { 0 }),
            hdegens: mk(&|p, q| if shape.contains(p + 1, q) { p + 1 } else { 0 }),
            vfaces: mk(&|_, q| if q > 0 { q + 1 } else { 0 }),
            vdegens: mk(&|p, q| if shape.contains(p, q + 1) { q + 1 } else { 0 }),
            basepoint: None,
        }
    }

    /// Assembles a bisimplicial set from per-bidegree sizes and closures
    /// computing the structure maps on indices.
    pub fn from_index_maps(
        shape: BidegreeShape,
        sizes: impl Fn(usize, usize) -> usize,
        hface: impl Fn(usize, usize, usize, u32) -> u32,
        hdegen: impl Fn(usize, usize, usize, u32) -> u32,
        vface: impl Fn(usize, usize, usize, u32) -> u32,
        vdegen: impl Fn(usize, usize, usize, u32) -> u32,
    ) -> Result<Self> {
        let mut t = Self::empty_tables(&shape);
        for (p, q) in shape.cells() {
            t.sizes[p][q] = sizes(p, q);
        }
        for (p, q) in shape.cells() {
            let n = t.sizes[p][q] as u32;
            for i in 0..t.hfaces[p][q].len() {
                t.hfaces[p][q][i] = (0..n).map(|x| hface(p, q, i, x)).collect();
            }
            for j in 0..t.hdegens[p][q].len() {
                t.hdegens[p][q][j] = (0..n).map(|x| hdegen(p, q, j, x)).collect();
            }
            for i in 0..t.vfaces[p][q].len() {
                t.vfaces[p][q][i] = (0..n).map(|x| vface(p, q, i, x)).collect();
            }
            for j in 0..t.vdegens[p][q].len() {
                t.vdegens[p][q][j] = (0..n).map(|x| vdegen(p, q, j, x)).collect();
            }
        }
        t.check_ranges()?;
        Ok(t)
    }

    fn check_ranges(&self) -> Result<()> {
        for (p, q) in self.shape.cells() {
            let bad = |tables: &Vec<Vec<u32>>, tp: usize, tq: usize| {
                tables.iter().any(|t| t.len() != self.sizes[p][q] || t.iter().any(|&y| y as usize >= self.sizes[tp][tq]))
            };
            if (p > 0 && bad(&self.hfaces[p][q], p - 1, q))
                || (q > 0 && bad(&self.vfaces[p][q], p, q - 1))
                || (self.shape.contains(p + 1, q) && bad(&self.hdegens[p][q], p + 1, q))
                || (self.shape.contains(p, q + 1) && bad(&self.vdegens[p][q], p, q + 1))
            {
                return Err(Error::invalid(format!("structure map at ({p}, {q}) is not total")));
            }
        }
        Ok(())
    }

    pub fn with_basepoint(mut self, basepoint: Option<u32>) -> Result<Self> {
        if let Some(b) = basepoint {
            if b as usize >= self.sizes[0][0] {
                return Err(Error::invalid("basepoint is not a (0, 0)-simplex"));
            }
        }
        self.basepoint = basepoint;
        Ok(self)
    }

    pub fn basepoint(&self) -> Option<u32> {
        self.basepoint
    }

    pub fn shape(&self) -> &BidegreeShape {
        &self.shape
    }

    pub fn size(&self, p: usize, q: usize) -> usize {
        self.sizes[p][q]
    }

    pub fn hface(&self, p: usize, q: usize, i: usize, x: u32) -> u32 {
        self.hfaces[p][q][i][x as usize]
    }

    pub fn hdegen(&self, p: usize, q: usize, j: usize, x: u32) -> u32 {
        self.hdegens[p][q][j][x as usize]
    }

    pub fn vface(&self, p: usize, q: usize, i: usize, x: u32) -> u32 {
        self.vfaces[p][q][i][x as usize]
    }

    pub fn vdegen(&self, p: usize, q: usize, j: usize, x: u32) -> u32 {
        self.vdegens[p][q][j][x as usize]
    }

    /// Horizontal simplicial set `p ↦ B_{p,q}`.
    pub fn row(&self, q: usize) -> Result<SimplicialSet> {
        let bound = self.shape.max_p_at(q).ok_or(Error::OutsideShape { p: 0, q })?;
        let sizes = (0..=bound).map(|p| self.sizes[p][q]).collect();
        let faces = (0..=bound).map(|p| if p == 0 { Vec::new() } else { self.hfaces[p][q].clone() }).collect();
        let degens = (0..=bound).map(|p| if p == bound { Vec::new() } else { self.hdegens[p][q].clone() }).collect();
        let bp = if q == 0 { self.basepoint } else { None };
        SimplicialSet::from_tables(bound, sizes, faces, degens, bp)
    }

    /// Vertical simplicial set `q ↦ B_{p,q}`.
    pub fn column(&self, p: usize) -> Result<SimplicialSet> {
        let bound = self.shape.max_q(p).ok_or(Error::OutsideShape { p, q: 0 })?;
        let sizes = (0..=bound).map(|q| self.sizes[p][q]).collect();
        let faces = (0..=bound).map(|q| if q == 0 { Vec::new() } else { self.vfaces[p][q].clone() }).collect();
        let degens = (0..=bound).map(|q| if q == bound { Vec::new() } else { self.vdegens[p][q].clone() }).collect();
        let bp = if p == 0 { self.basepoint } else { None };
        SimplicialSet::from_tables(bound, sizes, faces, degens, bp)
    }

    /// Horizontal and vertical identities plus commutation of every
    /// horizontal operator with every vertical one.
    pub fn audit(&self) -> Vec<BiIdentityViolation> {
        let mut out = Vec::new();
        for q in 0..=self.shape.max_q(0).unwrap() {
            if let Ok(r) = self.row(q) {
                for v in r.audit() {
                    out.push(BiIdentityViolation { identity: format!("horizontal {}", v.identity), p: v.degree, q, simplex: v.simplex });
                }
            }
        }
        for p in 0..=self.shape.max_p() {
            if let Ok(c) = self.column(p) {
                for v in c.audit() {
                    out.push(BiIdentityViolation { identity: format!("vertical {}", v.identity), p, q: v.degree, simplex: v.simplex });
                }
            }
        }
        let sh = &self.shape;
        for (p, q) in sh.cells() {
            for x in 0..self.sizes[p][q] as u32 {
                let mut fail = |what: String| out.push(BiIdentityViolation { identity: what, p, q, simplex: x });
                if p > 0 && q > 0 {
                    for i in 0..=p {
                        for j in 0..=q {
                            if self.hface(p, q - 1, i, self.vface(p, q, j, x)) != self.vface(p - 1, q, j, self.hface(p, q, i, x)) {
                                fail(format!("dh{i} dv{j} = dv{j} dh{i}"));
                            }
                        }
                    }
                }
                if p > 0 && sh.contains(p, q + 1) {
                    for i in 0..=p {
                        for j in 0..=q {
                            if self.hface(p, q + 1, i, self.vdegen(p, q, j, x)) != self.vdegen(p - 1, q, j, self.hface(p, q, i, x)) {
                                fail(format!("dh{i} sv{j} = sv{j} dh{i}"));
                            }
                        }
                    }
                }
                if q > 0 && sh.contains(p + 1, q) {
                    for i in 0..=p {
                        for j in 0..=q {
                            if self.vface(p + 1, q, j, self.hdegen(p, q, i, x)) != self.hdegen(p, q - 1, i, self.vface(p, q, j, x)) {
                                fail(format!("dv{j} sh{i} = sh{i} dv{j}"));
                            }
                        }
                    }
                }
                if sh.contains(p + 1, q + 1) {
                    for i in 0..=p {
                        for j in 0..=q {
                            if self.hdegen(p, q + 1, i, self.vdegen(p, q, j, x)) != self.vdegen(p + 1, q, j, self.hdegen(p, q, i, x)) {
                                fail(format!("sh{i} sv{j} = sv{j} sh{i}"));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Restriction to a smaller downward-closed shape.
    pub fn restrict_shape(&self, shape: &BidegreeShape) -> Result<Self> {
        for (p, q) in shape.cells() {
            if !self.shape.contains(p, q) {
                return Err(Error::OutsideShape { p, q });
            }
        }
        let out = Self::from_index_maps(
            shape.clone(),
            |p, q| self.sizes[p][q],
            |p, q, i, x| self.hface(p, q, i, x),
            |p, q, j, x| self.hdegen(p, q, j, x),
            |p, q, i, x| self.vface(p, q, i, x),
            |p, q, j, x| self.vdegen(p, q, j, x),
        )?;
        out.with_basepoint(self.basepoint)
    }

    /// Bisimplicial set with horizontal and vertical directions swapped.
    pub fn transpose(&self) -> Result<Self> {
        let mut rows = Vec::new();
        for q in 0..=self.shape.max_q(0).unwrap() {
            rows.push(self.shape.max_p_at(q).unwrap());
        }
        let shape = BidegreeShape::from_row_maxima(rows)?;
        Self::from_index_maps(
            shape,
            |p, q| self.sizes[q][p],
            |p, q, i, x| self.vface(q, p, i, x),
            |p, q, j, x| self.vdegen(q, p, j, x),
            |p, q, i, x| self.hface(q, p, i, x),
            |p, q, j, x| self.hdegen(q, p, j, x),
        )?
        .with_basepoint(self.basepoint)
    }
}

/// A bidegreewise map commuting with all structure maps.
#[derive(Debug, Clone)]
pub struct BisimplicialMap {
    source: Arc<BisimplicialSet>,
    target: Arc<BisimplicialSet>,
    components: Vec<Vec<Vec<u32>>>,
}

impl BisimplicialMap {
    pub fn new(source: Arc<BisimplicialSet>, target: Arc<BisimplicialSet>, components: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let m = Self::new_unchecked(source, target, components)?;
        if let Some(msg) = m.violation() {
            return Err(Error::Invalid(msg));
        }
        Ok(m)
    }

    pub fn new_unchecked(source: Arc<BisimplicialSet>, target: Arc<BisimplicialSet>, components: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        for (p, q) in source.shape.cells() {
            if !target.shape.contains(p, q) {
                return Err(Error::OutsideShape { p, q });
            }
            let c = components.get(p).and_then(|r| r.get(q)).ok_or(Error::OutsideShape { p, q })?;
            if c.len() != source.size(p, q) || c.iter().any(|&y| y as usize >= target.size(p, q)) {
                return Err(Error::invalid(format!("component at ({p}, {q}) is not total")));
            }
        }
        Ok(BisimplicialMap { source, target, components })
    }

    pub fn source(&self) -> &Arc<BisimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<BisimplicialSet> {
        &self.target
    }

    pub fn apply(&self, p: usize, q: usize, x: u32) -> u32 {
        self.components[p][q][x as usize]
    }

    pub fn violation(&self) -> Option<String> {
        let s = &self.source;
        let t = &self.target;
        for (p, q) in s.shape.cells() {
            for x in 0..s.size(p, q) as u32 {
                let fx = self.apply(p, q, x);
                if p > 0 && (0..=p).any(|i| self.apply(p - 1, q, s.hface(p, q, i, x)) != t.hface(p, q, i, fx)) {
                    return Some(format!("horizontal face mismatch at ({p}, {q}, {x})"));
                }
                if q > 0 && (0..=q).any(|i| self.apply(p, q - 1, s.vface(p, q, i, x)) != t.vface(p, q, i, fx)) {
                    return Some(format!("vertical face mismatch at ({p}, {q}, {x})"));
                }
                if s.shape.contains(p + 1, q) && (0..=p).any(|j| self.apply(p + 1, q, s.hdegen(p, q, j, x)) != t.hdegen(p, q, j, fx)) {
                    return Some(format!("horizontal degeneracy mismatch at ({p}, {q}, {x})"));
                }
                if s.shape.contains(p, q + 1) && (0..=q).any(|j| self.apply(p, q + 1, s.vdegen(p, q, j, x)) != t.vdegen(p, q, j, fx)) {
                    return Some(format!("vertical degeneracy mismatch at ({p}, {q}, {x})"));
                }
            }
        }
        None
    }

    /// The induced map on row `q`.
    pub fn row(&self, q: usize, source_row: &Arc<SimplicialSet>, target_row: &Arc<SimplicialSet>) -> Result<SimplicialMap> {
        let comps = (0..=source_row.bound()).map(|p| self.components[p][q].clone()).collect();
        SimplicialMap::new_unchecked(source_row.clone(), target_row.clone(), comps)
    }
}

/// `(X □ Y)_{p,q} = X_p × Y_q` on the rectangle of both bounds.
pub fn box_product(x: &SimplicialSet, y: &SimplicialSet) -> Result<BisimplicialSet> {
    let shape = BidegreeShape::rectangle(x.bound(), y.bound());
    let ys = |q: usize| y.size(q) as u32;
    let b = BisimplicialSet::from_index_maps(
        shape,
        |p, q| x.size(p) * y.size(q),
        |p, q, i, k| x.face(p, i, k / ys(q)) * ys(q) + k % ys(q),
        |p, q, j, k| x.degen(p, j, k / ys(q)) * ys(q) + k % ys(q),
        |_, q, i, k| (k / ys(q)) * ys(q - 1) + y.face(q, i, k % ys(q)),
        |_, q, j, k| (k / ys(q)) * ys(q + 1) + y.degen(q, j, k % ys(q)),
    )?;
    let bp = match (x.basepoint(), y.basepoint()) {
        (Some(a), Some(c)) => Some(a * ys(0) + c),
        _ => None,
    };
    b.with_basepoint(bp)
}

/// `diag(B)_n = B_{n,n}` with `d_i = dʰ_i dᵛ_i`, `s_j = sʰ_j sᵛ_j`.
pub fn diag(b: &BisimplicialSet) -> Result<SimplicialSet> {
    let bound = b.shape.diagonal_bound().ok_or(Error::InsufficientShape("diagonal"))?;
    let sizes: Vec<usize> = (0..=bound).map(|n| b.size(n, n)).collect();
    let mut faces = vec![Vec::new(); bound + 1];
    let mut degens = vec![Vec::new(); bound + 1];
    for n in 0..=bound {
        if n > 0 {
            for i in 0..=n {
                faces[n].push((0..sizes[n] as u32).map(|x| b.hface(n, n - 1, i, b.vface(n, n, i, x))).collect());
            }
        }
        if n < bound {
            for j in 0..=n {
                degens[n].push((0..sizes[n] as u32).map(|x| b.hdegen(n, n + 1, j, b.vdegen(n, n, j, x))).collect());
            }
        }
    }
    SimplicialSet::from_tables(bound, sizes, faces, degens, b.basepoint)
}

pub fn diag_map(f: &BisimplicialMap) -> Result<SimplicialMap> {
    let source = Arc::new(diag(&f.source)?);
    let target = Arc::new(diag(&f.target)?.truncate(source.bound())?);
    let comps = (0..=source.bound()).map(|n| f.components[n][n].clone()).collect();
    SimplicialMap::new_unchecked(source, target, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::product::product_sset;
    use crate::sset::standard::{boundary, delta};

    #[test]
    fn shapes() {
        let s = BidegreeShape::staircase(4).unwrap();
        assert!(s.contains(0, 3) && s.contains(3, 0) && !s.contains(2, 2));
        assert_eq!(s.diagonal_bound(), Some(1));
        assert_eq!(s.antidiagonal_bound(), Some(3));
        assert_eq!(BidegreeShape::rectangle(2, 5).antidiagonal_bound(), Some(2));
        assert!(BidegreeShape::from_support(&[(0, 0), (1, 1)]).is_err());
        assert!(BidegreeShape::from_support(&[(0, 0), (1, 0), (0, 1)]).is_ok());
    }

    #[test]
    fn box_of_intervals() {
        let d1 = delta(1, 3).unwrap();
        let b = box_product(&d1, &d1).unwrap();
        for (p, q) in b.shape().cells() {
            assert_eq!(b.size(p, q), (p + 2) * (q + 2));
        }
        assert!(b.audit().is_empty());
        let dg = diag(&b).unwrap();
        assert_eq!(dg.size(1), 9);
        for n in 0..=3 {
            assert_eq!(dg.size(n), (n + 2) * (n + 2));
        }
    }

    #[test]
    fn diagonal_of_box_is_product() {
        let x = boundary(2, 3).unwrap();
        let dg = diag(&box_product(&x, &x).unwrap()).unwrap();
        let pr = product_sset(&x, &x).unwrap();
        assert_eq!(dg, pr);
    }

    #[test]
    fn box_with_point_has_constant_rows() {
        let y = boundary(2, 2).unwrap();
        let b = box_product(&delta(0, 2).unwrap(), &y).unwrap();
        for p in 0..=2 {
            assert_eq!(b.column(p).unwrap().sizes(), y.sizes());
        }
    }
}
