//! The left adjoint `d⁎` of the diagonal, computed as a coend quotient.
//!
//! `(d⁎X)_{p,q}` is the quotient of `⊔_n X_n × Δⁿ_p × Δⁿ_q` by
//! `(x·θ, α, β) ~ (x, θα, θβ)`. Every class has a representative with `x`
//! nondegenerate and `(α, β)` jointly surjective, so only `n <= p + q + 1`
//! and `n <= dim X` are needed, and elementary `θ` generate the relation
//! inside that range.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::bisimplicial::{BidegreeShape, BisimplicialMap, BisimplicialSet};
use crate::sset::maps::SimplicialMap;
use crate::sset::simplicial::SimplicialSet;
use crate::util::{drop_entry, monotone_maps, repeat_entry, Monotone, UnionFind};

struct MonoTable {
    maps: Vec<Vec<Vec<Monotone>>>,
    index: Vec<Vec<HashMap<Monotone, u32>>>,
}

impl MonoTable {
    fn new(kmax: usize, nmax: usize) -> Self {
        let maps: Vec<Vec<Vec<Monotone>>> =
            (0..=kmax).map(|k| (0..=nmax).map(|n| monotone_maps(k, n)).collect()).collect();
        let index = maps
            .iter()
            .map(|row| row.iter().map(|ms| ms.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect()).collect())
            .collect();
        MonoTable { maps, index }
    }

    fn count(&self, k: usize, n: usize) -> usize {
        self.maps[k][n].len()
    }

    fn get(&self, k: usize, n: usize, a: u32) -> &Monotone {
        &self.maps[k][n][a as usize]
    }

    fn find(&self, k: usize, n: usize, m: &[u8]) -> u32 {
        self.index[k][n][m]
    }
}

/// A triple `(x, α, β)` with `x ∈ X_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Triple {
    n: usize,
    x: u32,
    alpha: Monotone,
    beta: Monotone,
}

/// Reduces a triple to its canonical representative: `x` nondegenerate and
/// `(α, β)` jointly surjective.
fn canonical(x: &SimplicialSet, mut t: Triple) -> Triple {
    loop {
        let mut hit = vec![false; t.n + 1];
        for &v in t.alpha.iter().chain(&t.beta) {
            hit[v as usize] = true;
        }
        if let Some(s) = hit.iter().position(|h| !h) {
            // (α, β) = δ_s (α', β')
            t.x = x.face(t.n, s, t.x);
            for v in t.alpha.iter_mut().chain(t.beta.iter_mut()) {
                if *v as usize > s {
                    *v -= 1;
                }
            }
            t.n -= 1;
            continue;
        }
        let simplex = x.simplex(t.n, t.x);
        match simplex.degeneracy_word.first() {
            None => return t,
            Some(&j) => {
                // x = s_j z, and s_j corresponds to σ_j : [n] -> [n-1]
                t.x = x.face(t.n, j as usize, t.x);
                for v in t.alpha.iter_mut().chain(t.beta.iter_mut()) {
                    if *v > j {
                        *v -= 1;
                    }
                }
                t.n -= 1;
            }
        }
    }
}

struct Cell {
    nmax: Option<usize>,
    offsets: Vec<usize>,
    #[cfg_attr(not(test), allow(dead_code))]
    total: usize,
    class: Vec<u32>,
    reps: Vec<u32>,
}

struct Coend<'a> {
    x: &'a SimplicialSet,
    shape: BidegreeShape,
    monos: MonoTable,
    cells: Vec<Vec<Cell>>,
}

impl<'a> Coend<'a> {
    fn build(x: &'a SimplicialSet, shape: Option<&BidegreeShape>) -> Result<Self> {
        let stair = BidegreeShape::staircase(x.bound())?;
        let shape = match shape {
            None => stair,
            Some(s) => {
                for (p, q) in s.cells() {
                    if !stair.contains(p, q) {
                        return Err(Error::OutsideShape { p, q });
                    }
                }
                s.clone()
            }
        };
        let dim = x.dimension();
        let kmax = shape.max_p().max(shape.max_q(0).unwrap());
        let nmax_global = dim.map_or(0, |d| d.min(x.bound()));
        let monos = MonoTable::new(kmax + 1, nmax_global);
        let mut coend = Coend { x, shape: shape.clone(), monos, cells: Vec::new() };
        let mut cells = Vec::new();
        for p in 0..=shape.max_p() {
            let mut row = Vec::new();
            for q in 0..=shape.max_q(p).unwrap() {
                row.push(coend.cell(p, q, dim));
            }
            cells.push(row);
        }
        coend.cells = cells;
        Ok(coend)
    }

    fn index(&self, cell: &Cell, p: usize, q: usize, n: usize, x: u32, a: u32, b: u32) -> usize {
        let (na, nb) = (self.monos.count(p, n), self.monos.count(q, n));
        cell.offsets[n] + (x as usize * na + a as usize) * nb + b as usize
    }

    fn decode(&self, p: usize, q: usize, idx: usize) -> Triple {
        let cell = &self.cells[p][q];
        let n = (0..cell.offsets.len()).rev().find(|&n| cell.offsets[n] <= idx).unwrap();
        let (na, nb) = (self.monos.count(p, n), self.monos.count(q, n));
        let r = idx - cell.offsets[n];
        let b = (r % nb) as u32;
        let a = ((r / nb) % na) as u32;
        let x = (r / nb / na) as u32;
        Triple { n, x, alpha: self.monos.get(p, n, a).clone(), beta: self.monos.get(q, n, b).clone() }
    }

    fn cell(&self, p: usize, q: usize, dim: Option<usize>) -> Cell {
        let nmax = dim.map(|d| d.min(p + q + 1));
        let mut offsets = Vec::new();
        let mut total = 0usize;
        if let Some(m) = nmax {
            for n in 0..=m {
                offsets.push(total);
                total += self.x.size(n) * self.monos.count(p, n) * self.monos.count(q, n);
            }
        }
        let mut cell = Cell { nmax, offsets, total, class: Vec::new(), reps: Vec::new() };
        let mut uf = UnionFind::new(total);
        let x = self.x;
        if let Some(m) = nmax {
            for n in 1..=m {
                // (d_i x, α', β') ~ (x, δ_i α', δ_i β')
                for xs in 0..x.size(n) as u32 {
                    for i in 0..=n {
                        let fx = x.face(n, i, xs);
                        for (a1, al) in self.monos.maps[p][n - 1].iter().enumerate() {
                            let up_a: Monotone = al.iter().map(|&v| if v as usize >= i { v + 1 } else { v }).collect();
                            let ia = self.monos.find(p, n, &up_a);
                            for (b1, be) in self.monos.maps[q][n - 1].iter().enumerate() {
                                let up_b: Monotone = be.iter().map(|&v| if v as usize >= i { v + 1 } else { v }).collect();
                                let ib = self.monos.find(q, n, &up_b);
                                let lhs = self.index(&cell, p, q, n - 1, fx, a1 as u32, b1 as u32);
                                let rhs = self.index(&cell, p, q, n, xs, ia, ib);
                                uf.union(lhs as u32, rhs as u32);
                            }
                        }
                    }
                }
            }
            for n in 0..m {
                // (s_j x, α', β') ~ (x, σ_j α', σ_j β')
                for xs in 0..x.size(n) as u32 {
                    for j in 0..=n {
                        let sx = x.degen(n, j, xs);
                        for (a1, al) in self.monos.maps[p][n + 1].iter().enumerate() {
                            let dn_a: Monotone = al.iter().map(|&v| if v as usize > j { v - 1 } else { v }).collect();
                            let ia = self.monos.find(p, n, &dn_a);
                            for (b1, be) in self.monos.maps[q][n + 1].iter().enumerate() {
                                let dn_b: Monotone = be.iter().map(|&v| if v as usize > j { v - 1 } else { v }).collect();
                                let ib = self.monos.find(q, n, &dn_b);
                                let lhs = self.index(&cell, p, q, n + 1, sx, a1 as u32, b1 as u32);
                                let rhs = self.index(&cell, p, q, n, xs, ia, ib);
                                uf.union(lhs as u32, rhs as u32);
                            }
                        }
                    }
                }
            }
        }
        let (count, class) = uf.classes();
        let mut reps = vec![u32::MAX; count];
        for (i, &c) in class.iter().enumerate() {
            if reps[c as usize] == u32::MAX {
                reps[c as usize] = i as u32;
            }
        }
        cell.class = class;
        cell.reps = reps;
        cell
    }

    /// Class of an arbitrary triple at `(p, q)`.
    fn class_of(&self, p: usize, q: usize, t: Triple) -> u32 {
        let cell = &self.cells[p][q];
        let t = if cell.nmax.map_or(true, |m| t.n > m) { canonical(self.x, t) } else { t };
        let a = self.monos.find(p, t.n, &t.alpha);
        let b = self.monos.find(q, t.n, &t.beta);
        cell.class[self.index(cell, p, q, t.n, t.x, a, b)]
    }

    fn rep(&self, p: usize, q: usize, c: u32) -> Triple {
        self.decode(p, q, self.cells[p][q].reps[c as usize] as usize)
    }

    fn object(&self) -> Result<BisimplicialSet> {
        let b = BisimplicialSet::from_index_maps(
            self.shape.clone(),
            |p, q| self.cells[p][q].reps.len(),
            |p, q, i, c| {
                let t = self.rep(p, q, c);
                self.class_of(p - 1, q, Triple { alpha: drop_entry(&t.alpha, i), ..t })
            },
            |p, q, j, c| {
                let t = self.rep(p, q, c);
                self.class_of(p + 1, q, Triple { alpha: repeat_entry(&t.alpha, j), ..t })
            },
            |p, q, i, c| {
                let t = self.rep(p, q, c);
                self.class_of(p, q - 1, Triple { beta: drop_entry(&t.beta, i), ..t })
            },
            |p, q, j, c| {
                let t = self.rep(p, q, c);
                self.class_of(p, q + 1, Triple { beta: repeat_entry(&t.beta, j), ..t })
            },
        )?;
        let bp = self.x.basepoint().map(|v| self.class_of(0, 0, Triple { n: 0, x: v, alpha: vec![0], beta: vec![0] }));
        b.with_basepoint(bp)
    }

    #[cfg(test)]
    fn total(&self, p: usize, q: usize) -> usize {
        self.cells[p][q].total
    }
}

/// `d⁎X` on the staircase `{p + q + 1 <= D}`, or on a sub-shape of it.
pub fn d_star(x: &SimplicialSet) -> Result<BisimplicialSet> {
    Coend::build(x, None)?.object()
}

pub fn d_star_on(x: &SimplicialSet, shape: &BidegreeShape) -> Result<BisimplicialSet> {
    Coend::build(x, Some(shape))?.object()
}

/// `d⁎f`, together with both endpoints, on a common shape.
pub fn d_star_map(f: &SimplicialMap, shape: Option<&BidegreeShape>) -> Result<BisimplicialMap> {
    let src = Coend::build(f.source(), shape)?;
    let tgt = Coend::build(f.target(), Some(&src.shape))?;
    let source = Arc::new(src.object()?);
    let target = Arc::new(tgt.object()?);
    let mut comps = Vec::new();
    for p in 0..=src.shape.max_p() {
        let mut row = Vec::new();
        for q in 0..=src.shape.max_q(p).unwrap() {
            let comp: Vec<u32> = (0..source.size(p, q) as u32)
                .map(|c| {
                    let t = src.rep(p, q, c);
                    let image = Triple { x: f.apply(t.n, t.x), ..t };
                    tgt.class_of(p, q, canonical(f.target(), image))
                })
                .collect();
            row.push(comp);
        }
        comps.push(row);
    }
    BisimplicialMap::new_unchecked(source, target, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::bisimplicial::box_product;
    use crate::sset::standard::{boundary, delta, horn};
    use crate::util::is_surjective_onto;

    /// Independent count: nondegenerate `y ∈ X_n` with `(α, β)` jointly onto `[n]`.
    fn canonical_count(x: &SimplicialSet, p: usize, q: usize) -> usize {
        let mut total = 0;
        for n in 0..=x.bound().min(p + q + 1) {
            let nondeg = x.nondegenerate(n).count();
            let mut pairs = 0;
            for a in monotone_maps(p, n) {
                for b in monotone_maps(q, n) {
                    let mut ab = a.clone();
                    ab.extend(&b);
                    if is_surjective_onto(&ab, n) {
                        pairs += 1;
                    }
                }
            }
            total += nondeg * pairs;
        }
        total
    }

    #[test]
    fn class_counts_match_canonical_forms() {
        for x in [delta(1, 4).unwrap(), boundary(2, 4).unwrap(), horn(2, 1, 4).unwrap(), delta(2, 4).unwrap()] {
            let b = d_star(&x).unwrap();
            for (p, q) in b.shape().cells() {
                assert_eq!(b.size(p, q), canonical_count(&x, p, q), "({p}, {q})");
            }
            assert!(b.audit().is_empty());
        }
    }

    #[test]
    fn canonical_form_is_a_class_invariant() {
        let x = boundary(2, 4).unwrap();
        let c = Coend::build(&x, None).unwrap();
        let (p, q) = (1, 1);
        let mut seen: HashMap<u32, Triple> = HashMap::new();
        for idx in 0..c.total(p, q) {
            let t = c.decode(p, q, idx);
            let cls = c.cells[p][q].class[idx];
            let canon = canonical(&x, t);
            if let Some(prev) = seen.insert(cls, canon.clone()) {
                assert_eq!(prev, canon);
            }
        }
    }

    #[test]
    fn simplex_goes_to_box() {
        for n in 0..=3 {
            let d = delta(n, 5).unwrap();
            let ds = d_star(&d).unwrap();
            let bx = box_product(&d, &d).unwrap();
            for (p, q) in ds.shape().cells() {
                assert_eq!(ds.size(p, q), bx.size(p, q));
            }
        }
        let ds = d_star(&delta(0, 3).unwrap()).unwrap();
        assert!(ds.shape().cells().all(|(p, q)| ds.size(p, q) == 1));
    }

    #[test]
    fn maps_commute() {
        use crate::sset::colimit::map_by_vertices;
        let h = Arc::new(horn(2, 0, 4).unwrap());
        let d = Arc::new(delta(2, 4).unwrap());
        let j = map_by_vertices(&h, &d, &[0, 1, 2]).unwrap();
        let dj = d_star_map(&j, None).unwrap();
        assert!(dj.violation().is_none());
    }
}
