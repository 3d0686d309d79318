use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homotopy::scalar::Scalar;
use crate::homotopy::snf::{smith_invariants, SparseMatrix};
use crate::sset::{SimplicialMap, SimplicialSet};
use crate::util::UnionFind;

/// A finitely generated abelian group `ℤ^r ⊕ ⊕ ℤ/tᵢ` with `t₁ | t₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Self {
        if order == 0 {
            return Self::free(1);
        }
        if order == 1 {
            return Self::trivial();
        }
        AbelianGroup { free_rank: 0, torsion: vec![BigInt::from(order)] }
    }

    /// From the invariant factors of a relation matrix on `generators`.
    pub fn from_invariants(generators: usize, invariants: &[BigInt]) -> Self {
        AbelianGroup {
            free_rank: generators - invariants.len(),
            torsion: invariants.iter().filter(|d| !d.is_one()).cloned().collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Drops one free summand, as for reduced homology in degree 0.
    pub fn reduced(&self) -> Self {
        AbelianGroup { free_rank: self.free_rank.saturating_sub(1), torsion: self.torsion.clone() }
    }

    /// Divisibility chain holds and every coefficient exceeds 1.
    pub fn is_canonical(&self) -> bool {
        self.torsion.iter().all(|t| *t > BigInt::one())
            && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Free chain complex with boundary matrices `∂ₙ : Cₙ -> Cₙ₋₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex<T> {
    ranks: Vec<usize>,
    /// `boundaries[n]` has `ranks[n-1]` rows and `ranks[n]` columns; index 0 is empty.
    boundaries: Vec<SparseMatrix<T>>,
}

impl<T: Scalar> ChainComplex<T> {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix<T>>) -> Result<Self> {
        if boundaries.len() != ranks.len() {
            return Err(Error::invalid("one boundary per degree is required"));
        }
        for n in 1..ranks.len() {
            if boundaries[n].rows() != ranks[n - 1] || boundaries[n].cols() != ranks[n] {
                return Err(Error::invalid(format!("boundary {n} has the wrong shape")));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundary(&self, n: usize) -> &SparseMatrix<T> {
        &self.boundaries[n]
    }

    /// Checks `∂ₙ₋₁ ∘ ∂ₙ = 0` in every degree.
    pub fn is_complex(&self) -> Result<bool> {
        for n in 2..self.ranks.len() {
            if !self.boundaries[n - 1].mul(&self.boundaries[n])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Hₙ` for `n < top`; the top degree is uncertified since its cycles
    /// are not hit by a known boundary.
    pub fn homology(&self, n: usize) -> Result<AbelianGroup> {
        if n >= self.top() {
            return Err(Error::Uncertified { degree: n, bound: self.top() });
        }
        let out_rank = if n == 0 { 0 } else { smith_invariants(&self.boundaries[n])?.len() };
        let incoming = smith_invariants(&self.boundaries[n + 1])?;
        let cycles = self.ranks[n] - out_rank;
        let big: Vec<BigInt> = incoming.iter().map(Scalar::to_bigint).collect();
        Ok(AbelianGroup::from_invariants(cycles, &big))
    }

    pub fn convert<U: Scalar>(&self) -> ChainComplex<U> {
        ChainComplex { ranks: self.ranks.clone(), boundaries: self.boundaries.iter().map(|b| b.convert()).collect() }
    }
}

/// Exact homology: fixed-width arithmetic first, arbitrary precision when
/// an intermediate value overflows.
pub fn homology_of(c: &ChainComplex<i64>, n: usize) -> Result<AbelianGroup> {
    match c.homology(n) {
        Err(Error::Overflow) => c.convert::<BigInt>().homology(n),
        other => other,
    }
}

/// Normalized chains: nondegenerate simplices, alternating face sums with
/// degenerate faces dropped.
pub fn normalized_chains(x: &SimplicialSet) -> ChainComplex<i64> {
    let basis = nondegenerate_positions(x);
    let ranks: Vec<usize> = (0..=x.bound()).map(|n| x.nondegenerate(n).count()).collect();
    let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
    for n in 1..=x.bound() {
        let columns = x
            .nondegenerate(n)
            .map(|s| {
                (0..=n)
                    .filter_map(|i| {
                        let f = x.face(n, i, s);
                        let pos = basis[n - 1][f as usize];
                        (pos != u32::MAX).then_some((pos, if i % 2 == 0 { 1 } else { -1 }))
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(ranks[n - 1], columns).expect("valid basis indices"));
    }
    ChainComplex { ranks, boundaries }
}

/// Basis position of each simplex, `u32::MAX` for degenerate ones.
pub(crate) fn nondegenerate_positions(x: &SimplicialSet) -> Vec<Vec<u32>> {
    (0..=x.bound())
        .map(|n| {
            let mut pos = vec![u32::MAX; x.size(n)];
            for (k, s) in x.nondegenerate(n).enumerate() {
                pos[s as usize] = k as u32;
            }
            pos
        })
        .collect()
}

/// `Hₙ(X)` for `n <= bound - 1`.
pub fn homology(x: &SimplicialSet, n: usize) -> Result<AbelianGroup> {
    if n + 1 > x.bound() {
        return Err(Error::Uncertified { degree: n, bound: x.bound() });
    }
    homology_of(&normalized_chains(&x.truncate(n + 1)?), n)
}

/// `H₀ … H_{bound-1}`.
pub fn homology_all(x: &SimplicialSet) -> Result<Vec<AbelianGroup>> {
    let c = normalized_chains(x);
    (0..x.bound()).map(|n| homology_of(&c, n)).collect()
}

/// Reduced homology up to `bound - 1`.
pub fn reduced_homology_all(x: &SimplicialSet) -> Result<Vec<AbelianGroup>> {
    let mut h = homology_all(x)?;
    if let Some(h0) = h.first_mut() {
        *h0 = h0.reduced();
    }
    Ok(h)
}

/// Mapping cone of the chain map induced by `f`:
/// `Coneₙ = Dₙ ⊕ Cₙ₋₁`, `∂(d, c) = (∂d + f c, -∂c)`.
pub fn mapping_cone(f: &SimplicialMap) -> ChainComplex<i64> {
    let (x, y) = (f.source(), f.target());
    let cx = normalized_chains(x);
    let cy = normalized_chains(y);
    let ypos = nondegenerate_positions(y);
    let xs: Vec<Vec<u32>> = (0..=x.bound()).map(|n| x.nondegenerate(n).collect()).collect();
    let top = x.bound().min(y.bound());
    let ranks: Vec<usize> = (0..=top).map(|n| cy.rank(n) + if n > 0 { cx.rank(n - 1) } else { 0 }).collect();
    let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
    for n in 1..=top {
        let mut columns: Vec<Vec<(u32, i64)>> = Vec::with_capacity(ranks[n]);
        for c in 0..cy.rank(n) {
            columns.push(cy.boundary(n).column(c).to_vec());
        }
        // generator c in C_{n-1}
        let shift = cy.rank(n - 1) as u32;
        for (k, &s) in xs[n - 1].iter().enumerate() {
            let mut col = Vec::new();
            let img = ypos[n - 1][f.apply(n - 1, s) as usize];
            if img != u32::MAX {
                col.push((img, 1));
            }
            if n >= 2 {
                for (r, v) in cx.boundary(n - 1).column(k) {
                    col.push((r + shift, -v));
                }
            }
            columns.push(col);
        }
        boundaries.push(SparseMatrix::from_columns(ranks[n - 1], columns).expect("valid basis indices"));
    }
    ChainComplex { ranks, boundaries }
}

/// Connected components: vertex classes under the edge relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// component of each vertex, numbered by least vertex
    pub of_vertex: Vec<u32>,
}

impl Components {
    pub fn representatives(&self) -> Vec<u32> {
        let mut reps = vec![u32::MAX; self.count];
        for (v, &c) in self.of_vertex.iter().enumerate() {
            if reps[c as usize] == u32::MAX {
                reps[c as usize] = v as u32;
            }
        }
        reps
    }
}

pub fn pi0(x: &SimplicialSet) -> Components {
    let mut uf = UnionFind::new(x.size(0));
    if x.bound() >= 1 {
        for e in 0..x.size(1) as u32 {
            uf.union(x.face(1, 0, e), x.face(1, 1, e));
        }
    }
    let (count, of_vertex) = uf.classes();
    Components { count, of_vertex }
}

/// The subobject spanned by one component.
pub fn component(x: &SimplicialSet, comps: &Components, c: u32) -> Result<SimplicialSet> {
    let keep: Vec<Vec<bool>> = (0..=x.bound())
        .map(|n| {
            (0..x.size(n) as u32)
                .map(|s| comps.of_vertex[x.act(n, s, &[0]) as usize] == c)
                .collect()
        })
        .collect();
    let (sub, _) = x.restrict(&keep)?;
    Ok(sub)
}

/// Entry counts in each boundary, for diagnostics.
pub fn boundary_nonzeros<T: Scalar>(c: &ChainComplex<T>) -> Vec<usize> {
    (0..c.ranks.len()).map(|n| (0..c.boundaries[n].cols()).map(|k| c.boundaries[n].column(k).len()).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, delta, sphere, two_point};

    #[test]
    fn interval_chains() {
        let c = normalized_chains(&delta(1, 1).unwrap());
        assert_eq!(c.ranks(), &[2, 1]);
        assert_eq!(c.boundary(1).to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn circle_homology() {
        let b = boundary(2, 3).unwrap();
        let c = normalized_chains(&b);
        assert_eq!(&c.ranks()[..2], &[3, 3]);
        assert!(c.is_complex().unwrap());
        assert_eq!(homology(&b, 0).unwrap(), AbelianGroup::free(1));
        assert_eq!(homology(&b, 1).unwrap(), AbelianGroup::free(1));
        let s1 = sphere(1, 3).unwrap();
        assert_eq!(homology_all(&s1).unwrap(), vec![AbelianGroup::free(1), AbelianGroup::free(1), AbelianGroup::trivial()]);
    }

    #[test]
    fn contractible_and_uncertified() {
        for n in 0..4 {
            let h = homology_all(&delta(n, 4).unwrap()).unwrap();
            assert_eq!(h[0], AbelianGroup::free(1));
            assert!(h[1..].iter().all(AbelianGroup::is_trivial));
        }
        assert_eq!(homology(&delta(1, 2).unwrap(), 2), Err(Error::Uncertified { degree: 2, bound: 2 }));
    }

    #[test]
    fn components() {
        assert_eq!(pi0(&two_point(2).unwrap()).count, 2);
        assert_eq!(pi0(&delta(3, 3).unwrap()).count, 1);
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let b = std::sync::Arc::new(boundary(2, 3).unwrap());
        let cone = mapping_cone(&SimplicialMap::identity(b));
        assert!(cone.is_complex().unwrap());
        for n in 0..cone.top() {
            assert!(homology_of(&cone, n).unwrap().is_trivial());
        }
    }
}
