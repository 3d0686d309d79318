use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::homotopy::chains::AbelianGroup;
use crate::homotopy::snf::{smith_invariants_exact, SparseMatrix};
use crate::sset::SimplicialSet;

/// A group given by generators and relators. Letters are `g + 1` for the
/// generator `g` and `-(g + 1)` for its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedGroup {
    pub generators: usize,
    pub names: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

impl PresentedGroup {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self> {
        for r in &relators {
            if r.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > generators) {
                return Err(Error::invalid("relator uses an unknown generator"));
            }
        }
        let names = (0..generators).map(|g| format!("g{g}")).collect();
        Ok(PresentedGroup { generators, names, relators })
    }

    /// The order if it is at most `bound`, `None` once the enumeration
    /// passes the bound.
    pub fn bounded_order(&self, bound: usize) -> Result<Option<usize>> {
        match crate::cat::groupoid::group_order(self.generators, &self.relators, bound) {
            Ok(n) => Ok(Some(n)),
            Err(Error::BoundExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Freely and cyclically reduced relators with empty ones removed.
    pub fn reduced(&self) -> Self {
        let relators = self
            .relators
            .iter()
            .map(|r| cyclic_reduce(free_reduce(r)))
            .filter(|r| !r.is_empty())
            .collect();
        PresentedGroup { generators: self.generators, names: self.names.clone(), relators }
    }
}

impl fmt::Display for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |r: &Vec<i32>| {
            r.iter()
                .map(|&l| {
                    let n = &self.names[l.unsigned_abs() as usize - 1];
                    if l > 0 { n.clone() } else { format!("{n}^-1") }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "< {} | {} >", self.names.join(", "), self.relators.iter().map(word).collect::<Vec<_>>().join(", "))
    }
}

pub fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(mut w: Vec<i32>) -> Vec<i32> {
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

/// Edge-path presentation of `π₁(X, v)`: a breadth-first spanning tree of the
/// component of `v`, one generator per nondegenerate edge off the tree, one
/// relator `[d₂t][d₀t][d₁t]⁻¹` per nondegenerate 2-simplex `t`.
pub fn edge_path_group(x: &SimplicialSet, v: u32) -> Result<PresentedGroup> {
    if x.bound() < 2 {
        return Err(Error::BoundTooSmall { bound: x.bound(), reason: "edge-path relations need 2-simplices".into() });
    }
    if v as usize >= x.size(0) {
        return Err(Error::invalid("basepoint is not a vertex"));
    }
    let nv = x.size(0);
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); nv];
    for e in x.nondegenerate(1) {
        adjacency[x.face(1, 1, e) as usize].push(e);
        adjacency[x.face(1, 0, e) as usize].push(e);
    }
    let mut seen = vec![false; nv];
    let mut tree = vec![false; x.size(1)];
    let mut queue = VecDeque::from([v]);
    seen[v as usize] = true;
    while let Some(a) = queue.pop_front() {
        for &e in &adjacency[a as usize] {
            let (s, t) = (x.face(1, 1, e), x.face(1, 0, e));
            let other = if s == a { t } else { s };
            if !seen[other as usize] {
                seen[other as usize] = true;
                tree[e as usize] = true;
                queue.push_back(other);
            }
        }
    }
    // generator letter per edge, 0 for identities
    let mut letter = vec![0i32; x.size(1)];
    let mut names = Vec::new();
    for e in x.nondegenerate(1) {
        if seen[x.face(1, 1, e) as usize] && !tree[e as usize] {
            names.push(format!("e{e}"));
            letter[e as usize] = names.len() as i32;
        }
    }
    let mut relators = Vec::new();
    for t in x.nondegenerate(2) {
        if !seen[x.act(2, t, &[0]) as usize] {
            continue;
        }
        let word: Vec<i32> = [letter[x.face(2, 2, t) as usize], letter[x.face(2, 0, t) as usize], -letter[x.face(2, 1, t) as usize]]
            .into_iter()
            .filter(|&l| l != 0)
            .collect();
        relators.push(word);
    }
    let g = PresentedGroup { generators: names.len(), names, relators };
    Ok(g.reduced())
}

/// Abelianization via the invariant factors of the exponent-sum matrix.
pub fn abelianization(g: &PresentedGroup) -> AbelianGroup {
    let mut columns = Vec::with_capacity(g.relators.len());
    for r in &g.relators {
        columns.push(r.iter().map(|&l| ((l.unsigned_abs() - 1), l.signum() as i64)).collect());
    }
    let m = SparseMatrix::from_columns(g.generators, columns).expect("letters index generators");
    let inv: Vec<BigInt> = smith_invariants_exact(&m);
    AbelianGroup::from_invariants(g.generators, &inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, delta};

    #[test]
    fn circle_and_triangle() {
        let g = edge_path_group(&boundary(2, 2).unwrap(), 0).unwrap();
        assert_eq!(g.generators, 1);
        assert!(g.relators.is_empty());
        assert_eq!(abelianization(&g), AbelianGroup::free(1));
        let g = edge_path_group(&delta(2, 2).unwrap(), 0).unwrap();
        assert_eq!(abelianization(&g), AbelianGroup::trivial());
    }

    #[test]
    fn abelianizations() {
        let a = PresentedGroup::new(1, vec![]).unwrap();
        assert_eq!(abelianization(&a), AbelianGroup::free(1));
        let t = PresentedGroup::new(1, vec![vec![1, 1]]).unwrap();
        assert_eq!(abelianization(&t), AbelianGroup::cyclic(2));
        let c = PresentedGroup::new(2, vec![vec![1, 2, -1, -2]]).unwrap();
        assert_eq!(abelianization(&c), AbelianGroup::free(2));
    }
}
