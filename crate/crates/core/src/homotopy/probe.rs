use std::fmt;

use crate::homotopy::chains::{homology_all, homology_of, mapping_cone, pi0, AbelianGroup};
use crate::homotopy::groups::{abelianization, edge_path_group};
use crate::sset::SimplicialMap;

/// Which invariant separated the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Invariant {
    Components,
    Homology,
    InducedMap,
    AbelianizedPi1,
}

/// A concrete mismatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub degree: usize,
    pub invariant: Invariant,
    pub source: String,
    pub target: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in degree {}: {} vs {}", self.invariant, self.degree, self.source, self.target)
    }
}

/// Outcome of the weak-equivalence probe. `ConfirmedUpTo(k)` never claims
/// more than agreement of the computed invariants through degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeVerdict {
    ConfirmedUpTo(usize),
    Refuted(Witness),
    Inconclusive(String),
}

impl ProbeVerdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, ProbeVerdict::ConfirmedUpTo(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, ProbeVerdict::Refuted(_))
    }
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeVerdict::ConfirmedUpTo(k) => write!(f, "confirmed up to degree {k}"),
            ProbeVerdict::Refuted(w) => write!(f, "refuted: {w}"),
            ProbeVerdict::Inconclusive(r) => write!(f, "inconclusive: {r}"),
        }
    }
}

/// Tests whether `f` induces a bijection on components and isomorphisms on
/// `H_i` for `i <= k`, and agreement of abelianized `π₁` per component.
///
/// The homology part asks the mapping cone to be acyclic through degree
/// `k`. That makes `H_i(f)` bijective for `i < k` and onto in degree `k`; the
/// abstract groups are then compared, and a surjection between isomorphic
/// finitely generated abelian groups is injective.
pub fn weak_equivalence_probe(f: &SimplicialMap, k: usize) -> ProbeVerdict {
    let (x, y) = (f.source(), f.target());
    let certified = x.bound().min(y.bound());
    if k + 1 > certified {
        return ProbeVerdict::Inconclusive(format!("degree {k} needs bound {} but only {certified} is available", k + 1));
    }
    let (cx, cy) = (pi0(x), pi0(y));
    let mut hit = vec![false; cy.count];
    let mut image = vec![u32::MAX; cx.count];
    for v in 0..x.size(0) {
        let c = cx.of_vertex[v] as usize;
        let d = cy.of_vertex[f.apply(0, v as u32) as usize];
        image[c] = d;
        hit[d as usize] = true;
    }
    let mut distinct = image.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != cx.count || hit.iter().any(|h| !h) {
        return ProbeVerdict::Refuted(Witness {
            degree: 0,
            invariant: Invariant::Components,
            source: format!("{} components", cx.count),
            target: format!("{} components", cy.count),
        });
    }
    let (hx, hy) = match (homology_all(&x.truncate(k + 1).unwrap()), homology_all(&y.truncate(k + 1).unwrap())) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return ProbeVerdict::Inconclusive(e.to_string()),
    };
    for i in 0..=k {
        if hx[i] != hy[i] {
            return ProbeVerdict::Refuted(Witness {
                degree: i,
                invariant: Invariant::Homology,
                source: hx[i].to_string(),
                target: hy[i].to_string(),
            });
        }
    }
    let fk = match truncated(f, k + 1) {
        Ok(m) => m,
        Err(e) => return ProbeVerdict::Inconclusive(e.to_string()),
    };
    let cone = mapping_cone(&fk);
    for i in 0..=k {
        match homology_of(&cone, i) {
            Ok(h) if h.is_trivial() => {}
            Ok(h) => {
                return ProbeVerdict::Refuted(Witness {
                    degree: i,
                    invariant: Invariant::InducedMap,
                    source: "acyclic mapping cone".into(),
                    target: format!("cone homology {h}"),
                })
            }
            Err(e) => return ProbeVerdict::Inconclusive(e.to_string()),
        }
    }
    if k >= 1 && certified >= 2 {
        for v in cx.representatives() {
            let w = f.apply(0, v);
            let (gx, gy) = match (edge_path_group(x, v), edge_path_group(y, w)) {
                (Ok(a), Ok(b)) => (abelianization(&a), abelianization(&b)),
                _ => continue,
            };
            if gx != gy {
                return ProbeVerdict::Refuted(Witness {
                    degree: 1,
                    invariant: Invariant::AbelianizedPi1,
                    source: gx.to_string(),
                    target: gy.to_string(),
                });
            }
        }
    }
    ProbeVerdict::ConfirmedUpTo(k)
}

fn truncated(f: &SimplicialMap, bound: usize) -> crate::Result<SimplicialMap> {
    if f.source().bound() == bound {
        return Ok(f.clone());
    }
    let s = std::sync::Arc::new(f.source().truncate(bound)?);
    let t = std::sync::Arc::new(f.target().truncate(bound)?);
    SimplicialMap::new_unchecked(s, t, f.components()[..=bound].to_vec())
}

/// Homology comparison without a map, for pairs of objects the theory
/// relates only up to a zigzag.
pub fn compare_homology(a: &[AbelianGroup], b: &[AbelianGroup], k: usize) -> Option<usize> {
    (0..=k).find(|&i| a.get(i) != b.get(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::colimit::map_by_vertices;
    use crate::sset::standard::{boundary, delta, horn};
    use std::sync::Arc;

    #[test]
    fn identity_confirms() {
        let b = Arc::new(boundary(2, 3).unwrap());
        assert_eq!(weak_equivalence_probe(&SimplicialMap::identity(b), 2), ProbeVerdict::ConfirmedUpTo(2));
    }

    #[test]
    fn point_into_circle_is_refuted_in_degree_one() {
        let b = Arc::new(boundary(2, 3).unwrap());
        let p = Arc::new(delta(0, 3).unwrap());
        let f = SimplicialMap::new(p, b, (0..=3).map(|_| vec![0]).collect()).unwrap();
        match weak_equivalence_probe(&f, 2) {
            ProbeVerdict::Refuted(w) => {
                assert_eq!(w.degree, 1);
                assert_eq!(w.invariant, Invariant::Homology);
            }
            v => panic!("{v}"),
        }
    }

    #[test]
    fn horn_inclusion_confirms_and_monotone() {
        let h = Arc::new(horn(2, 1, 3).unwrap());
        let d = Arc::new(delta(2, 3).unwrap());
        let j = map_by_vertices(&h, &d, &[0, 1, 2]).unwrap();
        assert_eq!(weak_equivalence_probe(&j, 2), ProbeVerdict::ConfirmedUpTo(2));
        assert_eq!(weak_equivalence_probe(&j, 1), ProbeVerdict::ConfirmedUpTo(1));
        assert!(matches!(weak_equivalence_probe(&j, 3), ProbeVerdict::Inconclusive(_)));
    }

    #[test]
    fn boundary_into_simplex_fails_on_the_map() {
        // ∂Δ¹ ⊔ ... two points into an interval: components refute
        let b = Arc::new(boundary(1, 2).unwrap());
        let d = Arc::new(delta(1, 2).unwrap());
        let j = map_by_vertices(&b, &d, &[0, 1]).unwrap();
        assert!(weak_equivalence_probe(&j, 1).is_refuted());
    }
}
