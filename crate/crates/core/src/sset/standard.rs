use crate::error::{Error, Result};
use crate::sset::simplicial::SimplicialSet;
use crate::util::{drop_entry, monotone_maps, repeat_entry, UnionFind};

/// The standard simplicial sets built by [`build_standard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Delta,
    Boundary,
    Horn(usize),
    Sphere,
    Point,
    TwoPoint,
}

pub fn build_standard(kind: StandardKind, n: usize, bound: usize) -> Result<SimplicialSet> {
    match kind {
        StandardKind::Delta => delta(n, bound),
        StandardKind::Boundary => boundary(n, bound),
        StandardKind::Horn(i) => horn(n, i, bound),
        StandardKind::Sphere => sphere(n, bound),
        StandardKind::Point => point(bound),
        StandardKind::TwoPoint => two_point(bound),
    }
}

/// Simplices of `Δⁿ` in degree `k` are the monotone maps `[k] -> [n]`, listed
/// lexicographically and filtered by `keep`.
fn delta_filtered(n: usize, bound: usize, keep: impl Fn(&[u8]) -> bool) -> Result<SimplicialSet> {
    if n > u8::MAX as usize - 1 {
        return Err(Error::invalid("dimension too large"));
    }
    let keys: Vec<Vec<Vec<u8>>> = (0..=bound)
        .map(|k| monotone_maps(k, n).into_iter().filter(|t| keep(t)).collect())
        .collect();
    SimplicialSet::from_keys(
        bound,
        &keys,
        |_, i, t: &Vec<u8>| drop_entry(t, i),
        |_, j, t: &Vec<u8>| repeat_entry(t, j),
    )
}

fn image_mask(t: &[u8], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n + 1];
    for &v in t {
        seen[v as usize] = true;
    }
    seen
}

pub fn delta(n: usize, bound: usize) -> Result<SimplicialSet> {
    delta_filtered(n, bound, |_| true)
}

/// `∂Δⁿ`: the non-surjective monotone maps.
pub fn boundary(n: usize, bound: usize) -> Result<SimplicialSet> {
    delta_filtered(n, bound, |t| image_mask(t, n).contains(&false))
}

/// `Λⁿᵢ`: maps whose image misses some vertex other than `i`.
pub fn horn(n: usize, i: usize, bound: usize) -> Result<SimplicialSet> {
    if i > n || n == 0 {
        return Err(Error::HornIndex { index: i, dim: n });
    }
    delta_filtered(n, bound, |t| {
        image_mask(t, n)
            .iter()
            .enumerate()
            .any(|(v, &hit)| v != i && !hit)
    })
}

/// `Sⁿ = Δⁿ/∂Δⁿ`, pointed at its unique vertex. `S⁰` is the two-point set.
pub fn sphere(n: usize, bound: usize) -> Result<SimplicialSet> {
    if n == 0 {
        return two_point(bound);
    }
    let d = delta(n, bound)?;
    let mut relation = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let maps = monotone_maps(k, n);
        let mut uf = UnionFind::new(maps.len());
        let mut first: Option<u32> = None;
        for (idx, t) in maps.iter().enumerate() {
            if image_mask(t, n).contains(&false) {
                match first {
                    None => first = Some(idx as u32),
                    Some(f) => {
                        uf.union(f, idx as u32);
                    }
                }
            }
        }
        relation.push(uf);
    }
    let (q, _) = d.quotient(relation)?;
    q.with_basepoint(Some(0))
}

/// `Δ⁰`, pointed at its vertex.
pub fn point(bound: usize) -> Result<SimplicialSet> {
    delta(0, bound)?.with_basepoint(Some(0))
}

/// `S⁰ = Δ⁰ ⊔ Δ⁰`, pointed at the first vertex.
pub fn two_point(bound: usize) -> Result<SimplicialSet> {
    discrete(2, bound)?.with_basepoint(Some(0))
}

/// Constant simplicial set on `m` points.
pub fn discrete(m: usize, bound: usize) -> Result<SimplicialSet> {
    let keys: Vec<Vec<u32>> = (0..=bound).map(|_| (0..m as u32).collect()).collect();
    SimplicialSet::from_keys(bound, &keys, |_, _, &x| x, |_, _, &x| x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::monotone_count;

    #[test]
    fn delta_counts_are_hom_counts() {
        let d = delta(1, 2).unwrap();
        assert_eq!(d.sizes(), &[2, 3, 4]);
        for n in 0..4 {
            let d = delta(n, 4).unwrap();
            for k in 0..=4 {
                assert_eq!(d.size(k), monotone_count(k, n));
            }
            assert!(d.audit().is_empty());
        }
    }

    #[test]
    fn boundary_of_triangle() {
        let b = boundary(2, 2).unwrap();
        assert_eq!(b.nondegenerate_counts(), vec![3, 3, 0]);
        assert!(b.audit().is_empty());
    }

    #[test]
    fn horns_drop_one_face() {
        for i in 0..=2 {
            let h = horn(2, i, 3).unwrap();
            assert_eq!(h.nondegenerate_counts(), vec![3, 2, 0, 0]);
            assert!(h.audit().is_empty());
        }
        assert_eq!(horn(2, 3, 2), Err(Error::HornIndex { index: 3, dim: 2 }));
    }

    #[test]
    fn circle_sizes() {
        let s = sphere(1, 3).unwrap();
        assert_eq!(s.sizes(), &[1, 2, 3, 4]);
        assert_eq!(s.nondegenerate_counts(), vec![1, 1, 0, 0]);
        assert_eq!(s.basepoint(), Some(0));
        assert!(s.audit().is_empty());
        let s2 = sphere(2, 3).unwrap();
        assert_eq!(s2.nondegenerate_counts(), vec![1, 0, 1, 0]);
        assert!(s2.audit().is_empty());
    }

    #[test]
    fn ez_forms_of_delta_one() {
        let d = delta(1, 3).unwrap();
        // [0,0,1] = s0 of the edge [0,1]
        let idx = monotone_maps(2, 1).iter().position(|t| t == &[0, 0, 1]).unwrap() as u32;
        let s = d.simplex(2, idx);
        assert_eq!(s.degeneracy_word, vec![0]);
        assert_eq!(s.base_degree, 1);
        // [0,0,0,0] = s2 s1 s0 of vertex 0
        let s = d.simplex(3, 0);
        assert_eq!(s.degeneracy_word, vec![2, 1, 0]);
    }
}
