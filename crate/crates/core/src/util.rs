//! Small shared helpers: union-find with least-member representatives and
//! monotone maps between finite ordinals.

/// Union-find whose class representative is always the least member.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }

    /// Dense class numbering ordered by least member, plus the class of every element.
    pub fn classes(&mut self) -> (usize, Vec<u32>) {
        let n = self.parent.len();
        let mut class_of_root = vec![u32::MAX; n];
        let mut out = vec![0u32; n];
        let mut count = 0u32;
        for x in 0..n as u32 {
            let r = self.find(x);
            if class_of_root[r as usize] == u32::MAX {
                class_of_root[r as usize] = count;
                count += 1;
            }
            out[x as usize] = class_of_root[r as usize];
        }
        (count as usize, out)
    }
}

/// A monotone map `[m] -> [n]`, stored as its value sequence.
pub type Monotone = Vec<u8>;

/// All monotone maps `[k] -> [n]` in lexicographic order.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Monotone> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + 1);
    fn rec(pos: usize, k: usize, n: usize, lo: u8, cur: &mut Vec<u8>, out: &mut Vec<Monotone>) {
        if pos == k + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=(n as u8) {
            cur.push(v);
            rec(pos + 1, k, n, v, cur, out);
            cur.pop();
        }
    }
    rec(0, k, n, 0, &mut cur, &mut out);
    out
}

/// Precomposition with the coface `[k-1] -> [k]` skipping `i`: drop entry `i`.
pub fn drop_entry(seq: &[u8], i: usize) -> Monotone {
    let mut v = Vec::with_capacity(seq.len() - 1);
    v.extend_from_slice(&seq[..i]);
    v.extend_from_slice(&seq[i + 1..]);
    v
}

/// Precomposition with the codegeneracy `[k+1] -> [k]` hitting `j` twice.
pub fn repeat_entry(seq: &[u8], j: usize) -> Monotone {
    let mut v = Vec::with_capacity(seq.len() + 1);
    v.extend_from_slice(&seq[..=j]);
    v.extend_from_slice(&seq[j..]);
    v
}

/// `theta ∘ alpha`.
pub fn compose(theta: &[u8], alpha: &[u8]) -> Monotone {
    alpha.iter().map(|&a| theta[a as usize]).collect()
}

/// Coface `δ_i : [n-1] -> [n]`.
pub fn coface(n: usize, i: usize) -> Monotone {
    (0..n as u8).map(|t| if (t as usize) < i { t } else { t + 1 }).collect()
}

/// Codegeneracy `σ_j : [n+1] -> [n]`.
pub fn codegeneracy(n: usize, j: usize) -> Monotone {
    (0..=(n as u8 + 1))
        .map(|t| if (t as usize) <= j { t } else { t - 1 })
        .collect()
}

pub fn is_surjective_onto(seq: &[u8], n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    for &v in seq {
        seen[v as usize] = true;
    }
    seen.into_iter().all(|b| b)
}

/// Number of monotone maps `[k] -> [n]`, i.e. `C(n + k + 1, k + 1)`.
pub fn monotone_count(k: usize, n: usize) -> usize {
    let (a, b) = (n + k + 1, k + 1);
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for i in 0..b {
        r = r * (a - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_keeps_least_member() {
        let mut uf = UnionFind::new(5);
        uf.union(4, 2);
        uf.union(2, 3);
        assert_eq!(uf.find(4), 2);
        let (n, cls) = uf.classes();
        assert_eq!(n, 3);
        assert_eq!(cls, vec![0, 1, 2, 2, 2]);
    }

    #[test]
    fn monotone_counts_match_binomials() {
        for k in 0..4 {
            for n in 0..4 {
                assert_eq!(monotone_maps(k, n).len(), monotone_count(k, n));
            }
        }
    }

    #[test]
    fn cosimplicial_identities() {
        // δ_j δ_i = δ_i δ_{j-1} for i < j
        for n in 2..5 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = compose(&coface(n, j), &coface(n - 1, i));
                    let rhs = compose(&coface(n, i), &coface(n - 1, j - 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert_eq!(codegeneracy(1, 0), vec![0, 0, 1]);
    }
}
