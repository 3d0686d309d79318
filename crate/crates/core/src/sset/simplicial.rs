use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::util::UnionFind;

/// A simplex together with its Eilenberg–Zilber decomposition.
///
/// `degeneracy_word` lists degeneracy indices in strictly decreasing order, so
/// the simplex equals `s_{w[0]} s_{w[1]} ... s_{w[k-1]} (base)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    pub degree: usize,
    pub index: u32,
    pub base_degree: usize,
    pub base: u32,
    pub degeneracy_word: Vec<u8>,
}

impl Simplex {
    pub fn is_degenerate(&self) -> bool {
        !self.degeneracy_word.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Ez {
    pub base: u32,
    pub word: Vec<u8>,
}

/// A simplicial set truncated at dimension `bound`.
///
/// Every simplex of every degree `0..=bound` is stored explicitly. Faces
/// `d_i : X_n -> X_{n-1}` exist for `1 <= n <= bound`, degeneracies
/// `s_j : X_n -> X_{n+1}` for `n < bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    bound: usize,
    sizes: Vec<usize>,
    /// `faces[n][i][x]`, empty at `n = 0`.
    faces: Vec<Vec<Vec<u32>>>,
    /// `degens[n][j][x]`, empty at `n = bound`.
    degens: Vec<Vec<Vec<u32>>>,
    ez: Vec<Vec<Ez>>,
    basepoint: Option<u32>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("bound", &self.bound)
            .field("sizes", &self.sizes)
            .field("nondegenerate", &self.nondegenerate_counts())
            .field("basepoint", &self.basepoint)
            .finish()
    }
}

/// A failed simplicial identity, with the simplex that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: String,
    pub degree: usize,
    pub simplex: u32,
    pub lhs: u32,
    pub rhs: u32,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on simplex {} of degree {}: {} != {}",
            self.identity, self.simplex, self.degree, self.lhs, self.rhs
        )
    }
}

impl SimplicialSet {
    /// Builds a simplicial set from explicit tables and computes the
    /// Eilenberg–Zilber data. No identity audit is run here.
    pub fn from_tables(
        bound: usize,
        sizes: Vec<usize>,
        faces: Vec<Vec<Vec<u32>>>,
        degens: Vec<Vec<Vec<u32>>>,
        basepoint: Option<u32>,
    ) -> Result<Self> {
        if sizes.len() != bound + 1 || faces.len() != bound + 1 || degens.len() != bound + 1 {
            return Err(Error::invalid("table lengths must equal bound + 1"));
        }
        for n in 0..=bound {
            let expect_faces = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != expect_faces {
                return Err(Error::invalid(format!("degree {n} needs {expect_faces} face maps")));
            }
            for (i, table) in faces[n].iter().enumerate() {
                if table.len() != sizes[n] || table.iter().any(|&y| y as usize >= sizes[n - 1]) {
                    return Err(Error::invalid(format!("face d{i} on degree {n} is not a total map")));
                }
            }
            let expect_degens = if n == bound { 0 } else { n + 1 };
            if degens[n].len() != expect_degens {
                return Err(Error::invalid(format!(
                    "degree {n} needs {expect_degens} degeneracy maps"
                )));
            }
            for (j, table) in degens[n].iter().enumerate() {
                if table.len() != sizes[n] || table.iter().any(|&y| y as usize >= sizes[n + 1]) {
                    return Err(Error::invalid(format!(
                        "degeneracy s{j} on degree {n} is not a total map"
                    )));
                }
            }
        }
        if let Some(b) = basepoint {
            if b as usize >= sizes[0] {
                return Err(Error::invalid("basepoint is not a 0-simplex"));
            }
        }
        let mut out = SimplicialSet {
            bound,
            sizes,
            faces,
            degens,
            ez: Vec::new(),
            basepoint,
        };
        out.ez = out.compute_ez();
        Ok(out)
    }

    /// Builds a simplicial set from explicit simplex keys and structure
    /// functions on keys. `face(n, i, k)` is a key of degree `n - 1`,
    /// `degen(n, j, k)` a key of degree `n + 1`.
    pub fn from_keys<K, F, S>(bound: usize, keys: &[Vec<K>], face: F, degen: S) -> Result<Self>
    where
        K: Hash + Eq,
        F: Fn(usize, usize, &K) -> K,
        S: Fn(usize, usize, &K) -> K,
    {
        if keys.len() != bound + 1 {
            return Err(Error::invalid("one key list per degree is required"));
        }
        let index: Vec<HashMap<&K, u32>> = keys
            .iter()
            .map(|ks| ks.iter().enumerate().map(|(i, k)| (k, i as u32)).collect())
            .collect();
        for (n, ks) in keys.iter().enumerate() {
            if index[n].len() != ks.len() {
                return Err(Error::invalid(format!("duplicate simplex keys in degree {n}")));
            }
        }
        let lookup = |n: usize, k: &K, what: &str| -> Result<u32> {
            index[n]
                .get(k)
                .copied()
                .ok_or_else(|| Error::invalid(format!("{what} lands outside degree {n}")))
        };
        let sizes: Vec<usize> = keys.iter().map(Vec::len).collect();
        let mut faces = vec![Vec::new(); bound + 1];
        let mut degens = vec![Vec::new(); bound + 1];
        for n in 0..=bound {
            if n > 0 {
                for i in 0..=n {
                    let table = keys[n]
                        .iter()
                        .map(|k| lookup(n - 1, &face(n, i, k), "face"))
                        .collect::<Result<Vec<_>>>()?;
                    faces[n].push(table);
                }
            }
            if n < bound {
                for j in 0..=n {
                    let table = keys[n]
                        .iter()
                        .map(|k| lookup(n + 1, &degen(n, j, k), "degeneracy"))
                        .collect::<Result<Vec<_>>>()?;
                    degens[n].push(table);
                }
            }
        }
        Self::from_tables(bound, sizes, faces, degens, None)
    }

    fn compute_ez(&self) -> Vec<Vec<Ez>> {
        let mut ez: Vec<Vec<Ez>> = Vec::with_capacity(self.bound + 1);
        for n in 0..=self.bound {
            let mut level = Vec::with_capacity(self.sizes[n]);
            for x in 0..self.sizes[n] as u32 {
                if n == 0 {
                    level.push(Ez { base: x, word: Vec::new() });
                    continue;
                }
                // x lies in the image of s_j exactly when x = s_j d_j x.
                let mut word: Vec<u8> = (0..n)
                    .filter(|&j| self.degens[n - 1][j][self.faces[n][j][x as usize] as usize] == x)
                    .map(|j| j as u8)
                    .collect();
                word.reverse();
                let mut y = x;
                let mut deg = n;
                for &j in &word {
                    y = self.faces[deg][j as usize][y as usize];
                    deg -= 1;
                }
                level.push(Ez { base: y, word });
            }
            ez.push(level);
        }
        ez
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn size(&self, n: usize) -> usize {
        self.sizes[n]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn face(&self, n: usize, i: usize, x: u32) -> u32 {
        self.faces[n][i][x as usize]
    }

    pub fn degen(&self, n: usize, j: usize, x: u32) -> u32 {
        self.degens[n][j][x as usize]
    }

    pub fn basepoint(&self) -> Option<u32> {
        self.basepoint
    }

    pub fn is_pointed(&self) -> bool {
        self.basepoint.is_some()
    }

    pub fn with_basepoint(mut self, basepoint: Option<u32>) -> Result<Self> {
        if let Some(b) = basepoint {
            if b as usize >= self.sizes[0] {
                return Err(Error::invalid("basepoint is not a 0-simplex"));
            }
        }
        self.basepoint = basepoint;
        Ok(self)
    }

    /// The basepoint degenerated up to degree `n`.
    pub fn basepoint_at(&self, n: usize) -> Option<u32> {
        let mut b = self.basepoint?;
        for k in 0..n {
            b = self.degen(k, 0, b);
        }
        Some(b)
    }

    pub fn simplex(&self, n: usize, x: u32) -> Simplex {
        let e = &self.ez[n][x as usize];
        Simplex {
            degree: n,
            index: x,
            base_degree: n - e.word.len(),
            base: e.base,
            degeneracy_word: e.word.clone(),
        }
    }

    pub fn is_degenerate(&self, n: usize, x: u32) -> bool {
        !self.ez[n][x as usize].word.is_empty()
    }

    pub fn nondegenerate(&self, n: usize) -> impl Iterator<Item = u32> + '_ {
        self.ez[n]
            .iter()
            .enumerate()
            .filter(|(_, e)| e.word.is_empty())
            .map(|(i, _)| i as u32)
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.bound).map(|n| self.nondegenerate(n).count()).collect()
    }

    /// Largest degree carrying a nondegenerate simplex.
    pub fn dimension(&self) -> Option<usize> {
        (0..=self.bound).rev().find(|&n| self.nondegenerate(n).next().is_some())
    }

    /// Applies the simplicial operator of a monotone map `theta : [m] -> [n]`
    /// to `x` in degree `n`, returning a simplex of degree `m`.
    pub fn act(&self, n: usize, x: u32, theta: &[u8]) -> u32 {
        let mut theta = theta.to_vec();
        let mut n = n;
        let mut x = x;
        // Strip cofaces first (missing values), then codegeneracies.
        loop {
            let mut seen = vec![false; n + 1];
            for &v in &theta {
                seen[v as usize] = true;
            }
            match seen.iter().position(|&s| !s) {
                Some(i) => {
                    x = self.face(n, i, x);
                    for v in theta.iter_mut() {
                        if *v as usize > i {
                            *v -= 1;
                        }
                    }
                    n -= 1;
                }
                None => break,
            }
        }
        // theta is now surjective [m] -> [n]; peel repeated values.
        let mut ops = Vec::new();
        while theta.len() > n + 1 {
            let j = (0..theta.len() - 1).find(|&j| theta[j] == theta[j + 1]).unwrap();
            theta.remove(j + 1);
            ops.push(j);
        }
        let mut deg = n;
        for &j in ops.iter().rev() {
            x = self.degen(deg, j, x);
            deg += 1;
        }
        x
    }

    /// Exhaustive check of every simplicial identity on every simplex.
    pub fn audit(&self) -> Vec<IdentityViolation> {
        let mut out = Vec::new();
        let mut check = |identity: String, degree: usize, simplex: u32, lhs: u32, rhs: u32| {
            if lhs != rhs {
                out.push(IdentityViolation { identity, degree, simplex, lhs, rhs });
            }
        };
        let d = self.bound;
        for n in 0..=d {
            for x in 0..self.sizes[n] as u32 {
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let lhs = self.face(n - 1, i, self.face(n, j, x));
                            let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                            check(format!("d{i} d{j} = d{} d{i}", j - 1), n, x, lhs, rhs);
                        }
                    }
                }
                if n < d {
                    for j in 0..=n {
                        let sx = self.degen(n, j, x);
                        for i in 0..=n + 1 {
                            let lhs = self.face(n + 1, i, sx);
                            let rhs = if i < j {
                                self.degen(n - 1, j - 1, self.face(n, i, x))
                            } else if i == j || i == j + 1 {
                                x
                            } else {
                                self.degen(n - 1, j, self.face(n, i - 1, x))
                            };
                            check(format!("d{i} s{j}"), n, x, lhs, rhs);
                        }
                    }
                }
                if n + 1 < d {
                    for j in 0..=n {
                        for i in 0..=j {
                            let lhs = self.degen(n + 1, i, self.degen(n, j, x));
                            let rhs = self.degen(n + 1, j + 1, self.degen(n, i, x));
                            check(format!("s{i} s{j} = s{} s{i}", j + 1), n, x, lhs, rhs);
                        }
                    }
                }
            }
        }
        // stored decompositions must rebuild each simplex
        for n in 0..=d {
            for x in 0..self.sizes[n] as u32 {
                let e = &self.ez[n][x as usize];
                let mut y = e.base;
                let mut deg = n - e.word.len();
                for &j in e.word.iter().rev() {
                    y = self.degen(deg, j as usize, y);
                    deg += 1;
                }
                check("Eilenberg-Zilber form".into(), n, x, y, x);
            }
        }
        out
    }

    /// Restriction to degrees `0..=bound`.
    pub fn truncate(&self, bound: usize) -> Result<Self> {
        if bound > self.bound {
            return Err(Error::BoundMismatch { left: bound, right: self.bound });
        }
        let mut faces = self.faces[..=bound].to_vec();
        let mut degens = self.degens[..=bound].to_vec();
        degens[bound].clear();
        faces.truncate(bound + 1);
        Self::from_tables(bound, self.sizes[..=bound].to_vec(), faces, degens, self.basepoint)
    }

    /// Disjoint union; returns the offsets of each summand per degree.
    pub fn coproduct(parts: &[&SimplicialSet]) -> Result<(SimplicialSet, Vec<Vec<u32>>)> {
        let bound = common_bound(parts)?;
        let mut offsets = vec![vec![0u32; bound + 1]; parts.len()];
        let mut sizes = vec![0usize; bound + 1];
        for (k, p) in parts.iter().enumerate() {
            for n in 0..=bound {
                offsets[k][n] = sizes[n] as u32;
                sizes[n] += p.size(n);
            }
        }
        let mut faces = vec![Vec::new(); bound + 1];
        let mut degens = vec![Vec::new(); bound + 1];
        for n in 0..=bound {
            if n > 0 {
                for i in 0..=n {
                    let mut t = Vec::with_capacity(sizes[n]);
                    for (k, p) in parts.iter().enumerate() {
                        t.extend(p.faces[n][i].iter().map(|&y| y + offsets[k][n - 1]));
                    }
                    faces[n].push(t);
                }
            }
            if n < bound {
                for j in 0..=n {
                    let mut t = Vec::with_capacity(sizes[n]);
                    for (k, p) in parts.iter().enumerate() {
                        t.extend(p.degens[n][j].iter().map(|&y| y + offsets[k][n + 1]));
                    }
                    degens[n].push(t);
                }
            }
        }
        let out = SimplicialSet::from_tables(bound, sizes, faces, degens, None)?;
        Ok((out, offsets))
    }

    /// Quotient by the smallest congruence containing the given degreewise
    /// relation. Classes are numbered by least member; returns the quotient
    /// and the projection per degree.
    pub fn quotient(&self, mut relation: Vec<UnionFind>) -> Result<(SimplicialSet, Vec<Vec<u32>>)> {
        let d = self.bound;
        if relation.len() != d + 1 {
            return Err(Error::invalid("one relation per degree is required"));
        }
        // Close under faces and degeneracies until stable.
        loop {
            let mut changed = false;
            for n in 0..=d {
                for x in 0..self.sizes[n] as u32 {
                    let r = relation[n].find(x);
                    if r == x {
                        continue;
                    }
                    if n > 0 {
                        for i in 0..=n {
                            let (a, b) = (self.face(n, i, x), self.face(n, i, r));
                            changed |= relation[n - 1].union(a, b);
                        }
                    }
                    if n < d {
                        for j in 0..=n {
                            let (a, b) = (self.degen(n, j, x), self.degen(n, j, r));
                            changed |= relation[n + 1].union(a, b);
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut proj = Vec::with_capacity(d + 1);
        let mut sizes = Vec::with_capacity(d + 1);
        for uf in relation.iter_mut() {
            let (count, cls) = uf.classes();
            sizes.push(count);
            proj.push(cls);
        }
        let mut reps: Vec<Vec<u32>> = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut r = vec![u32::MAX; sizes[n]];
            for x in 0..self.sizes[n] {
                let c = proj[n][x] as usize;
                if r[c] == u32::MAX {
                    r[c] = x as u32;
                }
            }
            reps.push(r);
        }
        let mut faces = vec![Vec::new(); d + 1];
        let mut degens = vec![Vec::new(); d + 1];
        for n in 0..=d {
            if n > 0 {
                for i in 0..=n {
                    faces[n].push(
                        reps[n].iter().map(|&x| proj[n - 1][self.face(n, i, x) as usize]).collect(),
                    );
                }
            }
            if n < d {
                for j in 0..=n {
                    degens[n].push(
                        reps[n].iter().map(|&x| proj[n + 1][self.degen(n, j, x) as usize]).collect(),
                    );
                }
            }
        }
        let basepoint = self.basepoint.map(|b| proj[0][b as usize]);
        let q = SimplicialSet::from_tables(d, sizes, faces, degens, basepoint)?;
        Ok((q, proj))
    }

    /// The sub-simplicial set generated by the given simplices, with the
    /// inclusion map per degree (old indices of the kept simplices).
    pub fn generated_by(&self, generators: &[(usize, u32)]) -> Result<(SimplicialSet, Vec<Vec<u32>>)> {
        let d = self.bound;
        let mut keep: Vec<Vec<bool>> = self.sizes.iter().map(|&s| vec![false; s]).collect();
        for &(n, x) in generators {
            if n > d || x as usize >= self.sizes[n] {
                return Err(Error::invalid("generator outside the simplicial set"));
            }
            keep[n][x as usize] = true;
        }
        for n in (1..=d).rev() {
            for x in 0..self.sizes[n] {
                if keep[n][x] {
                    for i in 0..=n {
                        let y = self.face(n, i, x as u32) as usize;
                        keep[n - 1][y] = true;
                    }
                }
            }
        }
        for n in 0..d {
            for x in 0..self.sizes[n] {
                if keep[n][x] {
                    for j in 0..=n {
                        let y = self.degen(n, j, x as u32) as usize;
                        keep[n + 1][y] = true;
                    }
                }
            }
        }
        self.restrict(&keep)
    }

    /// Restriction to a subset closed under all structure maps.
    pub fn restrict(&self, keep: &[Vec<bool>]) -> Result<(SimplicialSet, Vec<Vec<u32>>)> {
        let d = self.bound;
        let inclusion: Vec<Vec<u32>> = keep
            .iter()
            .map(|k| k.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u32).collect())
            .collect();
        let mut new_index: Vec<Vec<u32>> = self.sizes.iter().map(|&s| vec![u32::MAX; s]).collect();
        for n in 0..=d {
            for (new, &old) in inclusion[n].iter().enumerate() {
                new_index[n][old as usize] = new as u32;
            }
        }
        let remap = |n: usize, old: u32| -> Result<u32> {
            let v = new_index[n][old as usize];
            if v == u32::MAX {
                Err(Error::invalid("subset is not closed under structure maps"))
            } else {
                Ok(v)
            }
        };
        let mut faces = vec![Vec::new(); d + 1];
        let mut degens = vec![Vec::new(); d + 1];
        for n in 0..=d {
            if n > 0 {
                for i in 0..=n {
                    faces[n].push(
                        inclusion[n]
                            .iter()
                            .map(|&x| remap(n - 1, self.face(n, i, x)))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
            }
            if n < d {
                for j in 0..=n {
                    degens[n].push(
                        inclusion[n]
                            .iter()
                            .map(|&x| remap(n + 1, self.degen(n, j, x)))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
            }
        }
        let sizes = inclusion.iter().map(Vec::len).collect();
        let basepoint = match self.basepoint {
            Some(b) if keep[0][b as usize] => Some(new_index[0][b as usize]),
            _ => None,
        };
        let sub = SimplicialSet::from_tables(d, sizes, faces, degens, basepoint)?;
        Ok((sub, inclusion))
    }
}

pub(crate) fn common_bound(parts: &[&SimplicialSet]) -> Result<usize> {
    let first = parts.first().ok_or_else(|| Error::invalid("empty family"))?.bound;
    for p in parts {
        if p.bound != first {
            return Err(Error::BoundMismatch { left: first, right: p.bound });
        }
    }
    Ok(first)
}
