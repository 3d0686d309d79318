//! Smith normal form invariants over exact integers.
//!
//! Large sparse boundary matrices are first reduced by eliminating unit
//! pivots, which only contributes invariants equal to 1. The remainder is
//! diagonalized densely.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::homotopy::scalar::{add, sub_mul, Scalar};

/// A column-major sparse integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Builds a matrix from columns of `(row, value)` pairs. Repeated rows
    /// are summed and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, T)>>) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for col in columns {
            let mut acc: BTreeMap<u32, T> = BTreeMap::new();
            for (r, v) in col {
                if r as usize >= rows {
                    return Err(Error::invalid("row index out of range"));
                }
                let e = acc.entry(r).or_insert_with(T::zero);
                *e = add(e, &v)?;
            }
            out.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix { rows, cols, columns: out })
    }

    pub fn from_dense(data: &[Vec<T>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let columns = (0..cols)
            .map(|c| (0..rows).map(|r| (r as u32, data[r][c].clone())).collect())
            .collect();
        Self::from_columns(rows, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(u32, T)] {
        &self.columns[c]
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                d[*r as usize][c] = v.clone();
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix<T>) -> Result<SparseMatrix<T>> {
        if self.cols != other.rows {
            return Err(Error::invalid("matrix shapes do not compose"));
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut out = Vec::new();
                for (k, v) in col {
                    for (r, w) in &self.columns[*k as usize] {
                        out.push((*r, crate::homotopy::scalar::mul(v, w)?));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(self.rows, columns)
    }

    pub fn convert<U: Scalar>(&self) -> SparseMatrix<U> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|(r, v)| (*r, U::from_int(v.to_i64().expect("small entries")))).collect())
                .collect(),
        }
    }
}

/// Nonzero invariant factors `d₁ | d₂ | …` (all positive).
pub fn smith_invariants<T: Scalar>(m: &SparseMatrix<T>) -> Result<Vec<T>> {
    let (units, rest) = eliminate_units(m)?;
    let mut out = vec![T::one(); units];
    out.extend(dense_invariants(rest)?);
    Ok(out)
}

/// Runs the fixed-width path first and falls back to arbitrary precision on
/// overflow.
pub fn smith_invariants_exact(m: &SparseMatrix<i64>) -> Vec<BigInt> {
    match smith_invariants(m) {
        Ok(v) => v.into_iter().map(BigInt::from).collect(),
        Err(_) => smith_invariants(&m.convert::<BigInt>()).expect("arbitrary precision cannot overflow"),
    }
}

fn eliminate_units<T: Scalar>(m: &SparseMatrix<T>) -> Result<(usize, Vec<Vec<T>>)> {
    let mut rows: Vec<BTreeMap<u32, T>> = vec![BTreeMap::new(); m.rows];
    let mut col_rows: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); m.cols];
    for (c, col) in m.columns.iter().enumerate() {
        for (r, v) in col {
            rows[*r as usize].insert(c as u32, v.clone());
            col_rows[c].insert(*r);
        }
    }
    let mut units = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..m.cols {
            // shortest row holding a unit in this column
            let pivot = col_rows[c]
                .iter()
                .filter(|&&r| rows[r as usize][&(c as u32)].abs().is_one())
                .min_by_key(|&&r| rows[r as usize].len())
                .copied();
            let Some(r) = pivot else { continue };
            let prow = std::mem::take(&mut rows[r as usize]);
            let u = prow[&(c as u32)].clone();
            let others: Vec<u32> = col_rows[c].iter().copied().filter(|&x| x != r).collect();
            for r2 in others {
                let factor = crate::homotopy::scalar::mul(&rows[r2 as usize][&(c as u32)], &u)?;
                for (&c2, v) in &prow {
                    let row2 = &mut rows[r2 as usize];
                    let cur = row2.get(&c2).cloned().unwrap_or_else(T::zero);
                    let new = sub_mul(&cur, &factor, v)?;
                    if new.is_zero() {
                        row2.remove(&c2);
                        col_rows[c2 as usize].remove(&r2);
                    } else {
                        row2.insert(c2, new);
                        col_rows[c2 as usize].insert(r2);
                    }
                }
            }
            for &c2 in prow.keys() {
                col_rows[c2 as usize].remove(&r);
            }
            col_rows[c].clear();
            units += 1;
            progress = true;
        }
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![T::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            dense[i][col_pos[&(*c as usize)]] = v.clone();
        }
    }
    Ok((units, dense))
}

fn dense_invariants<T: Scalar>(mut a: Vec<Vec<T>>) -> Result<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let p = a[t][t].clone();
        let mut clean = true;
        for i in t + 1..m {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&p);
                for j in t..n {
                    a[i][j] = sub_mul(&a[i][j], &q, &a[t][j])?;
                }
                clean &= a[i][t].is_zero();
            }
        }
        for j in t + 1..n {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&p);
                for i in t..m {
                    a[i][j] = sub_mul(&a[i][j], &q, &a[i][t])?;
                }
                clean &= a[t][j].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // the pivot must divide everything that is left
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
        if let Some(i) = bad {
            for j in t..n {
                a[t][j] = add(&a[t][j], &a[i][j])?;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rows: &[&[i64]]) -> Vec<i64> {
        let d: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        smith_invariants(&SparseMatrix::from_dense(&d).unwrap()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(inv(&[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(inv(&[&[2]]), vec![2]);
        assert_eq!(inv(&[&[1, 1], &[1, -1]]), vec![1, 2]);
        assert_eq!(inv(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(inv(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
        assert_eq!(inv(&[&[4, 6], &[6, 9]]), vec![1]);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 2;
        let d = vec![vec![big, 3], vec![5, big]];
        let m = SparseMatrix::from_dense(&d).unwrap();
        let exact = smith_invariants_exact(&m);
        let direct = smith_invariants(&m.convert::<BigInt>()).unwrap();
        assert_eq!(exact, direct);
    }
}
