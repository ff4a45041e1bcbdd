//! Sparse row-major matrices over `Q`.
//!
//! Each row is a column-sorted list of nonzero entries, so equality is
//! structural.

use crate::dense::QMat;
use crate::rational::Q;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpMat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Q)>>,
}

fn push_sorted(row: &mut Vec<(usize, Q)>) {
    row.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, Q)> = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    *row = out;
}

/// Accumulator for building one sparse row at a time.
struct RowAcc {
    vals: Vec<Q>,
    mark: Vec<bool>,
    touched: Vec<usize>,
}

impl RowAcc {
    fn new(n: usize) -> Self {
        RowAcc { vals: vec![Q::ZERO; n], mark: vec![false; n], touched: vec![] }
    }
    fn add(&mut self, c: usize, v: &Q) {
        if !self.mark[c] {
            self.mark[c] = true;
            self.touched.push(c);
            self.vals[c] = v.clone();
        } else {
            self.vals[c] += v;
        }
    }
    fn take(&mut self) -> Vec<(usize, Q)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &c in &self.touched {
            self.mark[c] = false;
            let v = std::mem::replace(&mut self.vals[c], Q::ZERO);
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        self.touched.clear();
        out
    }
}

impl SpMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SpMat { rows, cols, data: vec![vec![]; rows] }
    }
    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Q::ONE)
    }
    pub fn scalar(n: usize, a: Q) -> Self {
        if a.is_zero() {
            return Self::zeros(n, n);
        }
        SpMat { rows: n, cols: n, data: (0..n).map(|i| vec![(i, a.clone())]).collect() }
    }
    pub fn from_triplets(rows: usize, cols: usize, t: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut data = vec![vec![]; rows];
        for (i, j, v) in t {
            assert!(i < rows && j < cols, "triplet out of range");
            data[i].push((j, v));
        }
        for r in &mut data {
            push_sorted(r);
        }
        SpMat { rows, cols, data }
    }
    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<(usize, Q)>>) -> Self {
        let mut m = SpMat { rows, cols, data };
        for r in &mut m.data {
            push_sorted(r);
        }
        m
    }
    pub fn from_dense(m: &QMat) -> Self {
        Self::from_triplets(
            m.rows(),
            m.cols(),
            (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).filter_map(|(i, j)| {
                let v = m.get(i, j);
                (!v.is_zero()).then(|| (i, j, v.clone()))
            }),
        )
    }
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_dense(&QMat::from_ints(rows))
    }
    pub fn to_dense(&self) -> QMat {
        let mut m = QMat::zeros(self.rows, self.cols);
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn row(&self, i: usize) -> &[(usize, Q)] {
        &self.data[i]
    }
    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && self.data.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }
    pub fn get(&self, i: usize, j: usize) -> Q {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Q::ZERO,
        }
    }
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn add(&self, o: &SpMat) -> SpMat {
        self.axpy(&Q::ONE, o)
    }
    pub fn sub(&self, o: &SpMat) -> SpMat {
        self.axpy(&Q::int(-1), o)
    }
    /// `self + a·o`
    pub fn axpy(&self, a: &Q, o: &SpMat) -> SpMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in sum");
        if a.is_zero() {
            return self.clone();
        }
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(x, y)| {
                let mut out = Vec::with_capacity(x.len() + y.len());
                let (mut i, mut j) = (0, 0);
                while i < x.len() || j < y.len() {
                    if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                        out.push(x[i].clone());
                        i += 1;
                    } else if i == x.len() || y[j].0 < x[i].0 {
                        out.push((y[j].0, a * &y[j].1));
                        j += 1;
                    } else {
                        let v = &x[i].1 + &(a * &y[j].1);
                        if !v.is_zero() {
                            out.push((x[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SpMat { rows: self.rows, cols: self.cols, data }
    }
    pub fn scale(&self, a: &Q) -> SpMat {
        if a.is_zero() {
            return SpMat::zeros(self.rows, self.cols);
        }
        SpMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, v * a)).collect()).collect() }
    }
    pub fn neg(&self) -> SpMat {
        self.scale(&Q::int(-1))
    }
    pub fn mul(&self, o: &SpMat) -> SpMat {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut acc = RowAcc::new(o.cols);
        let data = self
            .data
            .iter()
            .map(|r| {
                for (k, a) in r {
                    for (j, b) in &o.data[*k] {
                        acc.add(*j, &(a * b));
                    }
                }
                acc.take()
            })
            .collect();
        SpMat { rows: self.rows, cols: o.cols, data }
    }
    pub fn commutator(&self, o: &SpMat) -> SpMat {
        self.mul(o).sub(&o.mul(self))
    }
    pub fn anticommutator(&self, o: &SpMat) -> SpMat {
        self.mul(o).add(&o.mul(self))
    }
    pub fn pow(&self, e: u32) -> SpMat {
        let mut acc = SpMat::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn transpose(&self) -> SpMat {
        let mut data = vec![vec![]; self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                data[*j].push((i, v.clone()));
            }
        }
        SpMat { rows: self.cols, cols: self.rows, data }
    }
    /// Kronecker product; index `(i, k) ↦ i·o.rows + k`.
    pub fn kron(&self, o: &SpMat) -> SpMat {
        let mut data = Vec::with_capacity(self.rows * o.rows);
        for r in &self.data {
            for s in &o.data {
                let mut row = Vec::with_capacity(r.len() * s.len());
                for (j, a) in r {
                    for (l, b) in s {
                        row.push((j * o.cols + l, a * b));
                    }
                }
                data.push(row);
            }
        }
        SpMat { rows: self.rows * o.rows, cols: self.cols * o.cols, data }
    }
    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> SpMat {
        let data = self.data[r0..r0 + nr]
            .iter()
            .map(|r| r.iter().filter(|(j, _)| *j >= c0 && *j < c0 + nc).map(|(j, v)| (j - c0, v.clone())).collect())
            .collect();
        SpMat { rows: nr, cols: nc, data }
    }
    /// Restriction to the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SpMat {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let data = rows
            .iter()
            .map(|&i| {
                let mut r: Vec<(usize, Q)> = self.data[i].iter().filter(|(j, _)| pos[*j] != usize::MAX).map(|(j, v)| (pos[*j], v.clone())).collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        SpMat { rows: rows.len(), cols: cols.len(), data }
    }
    /// Add `b` into `self` at offset `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, b: &SpMat) {
        for (i, r) in b.data.iter().enumerate() {
            if r.is_empty() {
                continue;
            }
            let row = &mut self.data[r0 + i];
            row.extend(r.iter().map(|(j, v)| (j + c0, v.clone())));
            push_sorted(row);
        }
    }
    /// Block matrix from a grid of equally sized blocks.
    pub fn from_blocks(br: usize, bc: usize, blocks: &[SpMat]) -> SpMat {
        assert_eq!(blocks.len(), br * bc);
        let (r, c) = (blocks[0].rows, blocks[0].cols);
        let mut data = vec![vec![]; br * r];
        for bi in 0..br {
            for bj in 0..bc {
                let b = &blocks[bi * bc + bj];
                assert_eq!((b.rows, b.cols), (r, c), "ragged blocks");
                for (i, row) in b.data.iter().enumerate() {
                    data[bi * r + i].extend(row.iter().map(|(j, v)| (bj * c + j, v.clone())));
                }
            }
        }
        SpMat { rows: br * r, cols: bc * c, data }
    }
    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|r| {
                let mut acc = Q::ZERO;
                for (j, a) in r {
                    if !v[*j].is_zero() {
                        acc += &(a * &v[*j]);
                    }
                }
                acc
            })
            .collect()
    }
    pub fn trace(&self) -> Q {
        let mut t = Q::ZERO;
        for i in 0..self.rows.min(self.cols) {
            t += &self.get(i, i);
        }
        t
    }
    pub fn map_entries(&self, f: impl Fn(usize, usize, &Q) -> Q) -> SpMat {
        SpMat::from_rows(
            self.rows,
            self.cols,
            self.data.iter().enumerate().map(|(i, r)| r.iter().map(|(j, v)| (*j, f(i, *j, v))).collect()).collect(),
        )
    }
    pub fn is_diagonal(&self) -> bool {
        self.data.iter().enumerate().all(|(i, r)| r.iter().all(|(j, _)| *j == i))
    }
    /// Least common multiple of all entry denominators.
    pub fn denom_lcm(&self) -> num_bigint::BigInt {
        Q::denom_lcm(self.data.iter().flatten().map(|e| &e.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_kron() {
        let a = SpMat::from_ints(&[&[0, 1], &[0, 0]]);
        let b = SpMat::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.anticommutator(&b), SpMat::identity(2));
        assert!(a.mul(&a).is_zero());
        let k = a.kron(&SpMat::identity(2));
        assert_eq!(k.get(0, 2), Q::ONE);
        assert_eq!(k.get(1, 3), Q::ONE);
        assert_eq!(k.nnz(), 2);
        assert_eq!(SpMat::from_dense(&k.to_dense()), k);
    }

    #[test]
    fn blocks_roundtrip() {
        let a = SpMat::from_ints(&[&[1, 2], &[3, 4]]);
        let z = SpMat::zeros(2, 2);
        let m = SpMat::from_blocks(2, 2, &[a.clone(), z.clone(), z, a.clone()]);
        assert_eq!(m.submatrix(2, 2, 2, 2), a);
        assert_eq!(m.select(&[0, 3], &[0, 3]), SpMat::from_ints(&[&[1, 0], &[0, 4]]));
    }
}
