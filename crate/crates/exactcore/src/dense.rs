//! Dense row-major matrices over any [`Field`].

use crate::error::ExactError;
use crate::field::Field;
use crate::ratfunc::RatFunc;
use crate::rational::Q;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMat = Mat<Q>;
pub type RFMatrix = Mat<RatFunc>;

impl<T: Field> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn data(&self) -> &[T] {
        &self.data
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.fadd(b)).collect() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.fsub(b)).collect() }
    }
    pub fn scale(&self, a: &T) -> Self {
        self.map(|x| x.fmul(a))
    }
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out: Mat<T> = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].fadd(&a.fmul(b));
                    }
                }
            }
        }
        out
    }
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.fadd(&a.fmul(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (r, c) = (self.rows, self.cols);
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..c {
            if row == r {
                break;
            }
            let best = (row..r).filter(|&i| !self.get(i, col).is_zero()).min_by_key(|&i| self.get(i, col).weight());
            let Some(p) = best else { continue };
            if p != row {
                for j in 0..c {
                    self.data.swap(p * c + j, row * c + j);
                }
            }
            let inv = self.get(row, col).finv().unwrap();
            for j in col..c {
                let v = self.get(row, j).fmul(&inv);
                self.set(row, j, v);
            }
            for i in 0..r {
                if i == row {
                    continue;
                }
                let f = self.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..c {
                    let pj = self.get(row, j).clone();
                    if !pj.is_zero() {
                        let v = self.get(i, j).fsub(&f.fmul(&pj));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        let c = self.cols;
        let free: Vec<usize> = (0..c).filter(|j| !piv.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); c];
                v[f] = T::one();
                for (r, &p) in piv.iter().enumerate() {
                    v[p] = m.get(r, f).fneg();
                }
                v
            })
            .collect()
    }

    /// Gauss–Jordan inverse with lightest-pivot selection.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, T::one());
        }
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(ExactError::Singular);
        }
        Ok(Mat::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    pub fn det(&self) -> Result<T, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).filter(|&i| !m.get(i, col).is_zero()).min_by_key(|&i| m.get(i, col).weight()) else {
                return Ok(T::zero());
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = det.fneg();
            }
            let pv = m.get(col, col).clone();
            det = det.fmul(&pv);
            let inv = pv.finv().unwrap();
            for i in col + 1..n {
                let f = m.get(i, col).fmul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(i, j).fsub(&f.fmul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

impl QMat {
    pub fn from_ints(rows: &[&[i64]]) -> QMat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Q::int(x)).collect()).collect())
    }
}

/// Null space of a rational matrix (the intertwiner solver backend).
pub fn rfm_nullspace(m: &QMat) -> Vec<Vec<Q>> {
    m.nullspace()
}
