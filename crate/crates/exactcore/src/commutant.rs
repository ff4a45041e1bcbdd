//! Spaces of constant maps `Φ` with `Φ A_k = B_k Φ` for families of pairs.

use crate::dense::QMat;
use crate::rational::Q;
use crate::sparse::SpMat;
use std::collections::BTreeMap;

/// Row echelon form built one sparse row at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: BTreeMap<usize, Vec<(usize, Q)>>,
}

fn axpy_row(x: &[(usize, Q)], a: &Q, y: &[(usize, Q)]) -> Vec<(usize, Q)> {
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
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: BTreeMap::new() }
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }
    /// Add a sorted sparse row; returns whether the rank grew.
    pub fn insert(&mut self, mut r: Vec<(usize, Q)>) -> bool {
        loop {
            let Some((c, v)) = r.first().cloned() else { return false };
            match self.rows.get(&c) {
                Some(p) => r = axpy_row(&r, &-v, p),
                None => {
                    let s = v.inv().unwrap();
                    let r: Vec<(usize, Q)> = r.into_iter().map(|(k, x)| (k, &x * &s)).collect();
                    self.rows.insert(c, r);
                    return true;
                }
            }
        }
    }
    /// Basis of `{x : r·x = 0 for every inserted r}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        if self.rows.is_empty() {
            return (0..self.cols).map(|k| (0..self.cols).map(|j| if j == k { Q::ONE } else { Q::ZERO }).collect()).collect();
        }
        let mut m = QMat::zeros(self.rows.len(), self.cols);
        for (i, r) in self.rows.values().enumerate() {
            for (c, v) in r {
                m.set(i, *c, v.clone());
            }
        }
        m.nullspace()
    }
}

/// All `Φ` (`dt × ds`) with `Φ A = B Φ` for every pair `(A, B)`.
pub fn intertwiner_space(ds: usize, dt: usize, pairs: impl IntoIterator<Item = (SpMat, SpMat)>) -> Vec<QMat> {
    let mut ech = Echelon::new(ds * dt);
    for (a, b) in pairs {
        if ech.is_full() {
            break;
        }
        add_pair(&mut ech, ds, dt, &a, &b);
    }
    ech.nullspace().into_iter().map(|v| QMat::from_fn(dt, ds, |r, c| v[r * ds + c].clone())).collect()
}

/// Insert the `dt · ds` equations of `Φ A − B Φ = 0`.
pub fn add_pair(ech: &mut Echelon, ds: usize, dt: usize, a: &SpMat, b: &SpMat) {
    assert_eq!((a.rows(), a.cols(), b.rows(), b.cols()), (ds, ds, dt, dt), "pair shape");
    let at = a.transpose();
    for r in 0..dt {
        for c in 0..ds {
            let mut row: Vec<(usize, Q)> = at.row(c).iter().map(|(k, v)| (r * ds + k, v.clone())).collect();
            row.extend(b.row(r).iter().map(|(k, v)| (k * ds + c, -v)));
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, Q)> = Vec::with_capacity(row.len());
            for (k, v) in row {
                match merged.last_mut() {
                    Some(l) if l.0 == k => l.1 += &v,
                    _ => merged.push((k, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            if !merged.is_empty() {
                ech.insert(merged);
            }
        }
    }
}

/// Dimension of the commutant of a family of square operators.
pub fn commutant_dim(d: usize, ops: &[SpMat]) -> usize {
    intertwiner_space(d, d, ops.iter().map(|x| (x.clone(), x.clone()))).len()
}
