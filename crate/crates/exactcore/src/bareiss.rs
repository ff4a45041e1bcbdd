//! Fraction-free Gauss–Jordan elimination over `Q[u]`.
//!
//! Rows are first scaled to polynomial form; every elimination step divides
//! exactly by the previous pivot, so intermediate entries stay polynomial.

use crate::dense::{Mat, RFMatrix};
use crate::error::ExactError;
use crate::poly::UPoly;
use crate::ratfunc::RatFunc;

/// Exact inverse of a square matrix of rational functions.
pub fn rfm_inverse(m: &RFMatrix) -> Result<RFMatrix, ExactError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(ExactError::NotSquare(m.rows(), m.cols()));
    }
    if n == 0 {
        return Ok(m.clone());
    }
    // M = diag(1/L_i)·P  =>  M^{-1} = P^{-1}·diag(L_i)
    let mut scale = Vec::with_capacity(n);
    let mut a: Vec<Vec<UPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = UPoly::one();
        for j in 0..n {
            let d = m.get(i, j).den();
            if !d.is_one() {
                l = UPoly::lcm(&l, d);
            }
        }
        let mut row = Vec::with_capacity(2 * n);
        for j in 0..n {
            let e = m.get(i, j);
            row.push(if e.is_zero() { UPoly::zero() } else { &e.num().clone() * &l.exact_div(e.den()).unwrap() });
        }
        for j in 0..n {
            row.push(if i == j { UPoly::one() } else { UPoly::zero() });
        }
        scale.push(l);
        a.push(row);
    }
    let w = 2 * n;
    let mut prev = UPoly::one();
    for k in 0..n {
        let p = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| (a[i][k].deg0(), a[i][k].coeffs().iter().map(|c| c.height()).max().unwrap_or(0)))
            .ok_or(ExactError::Singular)?;
        a.swap(p, k);
        let pivot = a[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                let t = &(&pivot * &a[i][j]) - &(&f * &a[k][j]);
                a[i][j] = if t.is_zero() {
                    t
                } else {
                    match t.exact_div(&prev) {
                        Some(v) => v,
                        None => return m.inverse(),
                    }
                };
            }
            a[i][k] = UPoly::zero();
        }
        prev = pivot;
    }
    // Left block is diagonal; divide through.
    let mut out = Mat::zeros(n, n);
    for i in 0..n {
        let d = &a[i][i];
        for j in 0..n {
            let e = &a[i][n + j];
            if e.is_zero() {
                continue;
            }
            let v = RatFunc::new(e * &scale[j], d.clone())?;
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Determinant of a polynomial matrix by Bareiss elimination.
pub fn poly_det(m: &Mat<RatFunc>) -> Result<RatFunc, ExactError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(ExactError::NotSquare(m.rows(), m.cols()));
    }
    if m.data().iter().any(|e| !e.is_polynomial()) {
        return m.det();
    }
    let mut a: Vec<Vec<UPoly>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).num().clone()).collect()).collect();
    let mut prev = UPoly::one();
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(RatFunc::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = UPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = RatFunc::poly(prev);
    Ok(if sign { -&d } else { d })
}
