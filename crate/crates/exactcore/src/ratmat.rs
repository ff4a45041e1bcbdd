//! Matrices of rational functions stored as `N(u)/d(u)`: a sparse `Q`-matrix
//! per power of `u` over a single monic denominator.
//!
//! Canonical form: `d` monic, coprime to the gcd of all entry numerators,
//! trailing zero coefficient matrices trimmed.

use crate::bareiss::rfm_inverse;
use crate::dense::{Mat, RFMatrix};
use crate::error::ExactError;
use crate::poly::UPoly;
use crate::ratfunc::RatFunc;
use crate::rational::Q;
use crate::sparse::SpMat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    num: Vec<SpMat>,
    den: UPoly,
}

fn binom(n: usize, k: usize) -> Q {
    let mut r = Q::ONE;
    for i in 0..k {
        r = &(&r * &Q::int((n - i) as i64)) / &Q::int((i + 1) as i64);
    }
    r
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, num: vec![], den: UPoly::one() }
    }
    pub fn identity(n: usize) -> Self {
        Self::constant(SpMat::identity(n))
    }
    pub fn constant(m: SpMat) -> Self {
        Self::from_parts(m.rows(), m.cols(), vec![m], UPoly::one())
    }
    /// `f(u)·I_n`.
    pub fn scalar(n: usize, f: &RatFunc) -> Self {
        Self::identity(n).scale_rf(f)
    }
    /// `(Σ_k u^k N_k) / den`, normalized.
    pub fn from_parts(rows: usize, cols: usize, num: Vec<SpMat>, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(num.iter().all(|m| m.rows() == rows && m.cols() == cols), "shape mismatch");
        let mut r = RatMat { rows, cols, num, den };
        r.normalize();
        r
    }
    pub fn from_rfmatrix(m: &RFMatrix) -> Self {
        let mut den = UPoly::one();
        for e in m.data() {
            if !e.den().is_one() {
                den = UPoly::lcm(&den, e.den());
            }
        }
        let mut trip: Vec<Vec<(usize, usize, Q)>> = vec![];
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let p = e.num() * &den.exact_div(e.den()).unwrap();
                for (k, c) in p.coeffs().iter().enumerate() {
                    if trip.len() <= k {
                        trip.resize(k + 1, vec![]);
                    }
                    if !c.is_zero() {
                        trip[k].push((i, j, c.clone()));
                    }
                }
            }
        }
        let num = trip.into_iter().map(|t| SpMat::from_triplets(m.rows(), m.cols(), t)).collect();
        Self::from_parts(m.rows(), m.cols(), num, den)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn num(&self) -> &[SpMat] {
        &self.num
    }
    pub fn den(&self) -> &UPoly {
        &self.den
    }
    pub fn num_degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    pub fn is_identity(&self) -> bool {
        self.den.is_one() && self.num.len() == 1 && self.num[0].is_identity()
    }
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.len() <= 1
    }
    /// Entries as polynomials keyed by position.
    pub fn entry_polys(&self) -> BTreeMap<(usize, usize), UPoly> {
        let mut m: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        let k = self.num.len();
        for (p, c) in self.num.iter().enumerate() {
            for (i, j, v) in c.triplets() {
                m.entry((i, j)).or_insert_with(|| vec![Q::ZERO; k])[p] = v.clone();
            }
        }
        m.into_iter().map(|(k, v)| (k, UPoly::new(v))).collect()
    }
    pub fn entry(&self, i: usize, j: usize) -> RatFunc {
        let p = UPoly::new(self.num.iter().map(|c| c.get(i, j)).collect());
        RatFunc::new(p, self.den.clone()).unwrap()
    }
    pub fn to_rfmatrix(&self) -> RFMatrix {
        let mut m = Mat::zeros(self.rows, self.cols);
        for ((i, j), p) in self.entry_polys() {
            m.set(i, j, RatFunc::new(p, self.den.clone()).unwrap());
        }
        m
    }

    fn trim(&mut self) {
        while self.num.last().is_some_and(|m| m.is_zero()) {
            self.num.pop();
        }
    }

    fn normalize(&mut self) {
        self.trim();
        if self.num.is_empty() {
            self.den = UPoly::one();
            return;
        }
        let lead = self.den.lead();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            self.den = self.den.scale(&inv);
            self.num = self.num.iter().map(|m| m.scale(&inv)).collect();
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for p in self.entry_polys().values() {
            g = UPoly::gcd(&g, p);
            if g.is_one() {
                return;
            }
        }
        // divide every entry polynomial by g
        let polys = self.entry_polys();
        let mut trip: Vec<Vec<(usize, usize, Q)>> = vec![];
        for ((i, j), p) in polys {
            let q = p.exact_div(&g).unwrap();
            for (k, c) in q.coeffs().iter().enumerate() {
                if trip.len() <= k {
                    trip.resize(k + 1, vec![]);
                }
                if !c.is_zero() {
                    trip[k].push((i, j, c.clone()));
                }
            }
        }
        self.num = trip.into_iter().map(|t| SpMat::from_triplets(self.rows, self.cols, t)).collect();
        self.den = self.den.exact_div(&g).unwrap();
        self.trim();
    }

    fn num_times_poly(num: &[SpMat], p: &UPoly) -> Vec<SpMat> {
        if p.is_one() {
            return num.to_vec();
        }
        if num.is_empty() {
            return vec![];
        }
        let (r, c) = (num[0].rows(), num[0].cols());
        let mut out = vec![SpMat::zeros(r, c); num.len() + p.deg0()];
        for (k, m) in num.iter().enumerate() {
            for (l, a) in p.coeffs().iter().enumerate() {
                if !a.is_zero() && !m.is_zero() {
                    out[k + l] = out[k + l].axpy(a, m);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &RatMat) -> RatMat {
        self.axpy(&Q::ONE, o)
    }
    pub fn sub(&self, o: &RatMat) -> RatMat {
        self.axpy(&Q::int(-1), o)
    }
    pub fn neg(&self) -> RatMat {
        self.scale_q(&Q::int(-1))
    }
    /// `self + a·o`
    pub fn axpy(&self, a: &Q, o: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in sum");
        if o.is_zero() || a.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.scale_q(a);
        }
        let (x, y, den) = if self.den == o.den {
            (self.num.clone(), o.num.clone(), self.den.clone())
        } else {
            let l = UPoly::lcm(&self.den, &o.den);
            (
                Self::num_times_poly(&self.num, &l.exact_div(&self.den).unwrap()),
                Self::num_times_poly(&o.num, &l.exact_div(&o.den).unwrap()),
                l,
            )
        };
        let k = x.len().max(y.len());
        let z = SpMat::zeros(self.rows, self.cols);
        let num = (0..k).map(|i| x.get(i).unwrap_or(&z).axpy(a, y.get(i).unwrap_or(&z))).collect();
        Self::from_parts(self.rows, self.cols, num, den)
    }
    pub fn scale_q(&self, a: &Q) -> RatMat {
        if a.is_zero() {
            return RatMat::zeros(self.rows, self.cols);
        }
        RatMat { rows: self.rows, cols: self.cols, num: self.num.iter().map(|m| m.scale(a)).collect(), den: self.den.clone() }
    }
    pub fn scale_rf(&self, f: &RatFunc) -> RatMat {
        if f.is_zero() {
            return RatMat::zeros(self.rows, self.cols);
        }
        Self::from_parts(self.rows, self.cols, Self::num_times_poly(&self.num, f.num()), &self.den * f.den())
    }
    /// Left multiplication by a constant matrix.
    pub fn lmul_const(&self, a: &SpMat) -> RatMat {
        Self::from_parts(a.rows(), self.cols, self.num.iter().map(|m| a.mul(m)).collect(), self.den.clone())
    }
    pub fn rmul_const(&self, a: &SpMat) -> RatMat {
        Self::from_parts(self.rows, a.cols(), self.num.iter().map(|m| m.mul(a)).collect(), self.den.clone())
    }
    pub fn mul(&self, o: &RatMat) -> RatMat {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        if self.is_zero() || o.is_zero() {
            return RatMat::zeros(self.rows, o.cols);
        }
        let mut num = vec![SpMat::zeros(self.rows, o.cols); self.num.len() + o.num.len() - 1];
        for (k, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    num[k + l] = num[k + l].add(&a.mul(b));
                }
            }
        }
        Self::from_parts(self.rows, o.cols, num, &self.den * &o.den)
    }
    pub fn kron(&self, o: &RatMat) -> RatMat {
        if self.is_zero() || o.is_zero() {
            return RatMat::zeros(self.rows * o.rows, self.cols * o.cols);
        }
        let mut num = vec![SpMat::zeros(self.rows * o.rows, self.cols * o.cols); self.num.len() + o.num.len() - 1];
        for (k, a) in self.num.iter().enumerate() {
            for (l, b) in o.num.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    num[k + l] = num[k + l].add(&a.kron(b));
                }
            }
        }
        Self::from_parts(self.rows * o.rows, self.cols * o.cols, num, &self.den * &o.den)
    }
    pub fn commutator(&self, o: &RatMat) -> RatMat {
        self.mul(o).sub(&o.mul(self))
    }
    pub fn transpose(&self) -> RatMat {
        RatMat { rows: self.cols, cols: self.rows, num: self.num.iter().map(|m| m.transpose()).collect(), den: self.den.clone() }
    }
    /// Apply the same map to every coefficient matrix (must be linear).
    pub fn map_coeffs(&self, f: impl Fn(&SpMat) -> SpMat) -> RatMat {
        let num: Vec<SpMat> = self.num.iter().map(f).collect();
        let (r, c) = num.first().map_or((self.rows, self.cols), |m| (m.rows(), m.cols()));
        Self::from_parts(r, c, num, self.den.clone())
    }

    /// `M(a·u + b)`.
    pub fn subst_affine(&self, a: &Q, b: &Q) -> RatMat {
        assert!(!a.is_zero(), "degenerate substitution");
        if self.is_zero() || (a.is_one() && b.is_zero()) {
            return self.clone();
        }
        let k = self.num.len();
        let mut num = vec![SpMat::zeros(self.rows, self.cols); k];
        for (p, m) in self.num.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            // (a u + b)^p = Σ_j C(p,j) a^j b^{p-j} u^j
            for (j, acc) in num.iter_mut().enumerate().take(p + 1) {
                let c = &(&binom(p, j) * &a.pow(j as u32)) * &b.pow((p - j) as u32);
                if !c.is_zero() {
                    *acc = acc.axpy(&c, m);
                }
            }
        }
        Self::from_parts(self.rows, self.cols, num, self.den.compose_affine(a, b))
    }
    /// `M(u − z)`.
    pub fn shift(&self, z: &Q) -> RatMat {
        self.subst_affine(&Q::ONE, &-z)
    }
    /// `M(−u)`.
    pub fn reflect(&self) -> RatMat {
        self.subst_affine(&Q::int(-1), &Q::ZERO)
    }

    /// Value of the numerator at `x`.
    pub fn eval_num(&self, x: &Q) -> SpMat {
        let mut acc = SpMat::zeros(self.rows, self.cols);
        for m in self.num.iter().rev() {
            acc = acc.scale(x).add(m);
        }
        acc
    }
    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Q) -> Option<SpMat> {
        let d = self.den.eval(x);
        let inv = d.inv()?;
        Some(self.eval_num(x).scale(&inv))
    }

    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> RatMat {
        Self::from_parts(nr, nc, self.num.iter().map(|m| m.submatrix(r0, c0, nr, nc)).collect(), self.den.clone())
    }
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RatMat {
        Self::from_parts(rows.len(), cols.len(), self.num.iter().map(|m| m.select(rows, cols)).collect(), self.den.clone())
    }
    /// Block `(bi, bj)` of size `bs × bs`.
    pub fn block(&self, bi: usize, bj: usize, bs: usize) -> RatMat {
        self.submatrix(bi * bs, bj * bs, bs, bs)
    }
    pub fn from_blocks(br: usize, bc: usize, blocks: &[RatMat]) -> RatMat {
        assert_eq!(blocks.len(), br * bc);
        let (r, c) = (blocks[0].rows, blocks[0].cols);
        let mut den = UPoly::one();
        for b in blocks {
            if !b.is_zero() && b.den != den {
                den = UPoly::lcm(&den, &b.den);
            }
        }
        let scaled: Vec<Vec<SpMat>> = blocks.iter().map(|b| Self::num_times_poly(&b.num, &den.exact_div(&b.den).unwrap())).collect();
        let k = scaled.iter().map(|v| v.len()).max().unwrap_or(0);
        let z = SpMat::zeros(r, c);
        let num = (0..k)
            .map(|p| {
                let bl: Vec<SpMat> = scaled.iter().map(|v| v.get(p).unwrap_or(&z).clone()).collect();
                SpMat::from_blocks(br, bc, &bl)
            })
            .collect();
        Self::from_parts(br * r, bc * c, num, den)
    }

    /// Connected components of the row/column sparsity graph (square matrices).
    pub fn components(&self) -> Vec<Vec<usize>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for m in &self.num {
            for (i, j, _) in m.triplets() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Exact inverse, block by block over the sparsity components.
    pub fn inverse(&self) -> Result<RatMat, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut blocks: Vec<(Vec<usize>, RatMat)> = vec![];
        for comp in self.components() {
            let sub = self.select(&comp, &comp);
            let inv = if sub.is_constant() {
                let m = sub.num.first().cloned().unwrap_or_else(|| SpMat::zeros(comp.len(), comp.len()));
                RatMat::constant(SpMat::from_dense(&m.to_dense().inverse()?))
            } else {
                RatMat::from_rfmatrix(&rfm_inverse(&sub.to_rfmatrix())?)
            };
            blocks.push((comp, inv));
        }
        let mut den = UPoly::one();
        for (_, b) in &blocks {
            if !b.den.is_one() {
                den = UPoly::lcm(&den, &b.den);
            }
        }
        let mut trip: Vec<Vec<(usize, usize, Q)>> = vec![];
        for (comp, b) in &blocks {
            let num = Self::num_times_poly(&b.num, &den.exact_div(&b.den).unwrap());
            for (k, m) in num.iter().enumerate() {
                if trip.len() <= k {
                    trip.resize(k + 1, vec![]);
                }
                trip[k].extend(m.triplets().map(|(i, j, v)| (comp[i], comp[j], v.clone())));
            }
        }
        let num = trip.into_iter().map(|t| SpMat::from_triplets(n, n, t)).collect();
        Ok(Self::from_parts(n, n, num, den))
    }

    /// Coefficients `C_0..C_K` of the expansion `Σ C_k u^{-k}` at infinity.
    pub fn laurent(&self, k: usize) -> Result<Vec<SpMat>, ExactError> {
        let z = SpMat::zeros(self.rows, self.cols);
        if self.is_zero() {
            return Ok(vec![z; k + 1]);
        }
        let d = self.den.deg0();
        if self.num.len() > d + 1 {
            return Err(ExactError::Improper);
        }
        // t = 1/u: num/den = A(t)/B(t), A_j = N_{d-j}, B_i = den_{d-i}, B_0 = 1
        let mut c: Vec<SpMat> = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let mut acc = if j <= d { self.num.get(d - j).cloned().unwrap_or_else(|| z.clone()) } else { z.clone() };
            for i in 1..=j.min(d) {
                let b = self.den.coeff(d - i);
                if !b.is_zero() {
                    acc = acc.axpy(&-&b, &c[j - i]);
                }
            }
            c.push(acc);
        }
        Ok(c)
    }
}
