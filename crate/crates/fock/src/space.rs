//! `G(C^m ⊗ C^n)` with basis monomials indexed by bitmasks of occupied slots.
//!
//! Slot of `x_{ai}` is `(a−1)·n + (i−1)`; a basis monomial is the product of
//! its variables in ascending slot order applied to the vacuum.

use crate::pairing::PairingData;
use crate::FockError;
use exactcore::{Q, SpMat};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FockSpace {
    pub m: usize,
    pub n: usize,
}

/// Sign of moving past the occupied slots below `s`.
pub fn parity_below(mask: u64, s: usize) -> i64 {
    if (mask & ((1u64 << s) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

impl FockSpace {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m * n <= 24, "Fock space too large");
        FockSpace { m, n }
    }
    pub fn slots(&self) -> usize {
        self.m * self.n
    }
    pub fn dim(&self) -> usize {
        1 << self.slots()
    }
    pub fn slot(&self, a: usize, i: usize) -> Result<usize, FockError> {
        if a == 0 || a > self.m || i == 0 || i > self.n {
            return Err(FockError::Index { a, i, m: self.m, n: self.n });
        }
        Ok((a - 1) * self.n + (i - 1))
    }
    pub fn identity(&self) -> SpMat {
        SpMat::identity(self.dim())
    }

    /// `x_s` on a raw slot.
    pub fn x_slot(&self, s: usize) -> SpMat {
        let bit = 1u64 << s;
        SpMat::from_triplets(
            self.dim(),
            self.dim(),
            (0..self.dim() as u64).filter(|b| b & bit == 0).map(|b| ((b | bit) as usize, b as usize, Q::int(parity_below(b, s)))),
        )
    }
    /// `∂_s` on a raw slot.
    pub fn d_slot(&self, s: usize) -> SpMat {
        let bit = 1u64 << s;
        SpMat::from_triplets(
            self.dim(),
            self.dim(),
            (0..self.dim() as u64).filter(|b| b & bit != 0).map(|b| ((b & !bit) as usize, b as usize, Q::int(parity_below(b, s)))),
        )
    }
    pub fn creation(&self, a: usize, i: usize) -> Result<SpMat, FockError> {
        Ok(self.x_slot(self.slot(a, i)?))
    }
    pub fn annihilation(&self, a: usize, i: usize) -> Result<SpMat, FockError> {
        Ok(self.d_slot(self.slot(a, i)?))
    }

    /// `Σ_k x_{ak} ∂_{ak}`.
    pub fn row_degree(&self, a: usize) -> Result<SpMat, FockError> {
        self.slot(a, 1)?;
        let lo = (a - 1) * self.n;
        let rowmask = ((1u64 << self.n) - 1) << lo;
        Ok(SpMat::from_triplets(
            self.dim(),
            self.dim(),
            (0..self.dim()).map(|b| (b, b, Q::int(((b as u64) & rowmask).count_ones() as i64))),
        ))
    }

    /// Row-`a` occupation number of a basis index.
    pub fn row_count(&self, mask: usize, a: usize) -> usize {
        let lo = (a - 1) * self.n;
        ((mask >> lo) & ((1 << self.n) - 1)).count_ones() as usize
    }

    /// `p_{ci}`: `x_{−c,i}` for `c<0`, `θ_i ∂_{c,ĩ}` for `c>0`.
    pub fn p(&self, c: i64, i: usize, pr: &PairingData) -> Result<SpMat, FockError> {
        match c {
            0 => Err(FockError::ZeroRow),
            c if c < 0 => self.creation((-c) as usize, i),
            c => Ok(self.annihilation(c as usize, pr.tilde(i))?.scale(&Q::int(pr.theta(i)))),
        }
    }
    /// `q_{ci}`: `∂_{−c,i}` for `c<0`, `θ_i x_{c,ĩ}` for `c>0`.
    pub fn q(&self, c: i64, i: usize, pr: &PairingData) -> Result<SpMat, FockError> {
        match c {
            0 => Err(FockError::ZeroRow),
            c if c < 0 => self.annihilation((-c) as usize, i),
            c => Ok(self.creation(c as usize, pr.tilde(i))?.scale(&Q::int(pr.theta(i)))),
        }
    }

    /// Odd indices ascending, then even indices descending.
    pub fn corder(n: usize) -> Vec<usize> {
        (1..=n).filter(|k| k % 2 == 1).chain((1..=n).rev().filter(|k| k % 2 == 0)).collect()
    }
    /// Product of `x_{ak}` over the first `s` indices of [`Self::corder`].
    pub fn f_monomial(&self, a: usize, s: usize) -> Result<SpMat, FockError> {
        if s > self.n {
            return Err(FockError::Degree(s, self.n));
        }
        let mut acc = self.identity();
        for &k in Self::corder(self.n).iter().take(s) {
            acc = acc.mul(&self.creation(a, k)?);
        }
        Ok(acc)
    }
    /// Product of `∂_{a,k̃}` over the first `s` indices of [`Self::corder`].
    pub fn g_monomial(&self, a: usize, s: usize, pr: &PairingData) -> Result<SpMat, FockError> {
        if s > self.n {
            return Err(FockError::Degree(s, self.n));
        }
        let mut acc = self.identity();
        for &k in Self::corder(self.n).iter().take(s) {
            acc = acc.mul(&self.annihilation(a, pr.tilde(k))?);
        }
        Ok(acc)
    }

    pub fn vacuum(&self) -> Vec<Q> {
        let mut v = vec![Q::ZERO; self.dim()];
        v[0] = Q::ONE;
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::Case;

    #[test]
    fn one_slot_matrices() {
        let f = FockSpace::new(1, 1);
        assert_eq!(f.creation(1, 1).unwrap(), SpMat::from_ints(&[&[0, 0], &[1, 0]]));
        assert_eq!(f.annihilation(1, 1).unwrap(), SpMat::from_ints(&[&[0, 1], &[0, 0]]));
        assert!(f.creation(2, 1).is_err());
    }

    #[test]
    fn derivative_sign() {
        // ∂_{12}(x_{11} x_{12}) = −x_{11}
        let f = FockSpace::new(1, 2);
        let v = f.creation(1, 1).unwrap().mul(&f.creation(1, 2).unwrap()).mul_vec(&f.vacuum());
        let w = f.annihilation(1, 2).unwrap().mul_vec(&v);
        let x11 = f.creation(1, 1).unwrap().mul_vec(&f.vacuum());
        assert_eq!(w, x11.iter().map(|c| -c).collect::<Vec<_>>());
    }

    #[test]
    fn pq_examples() {
        let f = FockSpace::new(1, 2);
        let o = PairingData::new(Case::Orth, 2).unwrap();
        let s = PairingData::new(Case::Symp, 2).unwrap();
        assert_eq!(f.p(-1, 2, &o).unwrap(), f.creation(1, 2).unwrap());
        assert_eq!(f.p(1, 1, &o).unwrap(), f.annihilation(1, 2).unwrap());
        assert_eq!(f.p(1, 2, &s).unwrap(), f.annihilation(1, 1).unwrap().neg());
        assert!(f.p(0, 1, &o).is_err());
    }

    #[test]
    fn monomials() {
        assert_eq!(FockSpace::corder(4), vec![1, 3, 4, 2]);
        assert_eq!(FockSpace::corder(3), vec![1, 3, 2]);
        let f = FockSpace::new(1, 4);
        let p = PairingData::new(Case::Orth, 4).unwrap();
        let x = |i| f.creation(1, i).unwrap();
        let d = |i| f.annihilation(1, i).unwrap();
        assert_eq!(f.f_monomial(1, 2).unwrap(), x(1).mul(&x(3)));
        assert_eq!(f.g_monomial(1, 2, &p).unwrap(), d(2).mul(&d(4)));
        let f3 = FockSpace::new(1, 3);
        let p3 = PairingData::new(Case::Orth, 3).unwrap();
        assert_eq!(f3.g_monomial(1, 2, &p3).unwrap(), f3.annihilation(1, 2).unwrap().mul(&f3.annihilation(1, 3).unwrap()));
        assert!(f.f_monomial(1, 0).unwrap().is_identity());
        assert!(f.f_monomial(1, 5).is_err());
    }

    #[test]
    fn row_degree_values() {
        let f = FockSpace::new(1, 2);
        let r = f.row_degree(1).unwrap();
        assert_eq!((0..4).map(|b| r.get(b, b)).collect::<Vec<_>>(), vec![Q::ZERO, Q::ONE, Q::ONE, Q::int(2)]);
        let f2 = FockSpace::new(2, 2);
        let x = f2.creation(1, 2).unwrap();
        assert_eq!(f2.row_degree(1).unwrap().commutator(&x), x);
        assert!(f2.row_degree(2).unwrap().commutator(&x).is_zero());
    }
}
