//! Clifford automorphisms that send every generator to `±` a generator,
//! together with the signed-permutation conjugators realizing them.

use crate::pairing::PairingData;
use crate::space::{parity_below, FockSpace};
use crate::FockError;
use exactcore::{Q, SpMat};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    X(usize),
    D(usize),
}

impl Gen {
    pub fn slot(self) -> usize {
        match self {
            Gen::X(s) | Gen::D(s) => s,
        }
    }
    pub fn op(self, f: &FockSpace) -> SpMat {
        match self {
            Gen::X(s) => f.x_slot(s),
            Gen::D(s) => f.d_slot(s),
        }
    }
}

/// Images of `x_s` (index `2s`) and `∂_s` (index `2s+1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenMap {
    pub space: FockSpace,
    img: Vec<(i64, Gen)>,
}

fn idx(g: Gen) -> usize {
    match g {
        Gen::X(s) => 2 * s,
        Gen::D(s) => 2 * s + 1,
    }
}

impl GenMap {
    pub fn identity(space: FockSpace) -> Self {
        let img = (0..space.slots()).flat_map(|s| [(1, Gen::X(s)), (1, Gen::D(s))]).collect();
        GenMap { space, img }
    }

    pub fn image(&self, g: Gen) -> (i64, Gen) {
        self.img[idx(g)]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GenMap) -> GenMap {
        assert_eq!(self.space, other.space);
        let img = other
            .img
            .iter()
            .map(|&(s, g)| {
                let (t, h) = self.image(g);
                (s * t, h)
            })
            .collect();
        GenMap { space: self.space, img }
    }

    /// Rows moved by `f` (1-based): `x_{ai} ↦ x_{f(a) i}`, `∂_{ai} ↦ ∂_{f(a) i}`.
    pub fn row_map(space: FockSpace, f: impl Fn(usize) -> usize) -> Self {
        let n = space.n;
        let img = (0..space.slots())
            .flat_map(|s| {
                let (a, i) = (s / n + 1, s % n);
                let t = (f(a) - 1) * n + i;
                [(1, Gen::X(t)), (1, Gen::D(t))]
            })
            .collect();
        GenMap { space, img }
    }

    /// Particle-hole flip of row `a`: `x_{ai} ↦ θ_i ∂_{aĩ}`, `∂_{ai} ↦ θ_i x_{aĩ}`.
    pub fn row_flip(space: FockSpace, a: usize, pr: &PairingData) -> Self {
        let mut g = Self::identity(space);
        for i in 1..=space.n {
            let s = space.slot(a, i).unwrap();
            let t = space.slot(a, pr.tilde(i)).unwrap();
            let th = pr.theta(i);
            g.img[2 * s] = (th, Gen::D(t));
            g.img[2 * s + 1] = (th, Gen::X(t));
        }
        g
    }

    /// `ϖ_δ`: flip row `m+1−a` for every `a` with `δ_a = −1`.
    pub fn varpi(space: FockSpace, delta: &[i64], pr: &PairingData) -> Result<Self, FockError> {
        if delta.len() != space.m {
            return Err(FockError::Length(delta.len(), space.m));
        }
        let mut g = Self::identity(space);
        for (k, &d) in delta.iter().enumerate() {
            if d == -1 {
                g = Self::row_flip(space, space.m - k, pr).compose(&g);
            }
        }
        Ok(g)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.space)
    }

    /// Apply to a product of generators acting on a vector.
    pub fn apply_word(&self, word: &[Gen], v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for &g in word.iter().rev() {
            let (s, h) = self.image(g);
            out = h.op(&self.space).scale(&Q::int(s)).mul_vec(&out);
        }
        out
    }

    /// Signed permutation `W` with `W Y W^{-1} = φ(Y)` for every generator `Y`.
    pub fn conjugator(&self) -> SpMat {
        let f = self.space;
        // new vacuum: occupied where some ∂ is sent to an x
        let mut vac: u64 = 0;
        for s in 0..f.slots() {
            if let (_, Gen::X(t)) = self.image(Gen::D(s)) {
                vac |= 1 << t;
            }
        }
        let mut trip = Vec::with_capacity(f.dim());
        for b in 0..f.dim() as u64 {
            let (mut mask, mut sign) = (vac, 1i64);
            for s in (0..f.slots()).rev().filter(|s| b >> s & 1 == 1) {
                let (t, h) = self.image(Gen::X(s));
                sign *= t;
                let bit = 1u64 << h.slot();
                match h {
                    Gen::X(u) => {
                        assert!(mask & bit == 0, "not an automorphism");
                        sign *= parity_below(mask, u);
                        mask |= bit;
                    }
                    Gen::D(u) => {
                        assert!(mask & bit != 0, "not an automorphism");
                        sign *= parity_below(mask, u);
                        mask &= !bit;
                    }
                }
            }
            trip.push((mask as usize, b as usize, Q::int(sign)));
        }
        SpMat::from_triplets(f.dim(), f.dim(), trip)
    }

    /// `W M W^{-1}` (the conjugator is orthogonal).
    pub fn conjugate(&self, m: &SpMat) -> SpMat {
        let w = self.conjugator();
        w.mul(m).mul(&w.transpose())
    }
}
