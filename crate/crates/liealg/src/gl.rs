//! Representations of `gl_n` and the `g_n` generators `E_{ij} − θ_iθ_j E_{j̃ĩ}`.

use exactcore::{Q, SpMat};
use fock::{FockSpace, PairingData};
use serde::{Deserialize, Serialize};

/// Matrices `E_{ij}` (1-based, stored row-major) acting on a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlRep {
    pub n: usize,
    pub dim: usize,
    e: Vec<SpMat>,
}

impl GlRep {
    pub fn from_fn(n: usize, dim: usize, f: impl Fn(usize, usize) -> SpMat) -> Self {
        let e = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        GlRep { n, dim, e }
    }
    pub fn defining(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| SpMat::from_triplets(n, n, [(i - 1, j - 1, Q::ONE)]))
    }
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, 1, |_, _| SpMat::zeros(1, 1))
    }
    /// `E_{ab} ↦ Σ_k x_{ak} ∂_{bk}` on `G(C^l ⊗ C^n)`.
    pub fn fock_rows(fock: FockSpace) -> Self {
        Self::from_fn(fock.m, fock.dim(), |a, b| {
            (1..=fock.n).fold(SpMat::zeros(fock.dim(), fock.dim()), |acc, k| {
                acc.add(&fock.creation(a, k).unwrap().mul(&fock.annihilation(b, k).unwrap()))
            })
        })
    }
    pub fn get(&self, i: usize, j: usize) -> &SpMat {
        &self.e[(i - 1) * self.n + (j - 1)]
    }
    /// `E_{ij} − θ_iθ_j E_{j̃ĩ}`.
    pub fn g_gen(&self, i: usize, j: usize, pr: &PairingData) -> SpMat {
        let s = pr.theta(i) * pr.theta(j);
        self.get(i, j).sub(&self.get(pr.tilde(j), pr.tilde(i)).scale(&Q::int(s)))
    }
    /// Restriction to the `g_n` generators, as a `GlRep`-shaped table.
    pub fn restrict_g(&self, pr: &PairingData) -> GlRep {
        Self::from_fn(self.n, self.dim, |i, j| self.g_gen(i, j, pr))
    }
    pub fn is_gl_homomorphism(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let lhs = self.get(i, j).commutator(self.get(k, l));
                        let mut rhs = SpMat::zeros(self.dim, self.dim);
                        if j == k {
                            rhs = rhs.add(self.get(i, l));
                        }
                        if i == l {
                            rhs = rhs.sub(self.get(k, j));
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// `Σ_c (x_{ci} ∂_{cj} − θ_iθ_j x_{c j̃} ∂_{c ĩ})` on `G(C^m ⊗ C^N)`.
pub fn gn_action(i: usize, j: usize, fock: FockSpace, pr: &PairingData) -> SpMat {
    let s = Q::int(pr.theta(i) * pr.theta(j));
    let (ti, tj) = (pr.tilde(i), pr.tilde(j));
    (1..=fock.m).fold(SpMat::zeros(fock.dim(), fock.dim()), |acc, c| {
        let a = fock.creation(c, i).unwrap().mul(&fock.annihilation(c, j).unwrap());
        let b = fock.creation(c, tj).unwrap().mul(&fock.annihilation(c, ti).unwrap());
        acc.add(&a).axpy(&-&s, &b)
    })
}

/// The `g_n` Fock action as a table indexed like a `GlRep`.
pub fn gn_fock_rep(fock: FockSpace, pr: &PairingData) -> GlRep {
    GlRep::from_fn(pr.n(), fock.dim(), |i, j| gn_action(i, j, fock, pr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fock::Case;

    #[test]
    fn defining_is_rep() {
        assert!(GlRep::defining(3).is_gl_homomorphism());
        assert!(GlRep::fock_rows(FockSpace::new(2, 2)).is_gl_homomorphism());
    }

    #[test]
    fn gn_examples() {
        let f = FockSpace::new(2, 2);
        let pr = PairingData::new(Case::Orth, 2).unwrap();
        let expect = (1..=2).fold(SpMat::zeros(16, 16), |acc, c| {
            acc.add(&f.creation(c, 1).unwrap().mul(&f.annihilation(c, 1).unwrap()))
                .sub(&f.creation(c, 2).unwrap().mul(&f.annihilation(c, 2).unwrap()))
        });
        assert_eq!(gn_action(1, 1, f, &pr), expect);
        let p3 = PairingData::new(Case::Orth, 3).unwrap();
        assert!(gn_action(3, 3, FockSpace::new(1, 3), &p3).is_zero());
    }
}
