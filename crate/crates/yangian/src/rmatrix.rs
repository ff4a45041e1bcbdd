//! `R(u) = u − P` and `R′(u) = u − Σ θ_iθ_j E_{ij} ⊗ E_{ĩj̃}` on `C^n ⊗ C^n`.

use exactcore::{Q, RatFunc, RatMat, SpMat};
use liealg::PairingData;

/// `P` (kind plain) or `Q = Σ θ_iθ_j E_{ij} ⊗ E_{ĩj̃}` (kind primed), tensored with `1_d`.
pub fn perm_part(n: usize, d: usize, pr: Option<&PairingData>) -> SpMat {
    let nn = n * n * d;
    let mut t = vec![];
    match pr {
        None => {
            for i in 0..n {
                for k in 0..n {
                    for a in 0..d {
                        t.push(((i * n + k) * d + a, (k * n + i) * d + a, Q::ONE));
                    }
                }
            }
        }
        Some(pr) => {
            for i in 1..=n {
                for j in 1..=n {
                    let s = Q::int(pr.theta(i) * pr.theta(j));
                    let (r, c) = ((i - 1) * n + pr.tilde(i) - 1, (j - 1) * n + pr.tilde(j) - 1);
                    for a in 0..d {
                        t.push((r * d + a, c * d + a, s.clone()));
                    }
                }
            }
        }
    }
    SpMat::from_triplets(nn, nn, t)
}

/// `(w − P) ⊗ 1_d` or `(w − Q) ⊗ 1_d` at a number `w`.
pub fn r_at(n: usize, d: usize, pr: Option<&PairingData>, w: &Q) -> SpMat {
    SpMat::scalar(n * n * d, w.clone()).sub(&perm_part(n, d, pr))
}

/// `R(u)`.
pub fn r_matrix(n: usize) -> RatMat {
    RatMat::scalar(n * n, &RatFunc::u()).sub(&RatMat::constant(perm_part(n, 1, None)))
}

/// `R′(u)`.
pub fn r_prime(pr: &PairingData) -> RatMat {
    let n = pr.n();
    RatMat::scalar(n * n, &RatFunc::u()).sub(&RatMat::constant(perm_part(n, 1, Some(pr))))
}

/// `R(u)R(−u) = 1 − u²`.
pub fn check_unitarity(n: usize) -> bool {
    let r = r_matrix(n);
    let one_minus = RatFunc::poly(exactcore::UPoly::from_ints(&[1, 0, -1]));
    r.mul(&r.reflect()) == RatMat::scalar(n * n, &one_minus)
}

/// `R′(u)R′(n − u) = u(n − u)`.
pub fn check_unitarity_prime(pr: &PairingData) -> bool {
    let n = pr.n();
    let r = r_prime(pr);
    let nn = Q::int(n as i64);
    let rhs = exactcore::UPoly::new(vec![Q::ZERO, nn.clone(), Q::int(-1)]);
    r.mul(&r.subst_affine(&Q::int(-1), &nn)) == RatMat::scalar(n * n, &RatFunc::poly(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use liealg::Case;

    #[test]
    fn unitarity_small() {
        assert!(check_unitarity(2));
        assert!(check_unitarity_prime(&PairingData::new(Case::Symp, 2).unwrap()));
        assert!(check_unitarity_prime(&PairingData::new(Case::Orth, 3).unwrap()));
    }
}
