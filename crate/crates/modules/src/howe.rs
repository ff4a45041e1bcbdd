//! The joint commutant of the `f_m` and `g_n` actions on `G(C^m ⊗ C^n)` and its partition count.

use crate::beta::{beta_m, xact};
use crate::ModError;
use exactcore::{commutant_dim, SpMat, Q};
use fock::{Case, FockSpace, PairingData};
use liealg::{gn_action, FmData, FmRep};

/// Partitions `ν` with `ν_1 ≤ m` and at most `n/2` parts (symplectic constraint `2ν′_1 ≤ n`).
pub fn howe_partitions(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if slots == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(m, n / 2, &mut vec![], &mut out);
    out.sort();
    out
}

fn conjugate(nu: &[usize], len: usize) -> Vec<usize> {
    (1..=len).map(|k| nu.iter().filter(|&&p| p >= k).count()).collect()
}

/// Weyl dimension of the `sp_{2k}` module with dominant labels `λ_1 ≥ … ≥ λ_k ≥ 0`.
pub fn sp_dim(lambda: &[i64]) -> Q {
    let k = lambda.len() as i64;
    let l: Vec<i64> = lambda.iter().enumerate().map(|(i, x)| x + k - i as i64).collect();
    let r: Vec<i64> = (0..k).map(|i| k - i).collect();
    let mut acc = Q::ONE;
    for i in 0..k as usize {
        acc = &acc * &Q::new(l[i], r[i]);
        for j in i + 1..k as usize {
            acc = &acc * &Q::new(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j]);
        }
    }
    acc
}

/// `Σ_ν dim L_{ν̄} · dim W_ν` over the symplectic partitions, with `ν̄ = (n/2 − ν′_m, …, n/2 − ν′_1)`.
pub fn howe_dimension_identity(m: usize, n: usize) -> Vec<(Vec<usize>, Q, Q)> {
    howe_partitions(m, n)
        .into_iter()
        .map(|nu| {
            let c = conjugate(&nu, m);
            let bar: Vec<i64> = c.iter().rev().map(|&x| n as i64 / 2 - x as i64).collect();
            let mut w: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
            w.resize(n / 2, 0);
            (nu, sp_dim(&bar), sp_dim(&w))
        })
        .collect()
}

/// Dimension of the commutant of the `β_m` coefficients (trivial `V`), the `g_n` Fock action and the `f_m` Fock action.
pub fn howe_commutant_count(m: usize, n: usize, case: Case) -> Result<usize, ModError> {
    if m == 0 {
        return Ok(1);
    }
    let rep = FmRep::trivial(FmData::new(m, case));
    let pr = PairingData::new(case, n)?;
    let fock = FockSpace::new(m, n);
    let mut ops: Vec<SpMat> = vec![];
    for e in beta_m(&rep, n)?.real.entries() {
        ops.extend(e.num().iter().cloned());
    }
    for i in 1..=n {
        for j in 1..=n {
            ops.push(gn_action(i, j, fock, &pr));
        }
    }
    ops.extend(xact(&rep, n)?);
    Ok(commutant_dim(fock.dim(), &ops))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m1_n2() {
        assert_eq!(howe_partitions(1, 2), vec![vec![], vec![1]]);
        let terms = howe_dimension_identity(1, 2);
        let dims: Vec<(Q, Q)> = terms.iter().map(|t| (t.1.clone(), t.2.clone())).collect();
        assert_eq!(dims, vec![(Q::int(2), Q::ONE), (Q::ONE, Q::int(2))]);
        assert_eq!(howe_commutant_count(1, 2, Case::Symp).unwrap(), 2);
        assert_eq!(howe_commutant_count(0, 2, Case::Symp).unwrap(), 1);
    }

    #[test]
    fn identity_sums() {
        for (m, n) in [(1, 2), (1, 4), (2, 2), (2, 4), (3, 2)] {
            let total = howe_dimension_identity(m, n).iter().fold(Q::ZERO, |acc, t| &acc + &(&t.1 * &t.2));
            assert_eq!(total, Q::int(1 << (m * n)), "{m} {n}");
        }
    }

    #[test]
    fn sp_dims() {
        assert_eq!(sp_dim(&[1, 0]), Q::int(4));
        assert_eq!(sp_dim(&[1, 1]), Q::int(5));
        assert_eq!(sp_dim(&[2, 0]), Q::int(10));
    }
}
