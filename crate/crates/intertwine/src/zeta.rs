//! The multipliers `z_η`, their products over inversion sets and the elementary factor formulas.

use crate::IntError;
use exactcore::Q;
use fock::Case;
use liealg::{rho, Root};
use modules::{check_genericity, nu_degrees};
use serde::{Deserialize, Serialize};
use weyl::SignedPerm;

fn div(a: Q, b: Q, what: &str) -> Result<Q, IntError> {
    if b.is_zero() {
        return Err(IntError::Genericity(format!("zero denominator in {what}")));
    }
    Ok(&a / &b)
}

/// `z_η` from the shifted labels `μ*`, `λ*` and the degrees `ν` (all 1-based by position).
pub fn z_eta(eta: Root, mu_s: &[Q], la_s: &[Q], nu: &[i64], n: usize, case: Case) -> Result<Q, IntError> {
    let n = n as i64;
    match eta {
        Root::Diff(b, c) if nu[b - 1] > nu[c - 1] => div(&la_s[b - 1] - &la_s[c - 1], &mu_s[b - 1] - &mu_s[c - 1], "z_eta"),
        Root::Sum(b, c) if nu[b - 1] + nu[c - 1] > n => div(&la_s[b - 1] + &la_s[c - 1], &mu_s[b - 1] + &mu_s[c - 1], "z_eta"),
        Root::Double(b) if case == Case::Symp && 2 * nu[b - 1] > n => div(la_s[b - 1].clone(), mu_s[b - 1].clone(), "z_eta"),
        _ => Ok(Q::ONE),
    }
}

/// `μ*`, `λ*` and `ν` from unshifted labels.
pub fn shifted_data(mu: &[Q], lambda: &[Q], n: usize, case: Case) -> Result<(Vec<Q>, Vec<Q>, Vec<i64>), IntError> {
    check_genericity(mu, case)?;
    let nu = nu_degrees(mu, lambda, n)?.ok_or_else(|| IntError::Mismatch("some nu_a lies outside 0..=n".into()))?;
    let r = rho(case, mu.len()).labels;
    let ms = mu.iter().zip(&r).map(|(a, b)| a + b).collect();
    let ls = lambda.iter().zip(&r).map(|(a, b)| a + b).collect();
    Ok((ms, ls, nu))
}

/// `∏_{η ∈ Δ_σ} z_η`.
pub fn predicted_multiplier(sigma: &SignedPerm, mu: &[Q], lambda: &[Q], n: usize, case: Case) -> Result<Q, IntError> {
    let (ms, ls, nu) = shifted_data(mu, lambda, n, case)?;
    sigma.inversion_set(case).into_iter().try_fold(Q::ONE, |acc, eta| Ok(&acc * &z_eta(eta, &ms, &ls, &nu, n, case)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    Xx,
    Dd,
    Xd,
    X,
}

impl std::str::FromStr for FactorKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "xx" => Ok(FactorKind::Xx),
            "dd" => Ok(FactorKind::Dd),
            "xd" => Ok(FactorKind::Xd),
            "x" => Ok(FactorKind::X),
            _ => Err(format!("unknown factor kind {s}")),
        }
    }
}

/// Elementary factor with eigenvalue `h`, equal to 1 outside its range.
pub fn block_factor(kind: FactorKind, s: i64, t: i64, h: &Q, n: usize) -> Result<Q, IntError> {
    let n = n as i64;
    let one = Q::ONE;
    let (num, den) = match kind {
        FactorKind::Xx if s > t => (h + &Q::int(s - t + 1), h + &one),
        FactorKind::Dd if s < t => (h + &Q::int(t - s + 1), h + &one),
        FactorKind::Xd if s + t > n => (h + &Q::int(s + t + 1), h + &Q::int(n + 1)),
        FactorKind::X if 2 * s > n => (h + &Q::int(s + 1), h + &(Q::new(n, 2) + one)),
        _ => return Ok(Q::ONE),
    };
    div(num, den, "block factor")
}

/// The eigenvalue substituted for `H` when `η` is treated: `−μ*_b + μ*_c − 1`, `−μ*_b − μ*_c − n − 1` or `−μ*_b − n/2 − 1`.
pub fn h_for_root(eta: Root, mu_s: &[Q], n: usize) -> (FactorKind, Q) {
    let n2 = Q::new(n as i64, 2);
    match eta {
        Root::Diff(b, c) => (FactorKind::Xx, &(&mu_s[c - 1] - &mu_s[b - 1]) - &Q::ONE),
        Root::Sum(b, c) => (FactorKind::Xd, &(&(-&mu_s[b - 1] - &mu_s[c - 1]) - &Q::int(n as i64)) - &Q::ONE),
        Root::Double(b) => (FactorKind::X, &(-&mu_s[b - 1] - &n2) - &Q::ONE),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::q;

    #[test]
    fn double_root_example() {
        // μ* = 5/7, n = 2, ν = 2: λ* = 5/7 + 1 − 2 = −2/7
        let z = z_eta(Root::Double(1), &[q(5, 7)], &[q(-2, 7)], &[2], 2, Case::Symp).unwrap();
        assert_eq!(z, q(-2, 5));
        assert_eq!(z_eta(Root::Double(1), &[q(5, 7)], &[q(-2, 7)], &[1], 2, Case::Symp).unwrap(), Q::ONE);
    }

    #[test]
    fn outside_ranges() {
        let ms = [q(1, 3), q(1, 5)];
        assert_eq!(z_eta(Root::Diff(1, 2), &ms, &ms, &[1, 1], 2, Case::Orth).unwrap(), Q::ONE);
        assert_eq!(z_eta(Root::Sum(1, 2), &ms, &ms, &[1, 1], 2, Case::Orth).unwrap(), Q::ONE);
        assert_eq!(block_factor(FactorKind::Xx, 1, 1, &q(1, 3), 2).unwrap(), Q::ONE);
        assert_eq!(block_factor(FactorKind::X, 1, 0, &q(1, 3), 2).unwrap(), Q::ONE);
        assert!(block_factor(FactorKind::Xx, 2, 0, &Q::int(-1), 2).is_err());
    }

    #[test]
    fn xx_matches_table() {
        // ν_b − ν_c = 2 with n = 2
        let (ms, nu, n) = ([q(5, 7), q(2, 11)], [2i64, 0], 2usize);
        let ls: Vec<Q> = ms.iter().zip(&nu).map(|(m, v)| &(m + &Q::ONE) - &Q::int(*v)).collect();
        let (kind, h) = h_for_root(Root::Diff(1, 2), &ms, n);
        assert_eq!(block_factor(kind, 2, 0, &h, n).unwrap(), z_eta(Root::Diff(1, 2), &ms, &ls, &nu, n, Case::Orth).unwrap());
    }

    #[test]
    fn identity_multiplier() {
        let mu = [q(5, 7), q(2, 11)];
        assert_eq!(predicted_multiplier(&SignedPerm::identity(2), &mu, &mu, 2, Case::Symp).unwrap(), Q::ONE);
    }

    fn simple(a: usize, m: usize, case: Case) -> Option<Root> {
        if a < m {
            Some(Root::Diff(a, a + 1))
        } else if case == Case::Symp {
            Some(Root::Double(m))
        } else {
            None
        }
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn multiplicative_along_words(
            nums in prop::collection::vec(1i64..40, 3),
            nu in prop::collection::vec(0i64..=4, 3),
            si in 0usize..48,
            a in 1usize..=3,
            symp in any::<bool>(),
        ) {
            let case = if symp { Case::Symp } else { Case::Orth };
            let n = 4;
            let mu: Vec<Q> = nums.iter().zip([7i64, 11, 13]).map(|(x, d)| q(*x, d)).collect();
            prop_assume!(check_genericity(&mu, case).is_ok());
            let la: Vec<Q> = mu.iter().zip(&nu).map(|(x, v)| &(x + &Q::int(2)) - &Q::int(*v)).collect();
            let tau = SignedPerm::all(3)[si].clone();
            let next = SignedPerm::generator(a, 3).unwrap().compose(&tau);
            let p0 = predicted_multiplier(&tau, &mu, &la, n, case).unwrap();
            let p1 = predicted_multiplier(&next, &mu, &la, n, case).unwrap();
            let (ms, ls, nv) = shifted_data(&mu, &la, n, case).unwrap();
            match simple(a, 3, case) {
                None => prop_assert_eq!(p0, p1),
                Some(alpha) => {
                    let (sign, eta) = tau.inverse().act_root(alpha);
                    let z = z_eta(eta, &ms, &ls, &nv, n, case).unwrap();
                    if sign > 0 {
                        prop_assert_eq!(p1, &p0 * &z);
                    } else {
                        prop_assert_eq!(p0, &p1 * &z);
                    }
                }
            }
        }

        #[test]
        fn block_factors_reproduce_table(
            nums in prop::collection::vec(1i64..40, 2),
            nu in prop::collection::vec(0i64..=4, 2),
            symp in any::<bool>(),
        ) {
            let case = if symp { Case::Symp } else { Case::Orth };
            let n = 4;
            let ms: Vec<Q> = nums.iter().zip([7i64, 11]).map(|(x, d)| q(*x, d)).collect();
            prop_assume!(check_genericity(&ms, case).is_ok());
            let ls: Vec<Q> = ms.iter().zip(&nu).map(|(x, v)| &(x + &Q::int(2)) - &Q::int(*v)).collect();
            let mut roots = vec![Root::Diff(1, 2), Root::Sum(1, 2)];
            if symp {
                roots.extend([Root::Double(1), Root::Double(2)]);
            }
            for eta in roots {
                let (kind, h) = h_for_root(eta, &ms, n);
                let (s, t) = match eta {
                    Root::Diff(b, c) | Root::Sum(b, c) => (nu[b - 1], nu[c - 1]),
                    Root::Double(b) => (nu[b - 1], 0),
                };
                prop_assert_eq!(block_factor(kind, s, t, &h, n).unwrap(), z_eta(eta, &ms, &ls, &nu, n, case).unwrap());
            }
        }
    }
}
