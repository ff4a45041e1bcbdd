//! `α_l: Y(gl_n) → U(gl_l) ⊗ GD(C^l ⊗ C^n)`, the series `Z(u)` and its Harish-Chandra image.

use crate::{inv_lin, ModError, ModuleSpec, Params};
use exactcore::{resolvent, RatFunc, RatMat, SpMat, Q};
use fock::FockSpace;
use liealg::GlRep;
use serde::Serialize;
use yangian::{Flavor, Realization};

/// Block matrix with block `(a, b)` equal to `f(a, b)`, `1 ≤ a, b ≤ l`.
fn block_matrix(l: usize, d: usize, f: impl Fn(usize, usize) -> SpMat) -> SpMat {
    if l == 0 {
        return SpMat::zeros(0, 0);
    }
    let blocks: Vec<SpMat> = (1..=l).flat_map(|a| (1..=l).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect();
    let m = SpMat::from_blocks(l, l, &blocks);
    debug_assert_eq!(m.rows(), l * d);
    m
}

/// `T_{ij}(u) = δ_{ij} + Σ_{a,b} (u + z − E′)^{-1}_{ab} ⊗ x_{ai} ∂_{bj}` on `U ⊗ G(C^l ⊗ C^n)`, with `E′_{ab} = E_{ba}`.
pub fn alpha_l(l: usize, n: usize, u_rep: &GlRep, z: &Q) -> ModuleSpec {
    let du = u_rep.dim;
    let fock = FockSpace::new(l, n);
    let df = fock.dim();
    let d = du * df;
    let res = resolvent(&block_matrix(l, du, |a, b| u_rep.get(b, a).clone()), z);
    let real = Realization::from_fn(n, d, Flavor::T, None, format!("alpha_{l}"), |i, j| {
        let mut acc = if i == j { RatMat::identity(d) } else { RatMat::zeros(d, d) };
        for a in 1..=l {
            for b in 1..=l {
                let op = fock.creation(a, i).unwrap().mul(&fock.annihilation(b, j).unwrap());
                acc = acc.add(&res.block(a - 1, b - 1, du).kron(&RatMat::constant(op)));
            }
        }
        acc
    });
    ModuleSpec::new(real, Params { z: vec![z.clone()], ..Params::default() })
}

/// `E_{ab} ↦ ρ(E_{ab}) ⊗ 1 + 1 ⊗ Σ_k x_{ak} ∂_{bk}` for all `a, b`.
pub fn eabact(l: usize, n: usize, u_rep: &GlRep) -> Vec<SpMat> {
    let fr = GlRep::fock_rows(FockSpace::new(l, n));
    let (iu, if_) = (SpMat::identity(u_rep.dim), SpMat::identity(fr.dim));
    let mut out = vec![];
    for a in 1..=l {
        for b in 1..=l {
            out.push(u_rep.get(a, b).kron(&if_).add(&iu.kron(fr.get(a, b))));
        }
    }
    out
}

/// `Z(u) = Σ_c (u + E)^{-1}_{cc}` as an operator on `U`.
pub fn z_series(u_rep: &GlRep) -> RatMat {
    let (l, d) = (u_rep.n, u_rep.dim);
    let res = resolvent(&block_matrix(l, d, |a, b| u_rep.get(a, b).neg()), &Q::ZERO);
    (0..l).fold(RatMat::zeros(d, d), |acc, c| acc.add(&res.block(c, c, d)))
}

/// `∏_a (1 + 1/(u + l − a + λ_a))`.
pub fn hc_scalar(lambda: &[Q]) -> RatFunc {
    let l = lambda.len() as i64;
    lambda.iter().enumerate().fold(RatFunc::one(), |acc, (k, la)| {
        let c = la + &Q::int(l - 1 - k as i64);
        &acc * &(&RatFunc::one() + &inv_lin(c))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HcReport {
    pub leading: bool,
    pub highest: bool,
    pub eep: bool,
}

impl HcReport {
    pub fn pass(&self) -> bool {
        self.leading && self.highest && self.eep
    }
}

/// Leading term `l u^{-1}`, the scalar of `1 + Z(u)` on a highest vector `v` of weight `λ`, and the `eep` identity.
pub fn hc_check(u_rep: &GlRep, v: &[Q], lambda: &[Q]) -> Result<HcReport, ModError> {
    let (l, d) = (u_rep.n, u_rep.dim);
    let z = z_series(u_rep);
    let lau = z.laurent(1)?;
    let leading = lau[0].is_zero() && lau[1] == SpMat::scalar(d, Q::int(l as i64));
    let want = &hc_scalar(lambda) - &RatFunc::one();
    let diff = z.sub(&RatMat::scalar(d, &want));
    let highest = diff.num().iter().all(|c| c.mul_vec(v).iter().all(|x| x.is_zero()));
    Ok(HcReport { leading, highest, eep: eep_check(u_rep) })
}

/// `(u + E)^{-1}_{da} = (1 + Z(u)) (u + l + E′)^{-1}_{ad}` for all `a, d`.
pub fn eep_check(u_rep: &GlRep) -> bool {
    let (l, d) = (u_rep.n, u_rep.dim);
    let lhs = resolvent(&block_matrix(l, d, |a, b| u_rep.get(a, b).neg()), &Q::ZERO);
    let rhs = resolvent(&block_matrix(l, d, |a, b| u_rep.get(b, a).neg()), &Q::int(l as i64));
    let one_z = z_series(u_rep).add(&RatMat::identity(d));
    (0..l).all(|a| (0..l).all(|dd| lhs.block(dd, a, d) == one_z.mul(&rhs.block(a, dd, d))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutes_with;
    use crate::pmod::p_module;
    use exactcore::q;
    use proptest::prelude::*;
    use yangian::check_rtt;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]

        #[test]
        fn l1_trivial_is_p(a in -15i64..15, b in 1i64..8) {
            let z = Q::new(a, b);
            let x = alpha_l(1, 2, &GlRep::trivial(1), &z);
            prop_assert!(x.real.same_entries(&p_module(2, &z, None).real));
        }
    }

    #[test]
    fn l1_trivial_is_p0() {
        let a = alpha_l(1, 2, &GlRep::trivial(1), &Q::ZERO);
        assert!(a.real.same_entries(&p_module(2, &Q::ZERO, None).real));
    }

    #[test]
    fn l2_rtt_and_commutant() {
        let u = GlRep::defining(2);
        let a = alpha_l(2, 2, &u, &Q::ZERO);
        assert!(check_rtt(&a.real).unwrap().pass);
        assert!(commutes_with(&a.real, &eabact(2, 2, &u)));
    }

    #[test]
    fn first_coefficient() {
        let u = GlRep::defining(2);
        let a = alpha_l(2, 2, &u, &q(1, 2));
        let f = FockSpace::new(2, 2);
        for i in 1..=2 {
            for j in 1..=2 {
                let c1 = a.real.entry(i, j).laurent(1).unwrap()[1].clone();
                let want = (1..=2).fold(SpMat::zeros(16, 16), |acc, c| acc.add(&f.creation(c, i).unwrap().mul(&f.annihilation(c, j).unwrap())));
                assert_eq!(c1, SpMat::identity(2).kron(&want));
            }
        }
    }

    #[test]
    fn harish_chandra() {
        let r = hc_check(&GlRep::defining(1), &[Q::ONE], &[Q::ONE]).unwrap();
        assert!(r.pass());
        assert_eq!(hc_scalar(&[Q::ONE]), &RatFunc::one() + &RatFunc::inv_linear(Q::ONE));
        let r = hc_check(&GlRep::trivial(2), &[Q::ONE], &[Q::ZERO, Q::ZERO]).unwrap();
        assert!(r.pass());
        let r = hc_check(&GlRep::defining(2), &[Q::ONE, Q::ZERO], &[Q::ONE, Q::ZERO]).unwrap();
        assert!(r.pass());
        // wrong weight is detected
        let r = hc_check(&GlRep::defining(2), &[Q::ONE, Q::ZERO], &[Q::ZERO, Q::ONE]).unwrap();
        assert!(!r.highest);
    }
}
