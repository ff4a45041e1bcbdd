//! The twisted tensor product of `β_m(V)` with `α_l(U)` shifted by `z = m ∓ 1/2`.

use crate::alpha::{alpha_l, eabact, z_series};
use crate::beta::{beta_m, xact};
use crate::{ModError, ModuleSpec, Params};
use exactcore::{RatMat, SpMat, Q};
use fock::FockSpace;
use liealg::{FmRep, GlRep};
use yangian::coaction;

/// `S_{ij}(u) ↦ Σ_{g,h} β_m(S_{gh}(u)) ⊗ θ_iθ_g α_l(T_{g̃ĩ}(−u + z) T_{hj}(u + z))`, multiplied by
/// `1 + Z(u − z − l)` on the `U` factor. The space is `V ⊗ G(C^m ⊗ C^n) ⊗ U ⊗ G(C^l ⊗ C^n)`.
pub fn twisted_tensor(v: &FmRep, u: &GlRep, n: usize, l: usize) -> Result<ModuleSpec, ModError> {
    let fm = v.fm;
    let z = Q::int(fm.m as i64) - Q::new(fm.case.pm(), 2);
    let b = beta_m(v, n)?;
    let a = alpha_l(l, n, u, &z);
    let s = coaction(&b.real, &a.real)?;
    let dl = FockSpace::new(l, n).dim();
    let zu = z_series(u).shift(&(&z + &Q::int(l as i64))).add(&RatMat::identity(u.dim));
    let factor = RatMat::identity(b.real.d).kron(&zu).kron(&RatMat::identity(dl));
    let real = s.map(&format!("twisted({} ; {})", b.real.label, a.real.label), |e| factor.mul(e));
    Ok(ModuleSpec::new(real, Params { z: vec![z], ..Params::default() }))
}

/// The diagonal `f_m` action followed by the `gl_l` action `E_{ab} ↦ eabact(E_{ab}) − δ_{ab} n/2`.
pub fn twisted_tensor_actions(v: &FmRep, u: &GlRep, n: usize, l: usize) -> Result<Vec<SpMat>, ModError> {
    let dv = v.dim * FockSpace::new(v.fm.m, n).dim();
    let dw = u.dim * FockSpace::new(l, n).dim();
    let (iv, iw) = (SpMat::identity(dv), SpMat::identity(dw));
    let mut out: Vec<SpMat> = xact(v, n)?.into_iter().map(|x| x.kron(&iw)).collect();
    for (k, e) in eabact(l, n, u).into_iter().enumerate() {
        let e = if k / l == k % l { e.sub(&SpMat::scalar(dw, Q::new(n as i64, 2))) } else { e };
        out.push(iv.kron(&e));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutes_with;
    use fock::Case;
    use liealg::FmData;
    use yangian::check_reflection;

    #[test]
    fn m1_n2_l1() {
        for case in [Case::Orth, Case::Symp] {
            let v = FmRep::defining(FmData::new(1, case));
            let u = GlRep::defining(1);
            let t = twisted_tensor(&v, &u, 2, 1).unwrap();
            assert_eq!(t.dim(), 2 * 4 * 4);
            assert!(check_reflection(&t.real).unwrap().pass, "{case:?}");
            assert!(commutes_with(&t.real, &twisted_tensor_actions(&v, &u, 2, 1).unwrap()));
        }
    }
}
