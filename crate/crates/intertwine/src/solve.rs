//! All `Φ` with `Φ ρ_src(S_{ij}(u)) = ρ_tgt(S_{ij}(u)) Φ`, by clearing denominators and equating `u`-coefficients.

use crate::IntError;
use exactcore::{Echelon, QMat, RatMat, SpMat, Q};
use modules::ModuleSpec;
use yangian::Realization;

/// Coefficient matrices of `N_src(u) q_tgt(u)` and `N_tgt(u) q_src(u)`, degree by degree.
fn cleared(src: &RatMat, tgt: &RatMat) -> Vec<(SpMat, SpMat)> {
    let mul = |num: &[SpMat], den: &exactcore::UPoly, d: usize| -> Vec<SpMat> {
        let dc = den.coeffs();
        let len = num.len() + dc.len().saturating_sub(1);
        (0..len)
            .map(|k| {
                let mut acc = SpMat::zeros(d, d);
                for (a, c) in dc.iter().enumerate() {
                    if a <= k && k - a < num.len() && !c.is_zero() {
                        acc = acc.axpy(c, &num[k - a]);
                    }
                }
                acc
            })
            .collect()
    };
    let (ds, dt) = (src.rows(), tgt.rows());
    let a = mul(src.num(), tgt.den(), ds);
    let b = mul(tgt.num(), src.den(), dt);
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| (a.get(k).cloned().unwrap_or_else(|| SpMat::zeros(ds, ds)), b.get(k).cloned().unwrap_or_else(|| SpMat::zeros(dt, dt))))
        .collect()
}

/// Basis of intertwiners between two realizations of the same algebra.
pub fn realization_intertwiners(src: &Realization, tgt: &Realization) -> Result<Vec<QMat>, IntError> {
    if src.n != tgt.n || src.flavor != tgt.flavor {
        return Err(IntError::Mismatch(format!("n = {} vs {}, flavors {:?} vs {:?}", src.n, tgt.n, src.flavor, tgt.flavor)));
    }
    let (ds, dt) = (src.d, tgt.d);
    if ds == 0 || dt == 0 {
        return Ok(vec![]);
    }
    let mut ech = Echelon::new(ds * dt);
    'outer: for (es, et) in src.entries().iter().zip(tgt.entries()) {
        for (a, b) in cleared(es, et) {
            if ech.is_full() {
                break 'outer;
            }
            exactcore::commutant::add_pair(&mut ech, ds, dt, &a, &b);
        }
    }
    Ok(ech.nullspace().into_iter().map(|v| QMat::from_fn(dt, ds, |r, c| v[r * ds + c].clone())).collect())
}

/// Intertwiners between two module specs; their recorded twists must agree, since they are not applied.
pub fn solve_commutant(src: &ModuleSpec, tgt: &ModuleSpec) -> Result<Vec<QMat>, IntError> {
    if src.twist != tgt.twist {
        return Err(IntError::Mismatch("recorded scalar twists differ".into()));
    }
    realization_intertwiners(&src.real, &tgt.real)
}

/// Dimension of the self-commutant.
pub fn schur_dimension(m: &ModuleSpec) -> Result<usize, IntError> {
    Ok(solve_commutant(m, m)?.len())
}

/// `M ⊕ N` realized block-diagonally.
pub fn direct_sum(a: &ModuleSpec, b: &ModuleSpec) -> Result<ModuleSpec, IntError> {
    if a.real.n != b.real.n {
        return Err(IntError::Mismatch("different n".into()));
    }
    let (da, db) = (a.real.d, b.real.d);
    let inc = |d: usize, off: usize| SpMat::from_triplets(da + db, d, (0..d).map(|k| (k + off, k, Q::ONE)));
    let (ia, ib) = (inc(da, 0), inc(db, da));
    let entries = a
        .real
        .entries()
        .iter()
        .zip(b.real.entries())
        .map(|(x, y)| x.lmul_const(&ia).rmul_const(&ia.transpose()).add(&y.lmul_const(&ib).rmul_const(&ib.transpose())))
        .collect();
    let real = Realization::new(a.real.n, da + db, a.real.flavor, a.real.pairing.clone(), entries, format!("{} + {}", a.real.label, b.real.label));
    let mut out = ModuleSpec::new(real, a.params.clone());
    out.twist = a.twist.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::q;
    use fock::Case;
    use modules::{siverma_model, verma_model};
    use weyl::SignedPerm;

    fn lam(mu: &[Q], nu: &[i64]) -> Vec<Q> {
        mu.iter().zip(nu).map(|(x, v)| &(x + &Q::ONE) - &Q::int(*v)).collect()
    }

    #[test]
    fn schur_dimensions() {
        let mu = [q(5, 7), q(2, 11)];
        for case in [Case::Symp, Case::Orth] {
            let v = verma_model(&mu, &lam(&mu, &[1, 1]), case, 2).unwrap();
            assert_eq!(schur_dimension(&v).unwrap(), 1);
            assert_eq!(schur_dimension(&direct_sum(&v, &v).unwrap()).unwrap(), 4);
        }
    }

    #[test]
    fn verma_to_first_letter() {
        let mu = [q(5, 7), q(2, 11)];
        let la = lam(&mu, &[2, 1]);
        let v = verma_model(&mu, &la, Case::Symp, 2).unwrap();
        let w = siverma_model(&mu, &la, &SignedPerm::generator(1, 2).unwrap(), Case::Symp, 2).unwrap();
        let b = solve_commutant(&v, &w).unwrap();
        assert_eq!(b.len(), 1);
        for (x, y) in v.real.entries().iter().zip(w.real.entries()) {
            let phi = exactcore::RatMat::constant(SpMat::from_dense(&b[0]));
            assert!(phi.mul(x).sub(&y.mul(&phi)).is_zero());
        }
    }
}
