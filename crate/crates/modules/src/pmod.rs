//! The modules `P_z`, `P′_z` on `G(C^n)` and their degree blocks.

use crate::{ratio, ModError, ModuleSpec, Params};
use exactcore::{RatMat, Q};
use fock::{FockSpace, GenMap, PairingData};
use liealg::GlRep;
use serde::Serialize;
use yangian::{conjugate, eval_hom, scalar_twist, tau_shift, twist_auto, Flavor, Realization};

/// `T_{ij}(u) = δ_{ij} + x_i ∂_j / (u + z)` on `G(C^n)`.
pub fn p_module(n: usize, z: &Q, pr: Option<&PairingData>) -> ModuleSpec {
    let f = FockSpace::new(1, n);
    let g = GlRep::from_fn(n, f.dim(), |i, j| f.creation(1, i).unwrap().mul(&f.annihilation(1, j).unwrap()));
    let mut t = tau_shift(&eval_hom(&g), &-z).unwrap().relabel(format!("P_{z}"));
    t.pairing = pr.cloned();
    ModuleSpec::new(t, Params { z: vec![z.clone()], ..Params::default() })
}

/// `T_{ij}(u) = δ_{ij} − θ_iθ_j x_{j̃} ∂_{ĩ} / (u − z)`, the pullback of `P_z` through `T(u) ↦ T′(−u)`.
pub fn p_prime_module(n: usize, z: &Q, pr: &PairingData) -> Result<ModuleSpec, ModError> {
    let p = p_module(n, z, Some(pr));
    let t = twist_auto(&p.real)?.relabel(format!("P'_{z}"));
    Ok(ModuleSpec::new(t, p.params))
}

/// Basis indices of `G(C^n)` of degree `k`, in increasing order.
pub fn degree_indices(n: usize, k: usize) -> Vec<usize> {
    (0..1usize << n).filter(|b| b.count_ones() as usize == k).collect()
}

/// Restriction of a module on `G(C^n)` to the degree-`|N|` block.
pub fn degree_submodule(p: &ModuleSpec, n: usize, deg: i64) -> Result<ModuleSpec, ModError> {
    if deg.unsigned_abs() as usize > n {
        return Err(ModError::Degree(deg, n));
    }
    let idx = degree_indices(n, deg.unsigned_abs() as usize);
    let real = p.real.map(&format!("{}[{deg}]", p.real.label), |e| e.select(&idx, &idx));
    let mut params = p.params.clone();
    params.nu = vec![deg];
    Ok(ModuleSpec::new(real, params))
}

/// `P_z^N` for `N ≥ 0` and the degree-`|N|` block of `P′_z` for `N < 0`.
pub fn p_block(n: usize, z: &Q, deg: i64, pr: &PairingData) -> Result<ModuleSpec, ModError> {
    let full = if deg >= 0 { p_module(n, z, Some(pr)) } else { p_prime_module(n, z, pr)? };
    degree_submodule(&full, n, deg)
}

#[derive(Clone, Debug, Serialize)]
pub struct PplReport {
    pub full: bool,
    pub blocks: Vec<(usize, bool)>,
}

impl PplReport {
    pub fn pass(&self) -> bool {
        self.full && self.blocks.iter().all(|b| b.1)
    }
}

/// `P′_z` against `P_{−z−1}` pushed through the row flip and multiplied by `(u−z−1)/(u−z)`.
pub fn ppl_check(n: usize, z: &Q, pr: &PairingData) -> Result<PplReport, ModError> {
    let lhs = p_prime_module(n, z, pr)?.real;
    let p = p_module(n, &(-z - &Q::ONE), Some(pr)).real;
    let w = GenMap::row_flip(FockSpace::new(1, n), 1, pr).conjugator();
    let pushed = conjugate(&p, &w, &w.transpose());
    let rhs = scalar_twist(&pushed, &ratio(-z - &Q::ONE, -z))?;
    let blocks = (0..=n)
        .map(|k| {
            let idx = degree_indices(n, k);
            let sel = |x: &Realization| x.map("", |e: &RatMat| e.select(&idx, &idx));
            (k, sel(&lhs).same_entries(&sel(&rhs)))
        })
        .collect();
    Ok(PplReport { full: lhs.same_entries(&rhs), blocks })
}

/// The trivial one-dimensional `T`-module.
pub fn trivial_t(n: usize) -> Realization {
    Realization::identity(n, 1, Flavor::T, None)
}
