//! The centralizer realization `γ_l` of `X(g_n)` on `G(C^m ⊗ C^{n+l})` and its comparison with `β_m`.

use crate::beta::beta_from;
use crate::{ratio, ModError, ModuleSpec, Params};
use exactcore::{resolvent, RatFunc, RatMat, SpMat, Q};
use fock::{Case, FockSpace, PairingData};
use liealg::{gn_fock_rep, zeta, FmData};
use serde::Serialize;
use yangian::{omega_n, pi_n, scalar_twist, Flavor, Realization};

fn glued(case: Case, n: usize, l: usize) -> Result<PairingData, ModError> {
    Ok(if l == 0 { PairingData::new(case, n)? } else { PairingData::glued(case, &[n, l])? })
}

fn guard(case: Case, n: usize, l: usize) -> Result<(), ModError> {
    if case == Case::Symp && (n % 2 == 1 || l % 2 == 1) {
        return Err(ModError::Invalid(format!("symplectic case needs n and l even, got n = {n}, l = {l}")));
    }
    Ok(())
}

/// The `(n+l) × (n+l)` matrix `δ_{ij} + (u − l/2 ± 1/2)^{-1} Σ_c (x_{ci} ∂_{cj} − θ_iθ_j x_{cj̃} ∂_{cĩ})`.
pub fn full_matrix(m: usize, n: usize, l: usize, case: Case) -> Result<Realization, ModError> {
    guard(case, n, l)?;
    let pr = glued(case, n, l)?;
    let fock = FockSpace::new(m, n + l);
    let p = pi_n(&pr, &gn_fock_rep(fock, &pr));
    Ok(p.map("gamma_full", |e| e.shift(&Q::new(l as i64, 2))))
}

/// `γ_l(S(u))`: the Schur complement `A − B D^{-1} C` of the full matrix.
pub fn olshanski_gamma(m: usize, n: usize, l: usize, case: Case) -> Result<ModuleSpec, ModError> {
    let full = full_matrix(m, n, l, case)?;
    let pr = PairingData::new(case, n)?;
    let blk = |r0: usize, c0: usize, nr: usize, nc: usize| {
        let bl: Vec<RatMat> = (r0..r0 + nr).flat_map(|i| (c0..c0 + nc).map(move |j| (i, j))).map(|(i, j)| full.entry(i, j).clone()).collect();
        RatMat::from_blocks(nr, nc, &bl)
    };
    let a = blk(1, 1, n, n);
    let s = if l == 0 {
        a
    } else {
        let (b, c, dd) = (blk(1, n + 1, n, l), blk(n + 1, 1, l, n), blk(n + 1, n + 1, l, l));
        a.sub(&b.mul(&dd.inverse()?).mul(&c))
    };
    let real = Realization::from_big(&s, n, Flavor::S, Some(pr), format!("gamma_{l}"));
    Ok(ModuleSpec::new(real, Params::default()))
}

/// The same series through `ω_n ∘ (corner) ∘ ω_{n+l}` applied to the `π_{n+l}` image.
pub fn olshanski_compositional(m: usize, n: usize, l: usize, case: Case) -> Result<Realization, ModError> {
    guard(case, n, l)?;
    let prf = glued(case, n, l)?;
    let fock = FockSpace::new(m, n + l);
    let big = omega_n(&pi_n(&prf, &gn_fock_rep(fock, &prf)))?;
    let pr = PairingData::new(case, n)?;
    let corner = Realization::from_fn(n, big.d, Flavor::S, Some(pr), "corner", |i, j| big.entry(i, j).clone());
    Ok(omega_n(&corner)?.relabel(format!("gamma_{l} (composed)")))
}

/// `f(u) = 1 − m (u − l/2 ± 1/2)^{-1}`.
pub fn olshanski_scalar(m: usize, l: usize, case: Case) -> RatFunc {
    let c = Q::new(case.pm() - l as i64, 2);
    ratio(&c - &Q::int(m as i64), c)
}

/// `f(u) β_m(S(u))` with `f_m` acting on `G(C^m ⊗ C^n) ⊗ G(C^m ⊗ C^l)` through `ζ` of the second column block.
pub fn beta_through_block(m: usize, n: usize, l: usize, case: Case) -> Result<Realization, ModError> {
    let pr = glued(case, n, l)?;
    let fm = FmData::new(m, case);
    let fock = FockSpace::new(m, n + l);
    let d = fock.dim();
    let idx = fm.indices();
    let mut blocks = vec![];
    for &a in &idx {
        for &b in &idx {
            blocks.push(if l == 0 { SpMat::zeros(d, d) } else { zeta(a, b, fock, &pr, 1)?.neg() });
        }
    }
    let shift = Q::new(case.pm(), 2) - Q::int(m as i64);
    let r = resolvent(&SpMat::from_blocks(idx.len(), idx.len(), &blocks), &shift);
    let mut pq = std::collections::HashMap::new();
    for &c in &idx {
        for &e in &idx {
            for i in 1..=n {
                for j in 1..=n {
                    pq.insert((c, e, i, j), fock.p(c, i, &pr)?.mul(&fock.q(e, j, &pr)?));
                }
            }
        }
    }
    let npr = PairingData::new(case, n)?;
    let b = beta_from(n, d, &npr, fm, "beta (column block)", |c, e, i, j| r.block(fm.pos(c), fm.pos(e), d).rmul_const(&pq[&(c, e, i, j)]));
    Ok(scalar_twist(&b, &olshanski_scalar(m, l, case))?)
}

#[derive(Clone, Debug, Serialize)]
pub struct OlshanskiReport {
    pub routes_agree: bool,
    pub defect: Vec<(usize, usize)>,
    pub dim: usize,
}

impl OlshanskiReport {
    pub fn pass(&self) -> bool {
        self.routes_agree && self.defect.is_empty()
    }
}

/// Both routes for `γ_l` agree, and `γ_l` equals the twisted `β_m` entry by entry.
pub fn olshanski_check(m: usize, n: usize, l: usize, case: Case) -> Result<OlshanskiReport, ModError> {
    let g = olshanski_gamma(m, n, l, case)?.real;
    let comp = olshanski_compositional(m, n, l, case)?;
    let b = beta_through_block(m, n, l, case)?;
    Ok(OlshanskiReport { routes_agree: g.same_entries(&comp), defect: g.defect(&b), dim: g.d })
}
