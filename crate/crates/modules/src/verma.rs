//! Finite tensor models `P^{ν_m}_{z_m} ⊗ … ⊗ P^{ν_1}_{z_1}` and their signed-permutation variants.

use crate::pmod::{degree_indices, p_block};
use crate::{ratio, ModError, ModuleSpec, Params};
use exactcore::{RatFunc, SpMat, Q};
use fock::{Case, FockSpace, PairingData};
use liealg::{rho, zeta_n};
use weyl::SignedPerm;
use yangian::{coproduct, sym_from_t, Flavor, Realization};

/// `μ_a − μ_b ∉ Z`, `μ_a + μ_b ∉ Z` for `a < b`, and `2μ_a ∉ Z` in the symplectic case.
pub fn check_genericity(mu: &[Q], case: Case) -> Result<(), ModError> {
    let mut bad = vec![];
    for a in 0..mu.len() {
        for b in a + 1..mu.len() {
            if (&mu[a] - &mu[b]).is_integer() {
                bad.push(format!("mu_{} - mu_{} is an integer", a + 1, b + 1));
            }
            if (&mu[a] + &mu[b]).is_integer() {
                bad.push(format!("mu_{} + mu_{} is an integer", a + 1, b + 1));
            }
        }
        if case == Case::Symp && (&mu[a] + &mu[a]).is_integer() {
            bad.push(format!("2 mu_{} is an integer", a + 1));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(ModError::NonGeneric(bad.join("; ")))
    }
}

/// `ν_a = n/2 + μ_a − λ_a`; `None` when some `ν_a` is not an integer in `0..=n`.
pub fn nu_degrees(mu: &[Q], lambda: &[Q], n: usize) -> Result<Option<Vec<i64>>, ModError> {
    if mu.len() != lambda.len() {
        return Err(ModError::Invalid(format!("mu has {} labels, lambda has {}", mu.len(), lambda.len())));
    }
    let mut out = vec![];
    for (a, b) in mu.iter().zip(lambda) {
        let v = Q::new(n as i64, 2) + a - b;
        match v.to_i64().filter(|x| (0..=n as i64).contains(x) && v.is_integer()) {
            Some(x) => out.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// `∏_a (u − μ_a + 1/2 − ρ_a)/(u − μ_a − 1/2 − ρ_a)`.
pub fn muprod(mu: &[Q], case: Case) -> RatFunc {
    let r = rho(case, mu.len()).labels;
    mu.iter().zip(&r).fold(RatFunc::one(), |acc, (x, y)| {
        let c = -x - y;
        &acc * &ratio(&c + &Q::new(1, 2), &c - &Q::new(1, 2))
    })
}

/// `sym_from_t` of the coproduct of the given `(signed degree, z)` factors, left to right.
fn tensor_model(factors: &[(i64, Q)], n: usize, pr: &PairingData) -> Result<Realization, ModError> {
    let mut t: Option<Realization> = None;
    for (deg, z) in factors {
        let b = p_block(n, z, *deg, pr)?.real;
        t = Some(match t {
            None => b,
            Some(acc) => coproduct(&acc, &b)?,
        });
    }
    let t = t.unwrap_or_else(|| Realization::identity(n, 1, Flavor::T, None));
    Ok(sym_from_t(&t, pr)?)
}

fn zero_spec(n: usize, case: Case, params: Params) -> Result<ModuleSpec, ModError> {
    let pr = PairingData::new(case, n)?;
    let real = Realization::identity(n, 0, Flavor::S, Some(pr)).relabel("zero");
    Ok(ModuleSpec { real, grading: None, params, twist: None, zero: true })
}

/// Model of `σ`: factor `a = m, …, 1` is `P^{δ_a ν̃_a}_{μ̃_a − 1/2 + ρ̃_a}` with tildes meaning evaluation at `|σ^{-1}(a)|`.
pub fn siverma_model(mu: &[Q], lambda: &[Q], sigma: &SignedPerm, case: Case, n: usize) -> Result<ModuleSpec, ModError> {
    check_genericity(mu, case)?;
    let m = mu.len();
    if sigma.m() != m {
        return Err(ModError::Invalid(format!("signed permutation of {} letters for {m} labels", sigma.m())));
    }
    let pr = PairingData::new(case, n)?;
    let r = rho(case, m).labels;
    let delta = sigma.delta().as_slice().to_vec();
    let mut params = Params { mu: mu.to_vec(), lambda: lambda.to_vec(), delta: delta.clone(), ..Params::default() };
    let Some(nu) = nu_degrees(mu, lambda, n)? else {
        return zero_spec(n, case, params);
    };
    params.nu = nu.clone();
    let inv = sigma.inverse();
    let mut factors = vec![];
    for a in (1..=m).rev() {
        let s = inv.apply(a as i64).unsigned_abs() as usize - 1;
        let z = &(&mu[s] - &Q::new(1, 2)) + &r[s];
        factors.push((delta[a - 1] * nu[s], z));
    }
    params.z = factors.iter().map(|f| f.1.clone()).collect();
    params.factors = factors.iter().map(|f| f.0).collect();
    let real = tensor_model(&factors, n, &pr)?.relabel(format!("model{:?}", sigma.images()));
    let mut spec = ModuleSpec::new(real, params);
    spec.twist = Some(muprod(mu, case));
    if sigma.is_identity() {
        spec.grading = Some(grading(&spec, n));
    }
    Ok(spec)
}

/// `P^{ν_m}_{μ_m − 1/2 + ρ_m} ⊗ … ⊗ P^{ν_1}_{μ_1 − 1/2 + ρ_1}`.
pub fn verma_model(mu: &[Q], lambda: &[Q], case: Case, n: usize) -> Result<ModuleSpec, ModError> {
    siverma_model(mu, lambda, &SignedPerm::identity(mu.len()), case, n)
}

/// Fock basis index of each model basis vector; factor `r` (left to right) is row `r`.
pub fn model_to_fock(factors: &[i64], n: usize) -> Vec<usize> {
    let mut out = vec![0usize];
    for (r, deg) in factors.iter().enumerate() {
        let idx = degree_indices(n, deg.unsigned_abs() as usize);
        out = out.iter().flat_map(|&b| idx.iter().map(move |&k| b | k << (r * n))).collect();
    }
    out
}

/// Weight labels: `F_{āā}` acts as `−n/2 + deg_a − μ_a`.
fn grading(spec: &ModuleSpec, n: usize) -> Vec<Vec<Q>> {
    let m = spec.params.mu.len();
    let count = model_to_fock(&spec.params.factors, n).len();
    let w: Vec<Q> = (1..=m)
        .map(|a| {
            let deg = spec.params.factors[m - a].unsigned_abs() as i64;
            &(Q::new(-(n as i64), 2) + Q::int(deg)) - &spec.params.mu[a - 1]
        })
        .collect();
    vec![w; count]
}

/// The Cartan operators `ζ_n(F_{āā}) − μ_a` are diagonal on the model basis with the recorded labels.
pub fn grading_check(spec: &ModuleSpec, case: Case, n: usize) -> Result<bool, ModError> {
    let Some(g) = &spec.grading else { return Ok(false) };
    let m = spec.params.mu.len();
    let fock = FockSpace::new(m, n);
    let pr = PairingData::new(case, n)?;
    let basis = model_to_fock(&spec.params.factors, n);
    for a in 1..=m {
        let abar = (m + 1 - a) as i64;
        let h = zeta_n(abar, abar, fock, &pr)?.sub(&SpMat::scalar(fock.dim(), spec.params.mu[a - 1].clone()));
        for (t, &b) in basis.iter().enumerate() {
            let mut e = vec![Q::ZERO; fock.dim()];
            e[b] = Q::ONE;
            let img = h.mul_vec(&e);
            let want: Vec<Q> = e.iter().map(|x| x * &g[t][a - 1]).collect();
            if img != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
