//! Natural and `ρ`-shifted actions of signed permutations on weights.

use crate::perm::SignedPerm;
use exactcore::Q;
use liealg::{rho, Case, Weight};

/// `σ(μ) = Σ μ_c ε_{σ(c)}`.
pub fn natural_action(sigma: &SignedPerm, mu: &Weight) -> Weight {
    let mut out = vec![Q::ZERO; mu.m()];
    for (k, x) in mu.labels.iter().enumerate() {
        let t = sigma.apply(k as i64 + 1);
        let v = if t > 0 { x.clone() } else { -x };
        out[t.unsigned_abs() as usize - 1] = v;
    }
    Weight::new(out)
}

/// `σ ∘ μ = σ(μ + ρ) − ρ`.
pub fn shifted_action(sigma: &SignedPerm, mu: &Weight, case: Case) -> Weight {
    let r = rho(case, mu.m());
    natural_action(sigma, &mu.add(&r)).sub(&r)
}
