//! Exact realizations of the Yangian `Y(gl_n)` and the extended twisted Yangian
//! `X(g_n)` as matrices of operator-valued rational functions.

pub mod checks;
pub mod realization;
pub mod rmatrix;

pub use checks::{check_o_properties, check_reflection, check_rtt, check_symmetry, compute_o, CheckReport, Defect};
pub use realization::{
    coaction, conjugate, coproduct, eval_hom, matrix_inverse, omega_n, pad, pi_n, scalar_twist, sym_from_t, tau_shift, tin, transpose_prime,
    twist_auto, Flavor, Realization,
};
pub use rmatrix::{check_unitarity, check_unitarity_prime, r_matrix, r_prime};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum YangError {
    #[error(transparent)]
    Exact(#[from] exactcore::ExactError),
    #[error("realization carries no pairing")]
    NoPairing,
    #[error("expected flavor {0:?}")]
    Flavor(Flavor),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("scalar twist must tend to 1 at infinity")]
    Twist,
    #[error("central series: {0}")]
    NotCentral(String),
}

/// `{ "n", "d", "flavor", "label", "entries": [{ "i", "j", "den", "num": [[row, col, coeffs]] }] }`.
pub fn realization_json(x: &Realization) -> serde_json::Value {
    let mut entries = vec![];
    for i in 1..=x.n {
        for j in 1..=x.n {
            let e = x.entry(i, j);
            if e.is_zero() {
                continue;
            }
            let num: Vec<_> = e.entry_polys().into_iter().map(|((r, c), p)| serde_json::json!([r, c, p])).collect();
            entries.push(serde_json::json!({ "i": i, "j": j, "den": e.den(), "num": num }));
        }
    }
    serde_json::json!({ "n": x.n, "d": x.d, "flavor": x.flavor, "label": x.label, "entries": entries })
}
