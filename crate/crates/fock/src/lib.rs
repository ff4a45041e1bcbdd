//! Fermionic Fock space `G(C^m ⊗ C^n)` with exact Clifford generators.

pub mod genmap;
pub mod pairing;
pub mod space;

pub use genmap::{Gen, GenMap};
pub use pairing::{Case, PairingData};
pub use space::FockSpace;

use exactcore::SpMat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FockError {
    #[error("index ({a},{i}) outside 1..={m} x 1..={n}")]
    Index { a: usize, i: usize, m: usize, n: usize },
    #[error("signed row index must be nonzero")]
    ZeroRow,
    #[error("degree {0} exceeds n = {1}")]
    Degree(usize, usize),
    #[error("sequence has length {0}, expected {1}")]
    Length(usize, usize),
    #[error("symplectic form needs even dimension, got {0}")]
    OddSymplectic(usize),
    #[error("unknown case {0:?}")]
    BadCase(String),
}

/// Operator matrix as sparse `(row, col, value)` triplets.
pub fn to_triplets_json(m: &SpMat) -> serde_json::Value {
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.triplets().map(|(i, j, v)| serde_json::json!([i, j, v.to_string()])).collect::<Vec<_>>(),
    })
}
