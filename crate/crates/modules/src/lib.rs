//! Constructors for concrete modules over `Y(gl_n)` and `X(g_n)` together with
//! the scalar series `Z(u)`, `W(u)` and `W̃(u)`.

pub mod alpha;
pub mod beta;
pub mod howe;
pub mod olshanski;
pub mod pmod;
pub mod tensor;
pub mod verma;

pub use alpha::{alpha_l, eabact, eep_check, hc_check, z_series, HcReport};
pub use beta::{
    beta_m, beta_tilde, braid_invariance, f_delta, f_series, f_series_check, stu_check, w_series, w_tilde, xact, BetaTilde, FSeriesReport,
};
pub use howe::{howe_commutant_count, howe_dimension_identity, howe_partitions, sp_dim};
pub use olshanski::{beta_through_block, olshanski_compositional, olshanski_gamma, olshanski_scalar, olshanski_check, OlshanskiReport};
pub use pmod::{degree_submodule, ppl_check, p_block, p_module, p_prime_module, PplReport};
pub use tensor::{twisted_tensor, twisted_tensor_actions};
pub use verma::{check_genericity, grading_check, model_to_fock, muprod, nu_degrees, siverma_model, verma_model};

use exactcore::{RatFunc, RatMat, SpMat, Q};
use serde::{Deserialize, Serialize};
use yangian::{realization_json, Realization, YangError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModError {
    #[error(transparent)]
    Yang(#[from] YangError),
    #[error(transparent)]
    Exact(#[from] exactcore::ExactError),
    #[error(transparent)]
    Lie(#[from] liealg::LieError),
    #[error(transparent)]
    Fock(#[from] fock::FockError),
    #[error(transparent)]
    Weyl(#[from] weyl::WeylError),
    #[error("degree {0} out of range for n = {1}")]
    Degree(i64, usize),
    #[error("non-generic parameters: {0}")]
    NonGeneric(String),
    #[error("inconsistent series recursion at order {0}")]
    Recursion(usize),
    #[error("{0}")]
    Invalid(String),
}

/// Parameters a module was built from.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub z: Vec<Q>,
    pub nu: Vec<i64>,
    pub delta: Vec<i64>,
    pub mu: Vec<Q>,
    pub lambda: Vec<Q>,
    /// Signed degrees of the tensor factors, left to right.
    pub factors: Vec<i64>,
}

/// A realization with its parameters, optional weight grading and a recorded, unapplied scalar twist.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub real: Realization,
    pub grading: Option<Vec<Vec<Q>>>,
    pub params: Params,
    pub twist: Option<RatFunc>,
    /// Set when the parameters describe the zero module; `real` is then zero-dimensional.
    pub zero: bool,
}

impl ModuleSpec {
    pub fn new(real: Realization, params: Params) -> Self {
        ModuleSpec { real, grading: None, params, twist: None, zero: false }
    }
    pub fn dim(&self) -> usize {
        self.real.d
    }
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.real.d,
            "zero": self.zero,
            "params": self.params,
            "twist": self.twist.as_ref().map(|f| f.to_string()),
            "grading": self.grading,
            "realization": realization_json(&self.real),
        })
    }
}

/// Every entry commutes with every operator.
pub fn commutes_with(x: &Realization, ops: &[SpMat]) -> bool {
    x.entries().iter().all(|e| ops.iter().all(|a| e.commutator(&RatMat::constant(a.clone())).is_zero()))
}

/// `1/(u + c)`.
pub(crate) fn inv_lin(c: Q) -> RatFunc {
    RatFunc::inv_linear(c)
}

/// `(u + a)/(u + b)`.
pub(crate) fn ratio(a: Q, b: Q) -> RatFunc {
    RatFunc::new(exactcore::UPoly::linear(a), exactcore::UPoly::linear(b)).unwrap()
}
