//! Intertwining operators between module realizations, Schur dimensions, the `z_η`
//! multipliers and the normalized step-by-step intertwiners along reduced words.

pub mod isis;
pub mod solve;
pub mod zeta;

pub use isis::{highest_vector, model_factors, target_vector, verify_isis, verify_word, IsisReport, StepReport, WordReport};
pub use solve::{direct_sum, schur_dimension, solve_commutant};
pub use zeta::{h_for_root, block_factor, predicted_multiplier, shifted_data, z_eta, FactorKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntError {
    #[error(transparent)]
    Mod(#[from] modules::ModError),
    #[error(transparent)]
    Exact(#[from] exactcore::ExactError),
    #[error(transparent)]
    Lie(#[from] liealg::LieError),
    #[error(transparent)]
    Weyl(#[from] weyl::WeylError),
    #[error(transparent)]
    Fock(#[from] fock::FockError),
    #[error("non-generic parameters: {0}")]
    Genericity(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("elementary commutant for letter {letter} has dimension {dim}")]
    Irreducibility { letter: usize, dim: usize },
    #[error("image of the highest vector is not parallel to the target for letter {0}")]
    NotParallel(usize),
    #[error("explicit map for letter {0} does not intertwine")]
    ExplicitMap(usize),
}
