//! The hyperoctahedral group `H_m`: signed permutations, reduced words,
//! inversion sets and the braid group actions used for intertwiners.

pub mod braid;
pub mod perm;
pub mod weights;

pub use braid::{braid_on_clifford, braid_on_fm, letter_on_clifford, letter_on_fm};
pub use perm::{counted_letters, reduced_word, reduced_words, second_reduced_word, word_to_perm, BraidWord, DeltaSeq, SignedPerm};
pub use weights::{natural_action, shifted_action};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("letter {0} out of range for m = {1}")]
    Letter(usize, usize),
    #[error("{0:?} is not a signed permutation")]
    NotPerm(Vec<i64>),
    #[error("delta entries must be ±1")]
    Delta,
}
