//! Generalized Pauli matrices, unitary error bases, maximally entangled
//! bases and their block placements.

mod embed;
mod entangled;
mod weyl;

pub use embed::{
    bracket, doubled_dims, doubled_to_md_md, md_md_dims, md_md_to_doubled, paren, BlockPauli,
};
pub use entangled::{entangled_basis, pvm_check, EntangledBasis};
pub use weyl::{
    depolarization_check, is_unitary_error_basis, mat_pow, pauli_x, pauli_z, weyl_basis, WeylBasis,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PauliError {
    #[error("expected {expected} family members, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("not a projection valued measure: {0}")]
    NotPvm(String),
    #[error("slot mismatch: {0}")]
    SlotMismatch(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
}
