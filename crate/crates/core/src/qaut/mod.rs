//! Generator presentations of `O(Aut⁺(B))` and `O(S_N⁺)`, their concrete
//! representations, the homomorphisms `π` and `ρ` over formal symbols, and
//! the covariance checks for the `α`/`β` actions.

mod autos;
mod classical;
mod covariance;
mod formal;
mod haar;
mod maps;
mod pvm;
mod relations;
mod shuffle;
mod strict;
mod symbols;

pub use autos::{
    alpha, beta, commute, has_order, preserves_relations, BetaConvention, PreservationReport,
    Substitution,
};
pub use classical::{
    automorphism_battery, block_permutation, classical_assignment_aut, counit_assignment,
    inner_automorphism, is_block_preserving, permutation_assignment, quantum_magic_unitary,
    random_permutation, seeded_rng, verify_automorphism,
};
pub use covariance::{covariance_check, CovarianceCertificate};
pub use formal::{FormalTensor, Word};
pub use haar::{
    coproduct, evaluate_coproduct, haar_compat_check, HaarCertificate, HaarMatch, HaarPair,
};
pub use maps::{
    big_q, pi_map, rho_map, rho_map_conjugated, substitute_q, substitute_u, z_image, ParenUnits,
};
pub use pvm::{pvm_family, uet_pvm, PvmCertificate};
pub use relations::{check_magic_unitary, check_relations, GeneratorAssignment, RelationReport};
pub use shuffle::{rearranged_q_check, ShuffleCertificate, ShufflePair, LAYOUT, SHUFFLE_LEGS};
pub use strict::{strict_pi_check, StrictOutcome, StrictReport};
pub use symbols::{Point, QGen, QautPresentation, SnPresentation, Symbol, UGen};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::pauli::PauliError;

#[derive(Debug, Error)]
pub enum QautError {
    #[error("assignment has {got} matrices, presentation has {expected} generators")]
    IncompleteAssignment { expected: usize, got: usize },
    #[error("matrix sizes do not agree")]
    SizeMismatch,
    #[error("not a *-automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphism does not preserve the Plancherel trace")]
    NotTracePreserving,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("substitution at {0} is not a scalar multiple of the identity")]
    NotScalar(String),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
