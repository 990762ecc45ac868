//! Finite abelian groups, 2-cocycles, graded algebras and cocycle twists.

#[allow(clippy::module_inception)]
mod cocycle;
mod graded;
mod group;
mod theorem;

pub use cocycle::{
    base_cocycle, normalize_inverse_pairing, product_cocycle, GroupCocycle, Normalized,
    EXHAUSTIVE_ORDER,
};
pub use graded::{
    dual_group, fourier_function_algebra, fourier_index, group_algebra, GradedAlgebra, Twisted,
};
pub use group::{FinAbGroup, Phase};
pub use theorem::{
    sigma_zero, verify_twist_theorem, PsiEntry, TwistCertificate, BASE_POINT, IDENTIFICATION,
};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CocycleError {
    #[error("cocycle table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("cocycle is not normalized at {0}")]
    NotNormalized(String),
    #[error("cocycle identity fails on {0}")]
    NotACocycle(String),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("basis product is not homogeneous: {0}")]
    NotGraded(String),
    #[error("isomorphism check could not run: {0}")]
    Isomorphism(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
