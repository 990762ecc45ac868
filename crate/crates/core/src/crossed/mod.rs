//! Crossed products by finite abelian groups, dual actions, and the
//! conjugation between `A ⋊ Λ` and `_σA ⋊ Λ`.

mod action;
mod conjugation;
mod product;

pub use action::{translation_action, GroupAction};
pub use conjugation::{conjugation_lemma_check, ConjugationCertificate};
pub use product::{
    crossed_product, dual_action, takesaki_takai_check, CrossedProduct, TakesakiTakaiCertificate,
};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CrossedError {
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("group law not respected at {0}")]
    NotAction(String),
    #[error("action of {0} does not preserve the trace")]
    NotTracePreserving(String),
    #[error("automorphism matrices have the wrong shape")]
    Shape,
    #[error("cocycle and grading live on different groups")]
    GroupMismatch,
    #[error("cocycle is not normalized: σ(k, k⁻¹) ≠ 1 at k = {0}")]
    NormalizationMissing(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
