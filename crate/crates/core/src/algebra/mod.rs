//! Finite-dimensional *-algebras given by structure constants.

mod blocks;
mod blockspec;
mod delta;
mod structalg;
pub mod text;

pub use blocks::{
    center, charpoly, recognize_blocks, BlockClass, BlockDecomposition, RecognitionMethod,
    EXACT_RECOGNITION_MAX_DIM,
};
pub use blockspec::{BlockSpec, BlockSpecError};
pub use delta::delta_form_check;
pub use structalg::{function_algebra, multimatrix, Sparse, StructAlgebra, EXHAUSTIVE_DIM};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("involution is not involutive on basis element {0}")]
    NotInvolutive(usize),
    #[error("involution is not antimultiplicative on basis pair ({0}, {1})")]
    NotAntimultiplicative(usize, usize),
    #[error("unit does not act as identity on basis element {0}")]
    NotUnital(usize),
    #[error("trace is not tracial on basis pair ({0}, {1})")]
    NotTracial(usize, usize),
    #[error("state is not faithful (Gram matrix not positive definite)")]
    NotFaithful,
    #[error("m∘m* is not scalar (residual {residual:e})")]
    NotDeltaForm { residual: f64 },
    #[error("algebra is not semisimple (degenerate trace form)")]
    NotSemisimple,
    #[error("block of dimension {0} is not a perfect square")]
    NonSquareBlock(usize),
    #[error("block recognition failed: {0}")]
    RecognitionFailed(String),
    #[error("cannot parse line `{0}`")]
    Parse(String),
}
