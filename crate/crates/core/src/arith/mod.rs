//! Scalars, polynomials and matrices.

pub mod cyclotomic;
pub mod field;
pub mod mat;
pub mod poly;
pub mod rational;
pub mod sparse;

pub use cyclotomic::Cyclotomic;
pub use field::{Backend, Coeff, Field, Tol};
pub use mat::Mat;
pub use num_complex::Complex64;
pub use poly::Poly;
pub use rational::Rational;
pub use sparse::SparseMat;
