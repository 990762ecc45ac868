//! Constructions on finite quantum automorphism groups, verified exactly over
//! cyclotomic fields or numerically in double precision.

pub mod algebra;
pub mod arith;
pub mod check;
pub mod cocycle;
pub mod crossed;
pub mod pauli;
pub mod qaut;

pub use check::CheckReport;
