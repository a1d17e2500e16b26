//! Exact dense linear algebra over [`Field`](crate::field::Field)s.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::Subspace;
