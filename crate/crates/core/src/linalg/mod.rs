//! Exact dense linear algebra over a [`Field`](crate::field::Field).

mod matrix;
mod subspace;

pub use matrix::{kron, rref, solve, Matrix, Solution};
pub use subspace::{common_kernel, Subspace};
