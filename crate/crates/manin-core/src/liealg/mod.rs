//! Exact Lie algebra constructions: scalars, matrices, root systems,
//! Chevalley bases and subspace linear algebra.

pub mod algebra;
pub mod cartan;
pub mod matrix;
pub mod roots;
pub mod scalar;
pub mod subspace;
