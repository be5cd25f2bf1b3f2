//! Exact scalars, vectors, matrices, canonical subspaces and polynomials.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use matrix::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
pub use poly::Poly;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use subspace::{Combine, RowReducer, Subspace};
