//! Exact arithmetic in F_p and F_{p^r}, and linear algebra over those fields.

mod field;
mod matrix;
pub mod poly;
pub mod prime;
mod subspace;

pub use field::{find_irreducible, FieldCtx, FieldElem, MAX_DEGREE};
pub use matrix::{intersect, kernel, preimage, rank, rref_in_place, solve, Matrix, Vector};
pub use subspace::Subspace;
