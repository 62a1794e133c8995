//! Structured matrix families and the polynomial systems cut out of their
//! characteristic polynomials.
//!
//! The central object is the truncated Hurwitz matrix of a degree-m
//! coefficient vector: the (m-1)x(m-1) matrix with (i,j) entry a_{2j-i}.
//! Its characteristic polynomial coefficients D(m,i) define the projective
//! schemes studied by the rest of the workspace. The same machinery covers
//! the t-deformed Carlitz matrices (coefficients H_{ij,n}), the Sylvester
//! resultant cross-check, and the odd block matrices over P^1 x P^alpha.

mod carlitz;
mod coeffs;
mod hurwitz;
mod odd;
mod sylvester;
mod systems;

pub use carlitz::{carlitz_matrix, carlitz_matrix_symbolic};
pub use coeffs::CoeffVector;
pub use hurwitz::{hurwitz_matrix, hurwitz_matrix_at, hurwitz_vars};
pub use odd::{odd_blocks, odd_matrix};
pub use sylvester::{sylvester_matrix, sylvester_resultant_check, ResultantReport};
pub use systems::{d_odd_system, d_system, h_system, DSystem, HSystem};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixFamilyError {
    #[error("degree m must be at least 2, got {0} (the matrix family is empty)")]
    EmptyVariety(usize),
    #[error("only q = 2 is supported, got {0}")]
    UnsupportedBase(u32),
    #[error("negative or invalid size: {0}")]
    BadSize(String),
    #[error(transparent)]
    Arith(#[from] atlas_arith::ArithError),
}
