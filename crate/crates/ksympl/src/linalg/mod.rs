//! Field-generic dense linear algebra: rank, kernel, signature, Pfaffian,
//! characteristic polynomials and homogeneous multivariate polynomials.

mod charpoly;
mod elim;
mod matrix;
mod pfaffian;
mod poly;
mod signature;

pub use charpoly::{charpoly, eval_poly};
pub use elim::{det, inverse, rank, rank_kernel, rref, solve_square, Rref};
pub use matrix::Mat;
pub use pfaffian::{pfaffian, pfaffian_combinatorial, pfaffian_elimination};
pub use poly::{exponents_of_degree, multinomial, HomogeneousPoly};
pub use signature::signature;

use thiserror::Error;

/// Errors from the linear-algebra kernels.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// The input to a symmetric-only operation is not symmetric.
    #[error("matrix is not symmetric")]
    NonSymmetric,
    /// Pfaffians need even dimension.
    #[error("pfaffian requires even dimension, got {0}")]
    OddDimension(usize),
    /// A solve or inverse met a singular matrix.
    #[error("matrix is not invertible")]
    NonInvertible,
}
