//! k-symplectic structures: spans of two-forms whose degenerate members form
//! a quadric with constant kernel dimension.
//!
//! The pipeline: a [`TwoFormSpan`] on a `4n`-dimensional space yields a
//! degree-`2n` Pfaffian polynomial ([`pfaffian_polynomial`]); when that
//! polynomial is a perfect `n`-th power of a quadratic form
//! ([`extract_quadric`]), every degenerate form in the span has rank exactly
//! `2n` and the span is k-symplectic ([`verify_ksymplectic`]). A verified
//! span induces a Clifford module on the underlying space
//! ([`clifford_action`]), which forces the dimension bound
//! [`dimension_bound`].

mod action;
mod extract;
#[cfg(test)]
pub(crate) mod fixtures;
mod pfaffian_poly;
mod sampling;
mod span;
mod verify;

pub use action::{clifford_action, select_omega1};
pub use extract::{extract_quadric, Normalization, QuadraticFormOnSpan};
pub use pfaffian_poly::pfaffian_polynomial;
pub use sampling::{diagonalize_congruence, radical_directions, sample_null_forms, NullSample};
pub use span::{SpanError, TwoFormSpan};
pub use verify::{
    real_signature, verify_ksymplectic, verify_ksymplectic_with, KSymplecticReport, VerifyOptions,
    VerifyScalar, Witness,
};

use crate::linalg::{rank, LinalgError, Mat};
use crate::scalar::Scalar;
use thiserror::Error;

/// Errors from k-symplectic operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KsymplecticError {
    /// The underlying space must have dimension divisible by four.
    #[error("space dimension {0} is not a multiple of 4")]
    DimensionNotMultipleOf4(usize),
    /// The polynomial is not `c·qⁿ` for any quadratic form `q`; when the
    /// linear stage produced a candidate, the exponent of a coefficient that
    /// breaks the identity is recorded.
    #[error("polynomial is not a perfect n-th power of a quadratic form")]
    NotAPower { witness_exponent: Option<Vec<u16>> },
    /// More than one candidate quadratic factor (possible only through float
    /// rank misjudgment; exact inputs with a nonzero polynomial always have
    /// at most one factor direction).
    #[error("quadratic factor is ambiguous: nullspace dimension {nullspace_dim}")]
    AmbiguousFactor { nullspace_dim: usize },
    /// The chosen pivot form has `q(ω₁,ω₁) = 0`.
    #[error("pivot form is null for q")]
    DegenerateOmega1,
    /// A matrix that must be invertible is not.
    #[error("matrix is singular")]
    NonInvertible,
    /// A real-structure operation was applied to a span without one.
    #[error("span does not carry a real structure")]
    NotReal,
    /// The coefficient matrix of a substructure does not have full row rank.
    #[error("coefficient matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    /// The input form is degenerate where a nondegenerate one is required.
    #[error("input form is degenerate")]
    DegenerateInput,
    /// A span-level invariant failed while building a derived span.
    #[error(transparent)]
    Span(#[from] SpanError),
    /// A linear-algebra kernel rejected its input.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Lower bound `2^{⌊(k−1)/2⌋}` on the complex dimension of a space carrying
/// a k-symplectic structure, per the induced Clifford-module structure.
pub fn dimension_bound(k: usize) -> u128 {
    assert!(k >= 1, "need at least a 1-dimensional span");
    1u128 << ((k - 1) / 2)
}

/// The sub-span whose basis forms are the rows of `coeff_matrix` in the
/// coordinates of `span`'s basis.
///
/// A substructure of a nondegenerate k-symplectic structure can itself be
/// degenerate — restricting to an isotropic subspace of `q` produces spans
/// of everywhere-degenerate forms — so callers should re-verify the result.
pub fn substructure<S: Scalar>(
    span: &TwoFormSpan<S>,
    coeff_matrix: &Mat<S>,
) -> Result<TwoFormSpan<S>, KsymplecticError> {
    let rows = coeff_matrix.rows();
    assert_eq!(
        coeff_matrix.cols(),
        span.k(),
        "coefficient matrix must have one column per basis form"
    );
    let r = rank(coeff_matrix);
    if r != rows {
        return Err(KsymplecticError::RankDeficient { rank: r, rows });
    }
    let basis: Vec<Mat<S>> = (0..rows)
        .map(|i| span.combine(coeff_matrix.row(i)))
        .collect();
    Ok(TwoFormSpan::new(basis, span.real_structure())?)
}

/// The two-dimensional span `{ω⊕0, 0⊕ω}` on `W ⊕ W` built from a
/// nondegenerate antisymmetric form on `W`. Its quadratic form has rank 2
/// with exactly two null lines, whose forms have kernels `W⊕0` and `0⊕W`.
pub fn direct_sum_2symplectic<S: Scalar>(
    omega: &Mat<S>,
) -> Result<TwoFormSpan<S>, KsymplecticError> {
    let w = omega.rows();
    if !omega.is_antisymmetric() {
        return Err(KsymplecticError::DegenerateInput);
    }
    if rank(omega) != w {
        return Err(KsymplecticError::DegenerateInput);
    }
    let zero = Mat::zeros(w, w);
    let first = omega.direct_sum(&zero);
    let second = zero.direct_sum(omega);
    Ok(TwoFormSpan::new(vec![first, second], true)?)
}
