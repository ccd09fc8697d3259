//! Spans of antisymmetric two-forms on a finite-dimensional space.

use crate::linalg::{rank, Mat};
use crate::scalar::Scalar;
use thiserror::Error;

/// Errors raised while validating a span of two-forms.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpanError {
    /// A span needs at least one basis form.
    #[error("span has no basis forms")]
    Empty,
    /// All basis forms must be square matrices of one common dimension.
    #[error("basis form {index} has shape {rows}x{cols}, expected {expected}x{expected}")]
    ShapeMismatch {
        index: usize,
        rows: usize,
        cols: usize,
        expected: usize,
    },
    /// Every basis form must be antisymmetric.
    #[error("basis form {index} is not antisymmetric")]
    NotAntisymmetric { index: usize },
    /// The basis forms must be linearly independent.
    #[error("basis forms are linearly dependent (rank {rank} < {k})")]
    DependentBasis { rank: usize, k: usize },
}

/// A `k`-dimensional space of antisymmetric bilinear forms on a space `V`,
/// given by `k` linearly independent antisymmetric matrices.
///
/// `real_structure` marks the span as (the complexification of) a real span,
/// enabling signature reporting on the extracted quadratic form.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoFormSpan<S> {
    dim_v: usize,
    basis: Vec<Mat<S>>,
    real_structure: bool,
}

impl<S: Scalar> TwoFormSpan<S> {
    /// Validates shapes, antisymmetry and linear independence.
    pub fn new(basis: Vec<Mat<S>>, real_structure: bool) -> Result<Self, SpanError> {
        let first = basis.first().ok_or(SpanError::Empty)?;
        let dim_v = first.rows();
        for (index, m) in basis.iter().enumerate() {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(SpanError::ShapeMismatch {
                    index,
                    rows: m.rows(),
                    cols: m.cols(),
                    expected: dim_v,
                });
            }
            if !m.is_antisymmetric() {
                return Err(SpanError::NotAntisymmetric { index });
            }
        }
        // Independence: stack the flattened forms as rows and take the rank.
        let k = basis.len();
        let flat = Mat::from_fn(k, dim_v * dim_v, |i, j| {
            basis[i][(j / dim_v, j % dim_v)].clone()
        });
        let r = rank(&flat);
        if r < k {
            return Err(SpanError::DependentBasis { rank: r, k });
        }
        Ok(TwoFormSpan {
            dim_v,
            basis,
            real_structure,
        })
    }

    /// Dimension of the underlying space `V`.
    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// Dimension `k` of the span.
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat<S>] {
        &self.basis
    }

    pub fn real_structure(&self) -> bool {
        self.real_structure
    }

    /// The form with the given coordinates in the span basis.
    pub fn combine(&self, coeffs: &[S]) -> Mat<S> {
        assert_eq!(coeffs.len(), self.k(), "coefficient count mismatch");
        let mut acc = Mat::zeros(self.dim_v, self.dim_v);
        for (c, m) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&m.scalar_mul(c));
            }
        }
        acc
    }

    /// Converts entries into another scalar type (e.g. complexification).
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> TwoFormSpan<T> {
        TwoFormSpan {
            dim_v: self.dim_v,
            basis: self.basis.iter().map(|m| m.convert(f)).collect(),
            real_structure: self.real_structure,
        }
    }
}
