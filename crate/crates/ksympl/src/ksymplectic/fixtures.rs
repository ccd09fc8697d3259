//! Shared unit-test fixtures for the k-symplectic modules.

use super::span::TwoFormSpan;
use crate::linalg::Mat;
use crate::scalar::Scalar;
use num_rational::BigRational;

type Q = BigRational;

fn int(n: i64) -> Q {
    <Q as Scalar>::from_int(n)
}

/// Basis of elementary two-forms e_i∧e_j on a 4-dim space, ordered
/// (1,2),(1,3),(1,4),(2,3),(2,4),(3,4). Its Pfaffian polynomial is the
/// Plücker quadric t₁t₆ − t₂t₅ + t₃t₄.
pub(crate) fn plucker_span() -> TwoFormSpan<Q> {
    let mut basis = Vec::new();
    for i in 0..4usize {
        for j in (i + 1)..4 {
            let mut m: Mat<Q> = Mat::zeros(4, 4);
            m[(i, j)] = int(1);
            m[(j, i)] = int(-1);
            basis.push(m);
        }
    }
    TwoFormSpan::new(basis, true).unwrap()
}

/// Two forms on an 8-dim space with Pfaffian polynomial t₁³(t₁+t₂), which is
/// not proportional to the square of any quadratic form.
pub(crate) fn non_power_span() -> TwoFormSpan<Q> {
    let full: Mat<Q> = Mat::standard_symplectic(8);
    let mut partial: Mat<Q> = Mat::zeros(8, 8);
    partial[(0, 1)] = int(1);
    partial[(1, 0)] = int(-1);
    TwoFormSpan::new(vec![full, partial], true).unwrap()
}

/// A pencil e₁∧(t₁e₂ + t₂e₃) on a 4-dim space: every member is degenerate
/// (rank ≤ 2), so the Pfaffian polynomial vanishes identically.
pub(crate) fn degenerate_pencil_span() -> TwoFormSpan<Q> {
    let mut a: Mat<Q> = Mat::zeros(4, 4);
    a[(0, 1)] = int(1);
    a[(1, 0)] = int(-1);
    let mut b: Mat<Q> = Mat::zeros(4, 4);
    b[(0, 2)] = int(1);
    b[(2, 0)] = int(-1);
    TwoFormSpan::new(vec![a, b], true).unwrap()
}
