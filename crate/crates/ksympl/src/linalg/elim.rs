//! Gaussian elimination: rank, kernel, determinant, linear solves.
//!
//! Pivot policy: exact backends take the first nonzero candidate (any nonzero
//! pivot is exact); float backends use partial pivoting with pivots below
//! `REL_RANK_TOL x initial scale` treated as zero.

use super::matrix::Mat;
use super::LinalgError;
use crate::scalar::Scalar;

/// Result of a full row reduction to reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct Rref<S> {
    pub mat: Mat<S>,
    /// `(row, col)` of each pivot, in row order.
    pub pivots: Vec<(usize, usize)>,
    /// Scale used for negligibility decisions (max |entry| of the input).
    pub scale: f64,
}

/// Reduced row-echelon form with the backend's pivot policy.
pub fn rref<S: Scalar>(m: &Mat<S>) -> Rref<S> {
    let mut a = m.clone();
    let scale = a.max_mag();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        if next_row == rows {
            break;
        }
        let pivot_row = pick_pivot(&a, next_row, col, scale);
        let Some(pr) = pivot_row else { continue };
        swap_rows(&mut a, next_row, pr);
        let inv = a[(next_row, col)]
            .inv()
            .expect("pivot accepted by policy must be invertible");
        scale_row(&mut a, next_row, &inv);
        for r in 0..rows {
            if r != next_row && !a[(r, col)].is_zero() {
                let f = a[(r, col)].clone();
                axpy_row(&mut a, r, next_row, &f);
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }
    Rref { mat: a, pivots, scale }
}

fn pick_pivot<S: Scalar>(a: &Mat<S>, from_row: usize, col: usize, scale: f64) -> Option<usize> {
    if S::EXACT {
        (from_row..a.rows()).find(|&r| !a[(r, col)].is_zero())
    } else {
        let best = (from_row..a.rows())
            .max_by(|&r1, &r2| {
                a[(r1, col)]
                    .mag()
                    .partial_cmp(&a[(r2, col)].mag())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })?;
        if a[(best, col)].negligible_at(scale) {
            None
        } else {
            Some(best)
        }
    }
}

fn swap_rows<S: Scalar>(a: &mut Mat<S>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.cols() {
        let tmp = a[(r1, j)].clone();
        a[(r1, j)] = a[(r2, j)].clone();
        a[(r2, j)] = tmp;
    }
}

fn scale_row<S: Scalar>(a: &mut Mat<S>, r: usize, k: &S) {
    for j in 0..a.cols() {
        a[(r, j)] = k.clone() * a[(r, j)].clone();
    }
}

/// row_r -= f * row_src
fn axpy_row<S: Scalar>(a: &mut Mat<S>, r: usize, src: usize, f: &S) {
    for j in 0..a.cols() {
        let delta = f.clone() * a[(src, j)].clone();
        a[(r, j)] = a[(r, j)].clone() - delta;
    }
}

pub fn rank<S: Scalar>(m: &Mat<S>) -> usize {
    rref(m).pivots.len()
}

/// Rank and a basis of the right kernel. For the zero matrix the basis is the
/// standard basis; in general each kernel vector has a 1 in one free column.
pub fn rank_kernel<S: Scalar>(m: &Mat<S>) -> (usize, Vec<Vec<S>>) {
    let red = rref(m);
    let cols = m.cols();
    let pivot_cols: Vec<usize> = red.pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for &(pr, pc) in &red.pivots {
            v[pc] = -red.mat[(pr, free)].clone();
        }
        kernel.push(v);
    }
    (red.pivots.len(), kernel)
}

/// Determinant by elimination (field arithmetic, partial pivoting).
pub fn det<S: Scalar>(m: &Mat<S>) -> S {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let scale = a.max_mag();
    let mut acc = S::one();
    for col in 0..n {
        let Some(pr) = pick_pivot(&a, col, col, scale) else {
            return S::zero();
        };
        if pr != col {
            swap_rows(&mut a, col, pr);
            acc = -acc;
        }
        let p = a[(col, col)].clone();
        acc = acc * p.clone();
        let inv = p.inv().expect("accepted pivot invertible");
        for r in col + 1..n {
            if !a[(r, col)].is_zero() {
                let f = a[(r, col)].clone() * inv.clone();
                axpy_row(&mut a, r, col, &f);
            }
        }
    }
    acc
}

/// Solves `a * x = b` for square invertible `a`, where `b` may have several
/// right-hand-side columns.
pub fn solve_square<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.rows(), "rhs row count mismatch");
    let n = a.rows();
    let mut aug = Mat::zeros(n, n + b.cols());
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols() {
            aug[(i, n + j)] = b[(i, j)].clone();
        }
    }
    let red = rref(&aug);
    // Invertibility: pivots must occupy exactly the first n columns.
    if red.pivots.len() < n || red.pivots.iter().any(|&(_, c)| c >= n) {
        return Err(LinalgError::NonInvertible);
    }
    Ok(Mat::from_fn(n, b.cols(), |i, j| red.mat[(i, n + j)].clone()))
}

pub fn inverse<S: Scalar>(m: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    solve_square(m, &Mat::identity(m.rows()))
}
