//! Pfaffians of antisymmetric matrices by two independent routes:
//! combinatorial expansion (small sizes) and skew-symmetric congruence
//! elimination (general). `Pf(m)^2 = det(m)` ties both to the determinant.

use super::matrix::Mat;
use super::LinalgError;
use crate::scalar::Scalar;

/// Pfaffian of an antisymmetric matrix of even dimension. Dispatches to the
/// combinatorial expansion for dimension <= 8 and to congruence elimination
/// beyond that.
pub fn pfaffian<S: Scalar>(m: &Mat<S>) -> Result<S, LinalgError> {
    check_input(m)?;
    if m.rows() <= 8 {
        Ok(pfaffian_combinatorial_unchecked(m))
    } else {
        Ok(pfaffian_elimination_unchecked(m))
    }
}

/// Combinatorial expansion along the first row; exponential, for small sizes
/// and as a cross-check oracle.
pub fn pfaffian_combinatorial<S: Scalar>(m: &Mat<S>) -> Result<S, LinalgError> {
    check_input(m)?;
    Ok(pfaffian_combinatorial_unchecked(m))
}

/// Congruence elimination: zero out the first row beyond position 2 with
/// unit-determinant row+column updates, then recurse on the trailing block.
pub fn pfaffian_elimination<S: Scalar>(m: &Mat<S>) -> Result<S, LinalgError> {
    check_input(m)?;
    Ok(pfaffian_elimination_unchecked(m))
}

fn check_input<S: Scalar>(m: &Mat<S>) -> Result<(), LinalgError> {
    assert!(m.is_square(), "pfaffian of a non-square matrix");
    assert!(m.is_antisymmetric(), "pfaffian of a non-antisymmetric matrix");
    if !m.rows().is_multiple_of(2) {
        return Err(LinalgError::OddDimension(m.rows()));
    }
    Ok(())
}

fn pfaffian_combinatorial_unchecked<S: Scalar>(m: &Mat<S>) -> S {
    let n = m.rows();
    if n == 0 {
        return S::one();
    }
    // Work on index lists so submatrices are views, not copies.
    let idx: Vec<usize> = (0..n).collect();
    pf_expand(m, &idx)
}

fn pf_expand<S: Scalar>(m: &Mat<S>, idx: &[usize]) -> S {
    if idx.is_empty() {
        return S::one();
    }
    let i0 = idx[0];
    let mut acc = S::zero();
    let mut sign_positive = true; // sign of (-1)^j for j = 2, 4, ... (1-based)
    for pos in 1..idx.len() {
        let j = idx[pos];
        let a = m[(i0, j)].clone();
        if !a.is_zero() {
            let rest: Vec<usize> = idx[1..]
                .iter()
                .copied()
                .filter(|&t| t != j)
                .collect();
            let sub = pf_expand(m, &rest);
            let term = a * sub;
            acc = if sign_positive { acc + term } else { acc - term };
        }
        sign_positive = !sign_positive;
    }
    acc
}

fn pfaffian_elimination_unchecked<S: Scalar>(m: &Mat<S>) -> S {
    let mut a = m.clone();
    let scale = a.max_mag();
    let n = a.rows();
    let mut acc = S::one();
    let mut base = 0;
    while base < n {
        // Find a pivot in row `base` right of the diagonal.
        let pivot = pick_row_pivot(&a, base, scale);
        let Some(pj) = pivot else {
            return S::zero(); // row is zero: the matrix is singular
        };
        if pj != base + 1 {
            // Swap row/col pj <-> base+1: a congruence by a transposition,
            // which flips the Pfaffian's sign.
            swap_sym(&mut a, pj, base + 1);
            acc = -acc;
        }
        let p = a[(base, base + 1)].clone();
        let pinv = p.inv().expect("accepted pivot invertible");
        acc = acc * p;
        for j in base + 2..n {
            let f = a[(base, j)].clone() * pinv.clone();
            if f.is_zero() {
                continue;
            }
            // col_j -= f * col_{base+1}; row_j -= f * row_{base+1}
            for r in 0..n {
                let d = f.clone() * a[(r, base + 1)].clone();
                a[(r, j)] = a[(r, j)].clone() - d;
            }
            for c in 0..n {
                let d = f.clone() * a[(base + 1, c)].clone();
                a[(j, c)] = a[(j, c)].clone() - d;
            }
        }
        base += 2;
    }
    acc
}

fn pick_row_pivot<S: Scalar>(a: &Mat<S>, base: usize, scale: f64) -> Option<usize> {
    let n = a.rows();
    if S::EXACT {
        (base + 1..n).find(|&j| !a[(base, j)].is_zero())
    } else {
        let best = (base + 1..n).max_by(|&j1, &j2| {
            a[(base, j1)]
                .mag()
                .partial_cmp(&a[(base, j2)].mag())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[(base, best)].negligible_at(scale) {
            None
        } else {
            Some(best)
        }
    }
}

fn swap_sym<S: Scalar>(a: &mut Mat<S>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let tmp = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = tmp;
    }
    for r in 0..n {
        let tmp = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = tmp;
    }
}
