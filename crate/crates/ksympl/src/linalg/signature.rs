//! Signature of a real symmetric matrix by congruence diagonalization
//! (symmetric pivoting, Sylvester's law of inertia).
//!
//! Counts are reported minuses-first: `(minuses, pluses, zeros)`.

use super::matrix::Mat;
use super::LinalgError;
use crate::scalar::{RealScalar, Scalar};

/// Inertia of a real symmetric matrix: `(minuses, pluses, zeros)`.
pub fn signature<S: RealScalar>(sym: &Mat<S>) -> Result<(usize, usize, usize), LinalgError> {
    if !sym.is_square() || !sym.is_symmetric() {
        return Err(LinalgError::NonSymmetric);
    }
    let n = sym.rows();
    let mut a = sym.clone();
    let scale = a.max_mag();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut minuses, mut pluses) = (0usize, 0usize);

    while !active.is_empty() {
        // Prefer a diagonal pivot.
        let diag_pick = pick_diag(&a, &active, scale);
        let pivot_idx = match diag_pick {
            Some(i) => i,
            None => {
                // All active diagonal entries are (numerically) zero. Find an
                // off-diagonal entry; if none, the rest is the zero block.
                match pick_offdiag(&a, &active, scale) {
                    Some((i, j)) => {
                        // Congruence row/col_i += row/col_j turns the (i,i)
                        // entry into 2 a_ij != 0 (characteristic zero).
                        add_sym(&mut a, i, j);
                        i
                    }
                    None => break,
                }
            }
        };
        let i = pivot_idx;
        let d = a[(i, i)].clone();
        match d.real_sign() {
            Some(1) => pluses += 1,
            Some(-1) => minuses += 1,
            _ => unreachable!("pivot accepted by policy has a definite sign"),
        }
        let dinv = d.inv().expect("nonzero pivot");
        // Schur-complement update on the active set: for symmetric input the
        // two-sided congruence reduces to a_jc -= (a_ji / a_ii) * a_ic, using
        // the original row i throughout.
        let others: Vec<usize> = active.iter().copied().filter(|&j| j != i).collect();
        let row_i: Vec<S> = others.iter().map(|&c| a[(i, c)].clone()).collect();
        for &j in &others {
            let f = a[(j, i)].clone() * dinv.clone();
            if f.is_zero() {
                continue;
            }
            for (&c, ric) in others.iter().zip(&row_i) {
                let d1 = f.clone() * ric.clone();
                a[(j, c)] = a[(j, c)].clone() - d1;
            }
        }
        for &j in &others {
            a[(j, i)] = S::zero();
            a[(i, j)] = S::zero();
        }
        active.retain(|&j| j != i);
    }

    let zeros = n - minuses - pluses;
    Ok((minuses, pluses, zeros))
}

fn pick_diag<S: RealScalar>(a: &Mat<S>, active: &[usize], scale: f64) -> Option<usize> {
    if S::EXACT {
        active.iter().copied().find(|&i| !a[(i, i)].is_zero())
    } else {
        let best = active.iter().copied().max_by(|&i, &j| {
            a[(i, i)]
                .mag()
                .partial_cmp(&a[(j, j)].mag())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[(best, best)].negligible_at(scale) {
            None
        } else {
            Some(best)
        }
    }
}

fn pick_offdiag<S: RealScalar>(
    a: &Mat<S>,
    active: &[usize],
    scale: f64,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_mag = 0.0;
    for (t, &i) in active.iter().enumerate() {
        for &j in &active[t + 1..] {
            let x = &a[(i, j)];
            if !x.negligible_at(scale) {
                if S::EXACT {
                    return Some((i, j));
                }
                if x.mag() > best_mag {
                    best_mag = x.mag();
                    best = Some((i, j));
                }
            }
        }
    }
    best
}

/// Congruence update row/col_i += row/col_j (symmetric).
fn add_sym<S: Scalar>(a: &mut Mat<S>, i: usize, j: usize) {
    let n = a.cols();
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] = a[(i, c)].clone() + v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] = a[(r, i)].clone() + v;
    }
}
