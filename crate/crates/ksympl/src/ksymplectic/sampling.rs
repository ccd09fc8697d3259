//! Sampling the projective null cone `{q = 0}` of a quadratic form.
//!
//! The form is congruence-diagonalized with a tracked change of basis, a
//! random point is drawn in all diagonal coordinates but one, and the
//! remaining coordinate is solved from `q = 0`. When the required square
//! root does not exist in the base field, the point is produced in the
//! quadratic extension adjoining it — which is then a genuine field, since
//! the adjoined element is a certified non-square.

use super::span::TwoFormSpan;
use crate::linalg::{rank, Mat};
use crate::scalar::{Complexify, QuadExt, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One sampled point of the null cone, with the rank of the corresponding
/// two-form.
#[derive(Clone, Debug)]
pub struct NullSample<C: Scalar> {
    /// Coefficients in the span basis; the quadratic-extension part is zero
    /// whenever the solving square root existed in the base field.
    pub coeffs: Vec<QuadExt<C>>,
    /// Rank of the two-form at those coefficients.
    pub rank: usize,
}

/// Congruence diagonalization of a symmetric matrix: returns `(t, d)` with
/// `tᵀ·g·t = diag(d)`. Works over any scalar backend (the form is treated as
/// bilinear, not hermitian). Totally isotropic directions come out as zero
/// diagonal entries.
pub fn diagonalize_congruence<S: Scalar>(g: &Mat<S>) -> (Mat<S>, Vec<S>) {
    let n = g.rows();
    assert_eq!(g.cols(), n, "need a square matrix");
    let scale = g.max_mag();
    let mut a = g.clone();
    let mut t: Mat<S> = Mat::identity(n);

    let add_col = |m: &mut Mat<S>, dst: usize, src: usize, f: &S| {
        for r in 0..m.rows() {
            let v = m[(r, dst)].clone() + f.clone() * m[(r, src)].clone();
            m[(r, dst)] = v;
        }
    };
    let add_row = |m: &mut Mat<S>, dst: usize, src: usize, f: &S| {
        for c in 0..m.cols() {
            let v = m[(dst, c)].clone() + f.clone() * m[(src, c)].clone();
            m[(dst, c)] = v;
        }
    };
    let swap_cols = |m: &mut Mat<S>, i: usize, j: usize| {
        for r in 0..m.rows() {
            let tmp = m[(r, i)].clone();
            m[(r, i)] = m[(r, j)].clone();
            m[(r, j)] = tmp;
        }
    };
    let swap_rows = |m: &mut Mat<S>, i: usize, j: usize| {
        for c in 0..m.cols() {
            let tmp = m[(i, c)].clone();
            m[(i, c)] = m[(j, c)].clone();
            m[(j, c)] = tmp;
        }
    };

    for pos in 0..n {
        // Best available diagonal pivot in the active block.
        let mut pivot: Option<usize> = None;
        let mut best = 0.0f64;
        for j in pos..n {
            let m = a[(j, j)].mag();
            if !a[(j, j)].negligible_at(scale) && (pivot.is_none() || m > best) {
                pivot = Some(j);
                best = m;
                if S::EXACT {
                    break; // first nonzero suffices exactly
                }
            }
        }
        if pivot.is_none() {
            // Diagonal is dead; look for an off-diagonal entry to fold in.
            let mut pair: Option<(usize, usize)> = None;
            let mut best_od = 0.0f64;
            for r in pos..n {
                for c in (r + 1)..n {
                    let m = a[(r, c)].mag();
                    if !a[(r, c)].negligible_at(scale) && (pair.is_none() || m > best_od) {
                        pair = Some((r, c));
                        best_od = m;
                    }
                }
            }
            match pair {
                // Active block vanishes identically: the rest is radical.
                None => break,
                Some((r, c)) => {
                    // col_r += col_c makes a[(r,r)] = 2·a[(r,c)] (+ negligible
                    // diagonal), nonzero in characteristic zero.
                    let one = S::one();
                    add_col(&mut a, r, c, &one);
                    add_row(&mut a, r, c, &one);
                    add_col(&mut t, r, c, &one);
                    pivot = Some(r);
                }
            }
        }
        let j = pivot.expect("pivot or break above");
        if j != pos {
            swap_cols(&mut a, pos, j);
            swap_rows(&mut a, pos, j);
            swap_cols(&mut t, pos, j);
        }
        let d_inv = a[(pos, pos)].inv().expect("pivot is nonzero");
        for j2 in (pos + 1)..n {
            let f = -(a[(pos, j2)].clone() * d_inv.clone());
            if f.is_zero() {
                continue;
            }
            add_col(&mut a, j2, pos, &f);
            add_row(&mut a, j2, pos, &f);
            add_col(&mut t, j2, pos, &f);
        }
    }

    let d = (0..n).map(|i| a[(i, i)].clone()).collect();
    (t, d)
}

/// A basis (in span coordinates) of the radical `{x : q(x, ·) = 0}` of the
/// form, empty when `q` is nondegenerate.
pub fn radical_directions<S: Scalar>(gram: &Mat<S>) -> Vec<Vec<S>> {
    let (t, d) = diagonalize_congruence(gram);
    let scale = gram.max_mag();
    let k = gram.rows();
    d.iter()
        .enumerate()
        .filter(|(_, di)| di.negligible_at(scale))
        .map(|(i, _)| (0..k).map(|r| t[(r, i)].clone()).collect())
        .collect()
}

/// Draws `samples` points on the null cone of `gram` over the
/// complexification of the span's scalars and reports the rank of the
/// two-form at each. Sampling is deterministic in `seed`.
///
/// Returns an empty vector when the null cone contains no nonzero points
/// (`k = 1` with a nondegenerate form) or when `q ≡ 0`.
pub fn sample_null_forms<S: Complexify>(
    span: &TwoFormSpan<S>,
    gram: &Mat<S>,
    samples: usize,
    seed: u64,
) -> Vec<NullSample<S::C>> {
    let k = span.k();
    assert_eq!(gram.rows(), k, "gram size must match the span dimension");

    let gram_c: Mat<S::C> = gram.convert(|x| x.clone().complexify());
    let (t_mat, d) = diagonalize_congruence(&gram_c);
    let scale = gram_c.max_mag();
    let nonzero: Vec<usize> = (0..k).filter(|&i| !d[i].negligible_at(scale)).collect();
    if nonzero.is_empty() {
        return Vec::new(); // q ≡ 0: the cone is everything, nothing to solve
    }
    if k == 1 {
        return Vec::new(); // nondegenerate on a line: only the zero point
    }

    let basis_ext: Vec<Mat<QuadExt<S::C>>> = span
        .basis()
        .iter()
        .map(|m| m.convert(|x| QuadExt::base(x.clone().complexify())))
        .collect();
    let t_ext = t_mat.convert(|x| QuadExt::base(x.clone()));
    let solve_idx = nonzero[0];
    let d_solve_inv = d[solve_idx].inv().expect("selected diagonal is nonzero");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn: Vec<Vec<QuadExt<S::C>>> = Vec::with_capacity(samples);
    while drawn.len() < samples {
        // Free coordinates everywhere except the solved position.
        let y_free: Vec<S::C> = (0..k)
            .map(|i| {
                if i == solve_idx {
                    <S::C as Scalar>::zero()
                } else {
                    <S::C as Scalar>::from_int(rng.gen_range(-9..=9i64))
                }
            })
            .collect();
        if y_free.iter().all(Scalar::is_zero) {
            continue; // degenerate draw; solving would give the zero vector
        }
        // q(y) = Σ dᵢ yᵢ², so the solved coordinate satisfies y² = e.
        let mut rhs = <S::C as Scalar>::zero();
        for &i in &nonzero {
            if i != solve_idx {
                rhs = rhs + d[i].clone() * y_free[i].clone() * y_free[i].clone();
            }
        }
        let e = -(rhs * d_solve_inv.clone());

        let y_ext: Vec<QuadExt<S::C>> = match e.sqrt() {
            Some(root) => (0..k)
                .map(|i| {
                    QuadExt::base(if i == solve_idx {
                        root.clone()
                    } else {
                        y_free[i].clone()
                    })
                })
                .collect(),
            // e is a certified non-square: adjoin δ with δ² = e and work in
            // the field extension.
            None => (0..k)
                .map(|i| {
                    if i == solve_idx {
                        QuadExt::adjoin(e.clone())
                    } else {
                        QuadExt::new(y_free[i].clone(), <S::C as Scalar>::zero(), e.clone())
                    }
                })
                .collect(),
        };

        let coeffs = t_ext.matvec(&y_ext);
        if coeffs.iter().all(Scalar::is_zero) {
            continue;
        }
        drawn.push(coeffs);
    }

    // The rank checks dominate and are independent per sample; the draws
    // above stay sequential so the stream is a function of the seed alone.
    crate::exec::par_map(&drawn, |coeffs| {
        let mut form: Mat<QuadExt<S::C>> = Mat::zeros(span.dim_v(), span.dim_v());
        for (c, b) in coeffs.iter().zip(&basis_ext) {
            form = form.add(&b.scalar_mul(c));
        }
        NullSample {
            rank: rank(&form),
            coeffs: coeffs.clone(),
        }
    })
}
