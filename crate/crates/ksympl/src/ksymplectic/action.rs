//! The operator algebra a span generates on its underlying space.
//!
//! Fixing a base form `ω₁` with `u = q(ω₁,ω₁) ≠ 0`, every `ω` in the
//! `q`-orthogonal complement of `ω₁` yields an operator `A = ω₁⁻¹·ω` with
//! `A² = −(q(ω,ω)/u)·Id`, and operators from orthogonal forms anticommute —
//! a Clifford module structure on `V`. The Gram recorded for each generator
//! is `−q(w,w)/u`; when `ω₁` can be rescaled inside the field so that
//! `u = ∓1`, this reduces to `±q(w,w)`.

use super::extract::QuadraticFormOnSpan;
use super::span::TwoFormSpan;
use super::KsymplecticError;
use crate::linalg::{inverse, rank_kernel, Mat};
use crate::repr::CliffordModule;
use crate::scalar::Scalar;

/// Picks coefficients `ω₁` with `q(ω₁,ω₁) ≠ 0`.
///
/// Scans the basis vectors, then the pairwise sums `eᵢ+eⱼ`; over a field of
/// characteristic zero these exhaust the possibilities — if `q` vanishes on
/// all of them it vanishes identically (polarization) — so failure means the
/// form is zero. Exact backends take the first nonzero value; float backends
/// take the candidate maximizing `|q|` and reject it only when negligible.
pub fn select_omega1<S: Scalar>(q: &QuadraticFormOnSpan<S>) -> Result<Vec<S>, KsymplecticError> {
    let k = q.k();
    let mut candidates: Vec<Vec<S>> = Vec::with_capacity(k + k * (k - 1) / 2);
    for i in 0..k {
        let mut v = vec![S::zero(); k];
        v[i] = S::one();
        candidates.push(v);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let mut v = vec![S::zero(); k];
            v[i] = S::one();
            v[j] = S::one();
            candidates.push(v);
        }
    }
    if S::EXACT {
        return candidates
            .into_iter()
            .find(|v| !q.quad(v).is_zero())
            .ok_or(KsymplecticError::DegenerateOmega1);
    }
    let scale = q.gram.max_mag();
    let (best, value) = candidates
        .into_iter()
        .map(|v| {
            let value = q.quad(&v);
            (v, value)
        })
        .max_by(|a, b| a.1.mag().total_cmp(&b.1.mag()))
        .expect("at least one candidate for k >= 1");
    if value.negligible_at(scale) {
        Err(KsymplecticError::DegenerateOmega1)
    } else {
        Ok(best)
    }
}

/// Builds the Clifford module generated by a span against its quadratic
/// form.
///
/// `omega1` optionally fixes the base form's coefficients; by default
/// [`select_omega1`] chooses them. The base form is rescaled inside the
/// scalar field so that `u = q(ω₁,ω₁)` becomes `−1` (preferred) or `+1`
/// whenever the needed square root exists, and each complement vector is
/// likewise rescaled toward a Gram entry of `∓1`; where no square root is
/// available the general Gram `−q(w,w)/u` is recorded. Degenerate
/// directions of `q` restricted to `ω₁^⊥` become generators with Gram zero.
///
/// Errors: [`KsymplecticError::DegenerateOmega1`] when the base form is
/// `q`-null, [`KsymplecticError::NonInvertible`] when it is singular as a
/// two-form.
pub fn clifford_action<S: Scalar>(
    span: &TwoFormSpan<S>,
    q: &QuadraticFormOnSpan<S>,
    omega1: Option<&[S]>,
) -> Result<CliffordModule<S>, KsymplecticError> {
    let k = span.k();
    assert_eq!(q.k(), k, "form and span dimensions must agree");

    let mut coeffs: Vec<S> = match omega1 {
        Some(c) => {
            assert_eq!(c.len(), k, "omega1 coefficient length mismatch");
            c.to_vec()
        }
        None => select_omega1(q)?,
    };
    let gram_scale = q.gram.max_mag();
    let coeff_scale = coeffs.iter().map(Scalar::mag).fold(1.0, f64::max);
    let mut u = q.quad(&coeffs);
    if u.negligible_at(gram_scale * coeff_scale * coeff_scale) {
        return Err(KsymplecticError::DegenerateOmega1);
    }

    // Rescale ω₁ to make u = ∓1 when the field contains the square root.
    let unit_target = [(-u.clone(), S::from_int(-1)), (u.clone(), S::one())];
    for (radicand, target) in unit_target {
        if let Some(root) = radicand.sqrt() {
            if let Some(inv_root) = root.inv() {
                coeffs = coeffs
                    .into_iter()
                    .map(|c| c * inv_root.clone())
                    .collect();
                u = target;
                break;
            }
        }
    }

    // ω₁^⊥ inside the span: kernel of the functional x ↦ q(ω₁, x).
    let row = q.gram.matvec(&coeffs);
    let (_, mut basis) = rank_kernel(&Mat::from_rows(vec![row]));
    debug_assert_eq!(basis.len(), k - 1);

    // q-orthogonalize the complement, folding isotropic pairs and passing
    // radical directions through unchanged.
    let m = basis.len();
    let mut processed = 0usize;
    while processed < m {
        let mut pivot: Option<usize> = None;
        let mut best = 0.0f64;
        for (idx, candidate) in basis.iter().enumerate().skip(processed) {
            let value = q.quad(candidate);
            let magnitude = value.mag();
            if !value.negligible_at(gram_scale) && (pivot.is_none() || magnitude > best) {
                pivot = Some(idx);
                best = magnitude;
                if S::EXACT {
                    break;
                }
            }
        }
        if pivot.is_none() {
            // No vector with q ≠ 0 remains; a crossing pair can still hide
            // a nonzero block.
            let mut pair: Option<(usize, usize)> = None;
            'outer: for a in processed..m {
                for b in (a + 1)..m {
                    if !q.pair(&basis[a], &basis[b]).negligible_at(gram_scale) {
                        pair = Some((a, b));
                        break 'outer;
                    }
                }
            }
            match pair {
                Some((a, b)) => {
                    let folded: Vec<S> = basis[a]
                        .iter()
                        .zip(&basis[b])
                        .map(|(x, y)| x.clone() + y.clone())
                        .collect();
                    basis[a] = folded; // q(a+b, a+b) = 2·q(a,b) ≠ 0
                    pivot = Some(a);
                }
                // Everything left pairs to zero with everything, including
                // the processed part: genuine radical of q|᙮ω₁^⊥.
                None => break,
            }
        }
        let idx = pivot.expect("pivot known or loop broken");
        basis.swap(processed, idx);
        let d_inv = q
            .quad(&basis[processed])
            .inv()
            .expect("pivot value is nonzero");
        for l in (processed + 1)..m {
            let f = q.pair(&basis[processed], &basis[l]) * d_inv.clone();
            if f.is_zero() {
                continue;
            }
            let adjusted: Vec<S> = basis[l]
                .iter()
                .zip(&basis[processed])
                .map(|(x, p)| x.clone() - f.clone() * p.clone())
                .collect();
            basis[l] = adjusted;
        }
        processed += 1;
    }

    let omega1_mat = span.combine(&coeffs);
    let omega1_inv = inverse(&omega1_mat).map_err(|_| KsymplecticError::NonInvertible)?;
    let u_inv = u.inv().expect("u is nonzero");

    let mut generators = Vec::with_capacity(m);
    let mut gram = Vec::with_capacity(m);
    for w in basis {
        let mut w = w;
        let mut g = -(q.quad(&w) * u_inv.clone());
        if !g.negligible_at(gram_scale) {
            // Rescale w to push its Gram entry to ∓1 when the field allows;
            // the recorded value is then the exact target, not a float
            // recomputation.
            let targets = [(-g.clone(), S::from_int(-1)), (g.clone(), S::one())];
            for (radicand, target) in targets {
                if let Some(root) = radicand.sqrt() {
                    if let Some(inv_root) = root.inv() {
                        w = w.into_iter().map(|x| x * inv_root.clone()).collect();
                        g = target;
                        break;
                    }
                }
            }
        }
        generators.push(omega1_inv.mul(&span.combine(&w)));
        gram.push(g);
    }
    Ok(CliffordModule::new(generators, gram))
}
