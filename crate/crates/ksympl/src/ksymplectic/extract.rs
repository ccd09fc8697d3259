//! Recovering the quadratic form `q` with `p = c·qⁿ` from a homogeneous
//! polynomial, by a linear method.
//!
//! Writing the unknown quadric as `x`, the identity `p = c·xⁿ` forces
//! `n·p·∂x/∂tᵢ − x·∂p/∂tᵢ = 0` for every variable, and that system is
//! *linear* in the coefficients of `x`. A one-dimensional nullspace yields
//! the candidate, which is then certified by expanding `c·xⁿ − p`; failure
//! produces the exponent of a violated coefficient. Over a field, a nonzero
//! `p` admits at most one factor direction (if `n·p·∂x = x·∂p` for all
//! variables then `p·x^{−n}` has zero differential, so `p = c·xⁿ`, and unique
//! factorization pins `x` up to scale), so the ambiguous outcome can only
//! arise from float rank misjudgment.

use super::KsymplecticError;
use crate::linalg::{exponents_of_degree, rank_kernel, HomogeneousPoly, Mat};
use crate::scalar::Scalar;

/// How the stored representative of `q` was chosen. The underlying form is
/// defined only up to a nonzero multiplier; the record makes round-trips
/// reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// The coefficient of the lexicographically greatest monomial of `q` is
    /// one; `c` carries all scale.
    LeadingCoefficientOne { exponent: Vec<u16> },
    /// Sign chosen so that the proportionality constant `c` is positive
    /// (possible when `n` is odd, where flipping `q` flips `c`).
    PositiveConstant,
    /// Sign chosen so that `q(κ,κ) > 0` for a recorded positivity witness
    /// (a Kähler class).
    PositiveOnWitness { witness: Vec<String> },
    /// Taken as supplied by the caller; no convention applied.
    AsSupplied,
}

/// A quadratic form on the coefficient space of a span, together with the
/// constant relating the span's Pfaffian polynomial to its `n`-th power:
/// `p = c·qⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticFormOnSpan<S> {
    /// Symmetric `k×k` Gram matrix: `q(x,y) = xᵀ·gram·y`.
    pub gram: Mat<S>,
    /// The proportionality constant for the stored representative.
    pub c: S,
    /// The convention that fixed this representative.
    pub normalization: Normalization,
}

impl<S: Scalar> QuadraticFormOnSpan<S> {
    /// Number of variables of the form.
    pub fn k(&self) -> usize {
        self.gram.rows()
    }

    /// The bilinear value `q(x, y)`.
    pub fn pair(&self, x: &[S], y: &[S]) -> S {
        let gy = self.gram.matvec(y);
        x.iter()
            .zip(gy)
            .fold(S::zero(), |acc, (xi, gyi)| acc + xi.clone() * gyi)
    }

    /// The quadratic value `q(x, x)`.
    pub fn quad(&self, x: &[S]) -> S {
        self.pair(x, x)
    }

    /// The form as a degree-2 homogeneous polynomial.
    pub fn to_poly(&self) -> HomogeneousPoly<S> {
        let k = self.k();
        let mut out = HomogeneousPoly::zero(k, 2);
        for i in 0..k {
            for j in i..k {
                let mut e = vec![0u16; k];
                e[i] += 1;
                e[j] += 1;
                let coeff = if i == j {
                    self.gram[(i, i)].clone()
                } else {
                    S::from_int(2) * self.gram[(i, j)].clone()
                };
                out.add_term(e, coeff);
            }
        }
        out
    }

    /// The Gram matrix of a degree-2 homogeneous polynomial.
    pub fn gram_from_poly(p: &HomogeneousPoly<S>) -> Mat<S> {
        assert_eq!(p.degree(), 2, "need a quadratic polynomial");
        let k = p.num_vars();
        let half = S::from_ratio(1, 2);
        Mat::from_fn(k, k, |i, j| {
            let mut e = vec![0u16; k];
            e[i] += 1;
            e[j] += 1;
            if i == j {
                p.coeff(&e)
            } else {
                half.clone() * p.coeff(&e)
            }
        })
    }

    /// Flips the sign of the stored representative, adjusting `c` so that
    /// `p = c·qⁿ` still holds, and records the reason.
    pub fn flip_sign(&mut self, n: usize, normalization: Normalization) {
        self.gram = self.gram.neg();
        if n % 2 == 1 {
            self.c = -self.c.clone();
        }
        self.normalization = normalization;
    }

    /// Maps the scalars of the form.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> QuadraticFormOnSpan<T> {
        QuadraticFormOnSpan {
            gram: self.gram.convert(f),
            c: f(&self.c),
            normalization: self.normalization.clone(),
        }
    }
}

/// Finds the quadratic form `q` and constant `c` with `p = c·qⁿ`, or reports
/// that no such factorization exists.
///
/// `p` must be homogeneous of degree `2n` and nonzero. The returned `q` has
/// its lexicographically greatest nonzero coefficient equal to one
/// ([`Normalization::LeadingCoefficientOne`]); `c` carries the scale.
///
/// The linear system is assembled one variable at a time, cheapest first;
/// as soon as the running nullspace is one-dimensional the candidate is
/// certified by exact expansion, which makes the early exit sound: adding
/// more equations can only shrink the nullspace, so a certified candidate is
/// the answer and a refuted unique candidate refutes the factorization.
pub fn extract_quadric<S: Scalar>(
    p: &HomogeneousPoly<S>,
    n: usize,
) -> Result<QuadraticFormOnSpan<S>, KsymplecticError> {
    assert!(n >= 1, "need n ≥ 1");
    assert_eq!(p.degree(), 2 * n as u32, "polynomial degree must be 2n");
    if p.is_zero() {
        return Err(KsymplecticError::NotAPower {
            witness_exponent: None,
        });
    }
    let k = p.num_vars();

    if n == 1 {
        // Degree 2: the polynomial is its own quadric.
        return Ok(normalize_candidate(p.clone(), p, 1)
            .expect("a quadratic is trivially its own first power"));
    }

    let unknowns = exponents_of_degree(k, 2);
    let partials: Vec<HomogeneousPoly<S>> = (0..k).map(|i| p.partial_derivative(i)).collect();
    let n_scalar = S::from_int(n as i64);

    // Rows accumulated so far, one per (variable, output exponent) pair.
    let mut rows: Vec<Vec<S>> = Vec::new();
    for i in 0..k {
        // Column polynomials for this variable: n·p·∂(t^β)/∂tᵢ − t^β·∂p/∂tᵢ.
        let mut columns: Vec<HomogeneousPoly<S>> = Vec::with_capacity(unknowns.len());
        for beta in &unknowns {
            let monomial = HomogeneousPoly::from_terms(k, 2, [(beta.clone(), S::one())]);
            let d_mono = if beta[i] == 0 {
                HomogeneousPoly::zero(k, 1)
            } else {
                monomial.partial_derivative(i)
            };
            let term = p.mul(&d_mono).scalar_mul(&n_scalar);
            columns.push(term.sub(&monomial.mul(&partials[i])));
        }
        // Union of exponents appearing in this block, one matrix row each.
        let mut support: Vec<Vec<u16>> = Vec::new();
        for col in &columns {
            for (e, _) in col.terms() {
                support.push(e.clone());
            }
        }
        support.sort();
        support.dedup();
        for gamma in &support {
            rows.push(columns.iter().map(|col| col.coeff(gamma)).collect());
        }

        let system = Mat::from_rows(rows.clone());
        let kernel = rank_kernel(&system).1;
        match kernel.len() {
            0 => {
                return Err(KsymplecticError::NotAPower {
                    witness_exponent: None,
                })
            }
            1 => {
                let candidate = HomogeneousPoly::from_terms(
                    k,
                    2,
                    unknowns
                        .iter()
                        .cloned()
                        .zip(kernel[0].iter().cloned()),
                );
                return normalize_candidate(candidate, p, n);
            }
            _ => {} // Underdetermined so far; add the next variable's block.
        }
    }

    let system = Mat::from_rows(rows);
    let dim = rank_kernel(&system).1.len();
    Err(KsymplecticError::AmbiguousFactor { nullspace_dim: dim })
}

/// Scales the candidate to leading coefficient one, fits `c`, and certifies
/// `p = c·qⁿ` exactly (to relative tolerance on float backends).
fn normalize_candidate<S: Scalar>(
    candidate: HomogeneousPoly<S>,
    p: &HomogeneousPoly<S>,
    n: usize,
) -> Result<QuadraticFormOnSpan<S>, KsymplecticError> {
    let lead = candidate
        .leading_exponent()
        .expect("kernel vectors are nonzero")
        .clone();
    let lead_coeff = candidate.coeff(&lead);
    let inv = lead_coeff.inv().expect("leading coefficient is nonzero");
    let q_poly = candidate.scalar_mul(&inv);

    let power = q_poly.pow(n as u32);
    let power_lead = power
        .leading_exponent()
        .expect("a power of a nonzero polynomial is nonzero")
        .clone();
    let denom_inv = power
        .coeff(&power_lead)
        .inv()
        .expect("leading coefficient of the power is nonzero");
    let c = p.coeff(&power_lead) * denom_inv;

    let scaled = power.scalar_mul(&c);
    let residual = scaled.sub(p);
    let scale = p.max_mag().max(scaled.max_mag());
    if let Some((exponent, _)) = residual
        .terms()
        .find(|(_, coeff)| !coeff.negligible_at(scale))
    {
        return Err(KsymplecticError::NotAPower {
            witness_exponent: Some(exponent.clone()),
        });
    }

    Ok(QuadraticFormOnSpan {
        gram: QuadraticFormOnSpan::gram_from_poly(&q_poly),
        c,
        normalization: Normalization::LeadingCoefficientOne { exponent: lead },
    })
}
