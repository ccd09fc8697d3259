//! The hyperkähler application layer: recovering the Beauville–Bogomolov
//! form and Fujiki constant from intersection data, checking the pairing
//! identity satisfied by classes restricted from an ambient manifold, and
//! dimension obstructions for absolutely trianalytic tori.
//!
//! The bridge to the rest of the crate is the relation `∫ η^{2n} =
//! c·q(η,η)ⁿ` on second cohomology: the left side is an intersection
//! polynomial, the right side a power of a quadratic form, and
//! [`crate::ksymplectic::extract_quadric`] recovers `(q, c)` up to sign.
//! This module resolves the sign, cross-checks the result against the
//! holomorphic-symplectic expression for `q` and the polarized pairing
//! identity, and turns Clifford module dimensions into torus obstructions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::clifford::{minimal_module_dim, ScalarField, Signature};
use crate::ksymplectic::{
    extract_quadric, KsymplecticError, Normalization, QuadraticFormOnSpan,
};
use crate::linalg::{multinomial, rank, HomogeneousPoly};
use crate::scalar::{Complexify, RealScalar, Scalar};

/// Errors from the hyperkähler application layer.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HkError {
    /// The intersection polynomial does not determine a quadratic form.
    #[error(transparent)]
    Extraction(#[from] KsymplecticError),
    /// The sign of the quadratic form cannot be resolved: `n` is even and no
    /// positivity witness was supplied, or the witness is null, or the
    /// witness contradicts the positive-constant convention.
    #[error("sign of the quadratic form cannot be resolved")]
    SignAmbiguous,
    /// Multilinear evaluation was requested but the model carries neither an
    /// explicit table nor a nonzero top intersection polynomial.
    #[error("model carries no multilinear intersection data")]
    MissingMultilinearData,
    /// Every sampled class had a null self-pairing, so the pairing constant
    /// cannot be fitted.
    #[error("no sampled class has a nonzero self-pairing")]
    NoNonNullAlpha,
    /// The top polynomial does not match the declared dimensions.
    #[error(
        "top polynomial has {num_vars} variables and degree {degree}, \
         expected {b2} variables and degree {expected_degree}"
    )]
    ModelShape {
        num_vars: usize,
        degree: u32,
        b2: usize,
        expected_degree: u32,
    },
}

// ---------------------------------------------------------------------------
// Symmetric multilinear tensors
// ---------------------------------------------------------------------------

/// The full polarization of a homogeneous degree-`d` form: a symmetric
/// `d`-linear tensor, stored by exponent vector. The entry at `α` (with
/// `|α| = d`) is the tensor evaluated on the basis multiset `α`, so the
/// polynomial `p = Σ p_α·tᵅ` polarizes to `T[α] = p_α / multinomial(α)`,
/// the unique symmetric tensor with `T(v,…,v) = p(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricTensor<S> {
    num_vars: usize,
    degree: u32,
    entries: BTreeMap<Vec<u16>, S>,
}

impl<S: Scalar> SymmetricTensor<S> {
    /// Polarizes a homogeneous polynomial.
    pub fn polarize(p: &HomogeneousPoly<S>) -> Self {
        let mut entries = BTreeMap::new();
        for (expo, coeff) in p.terms() {
            let weight = S::from_int(multinomial(expo));
            let inv = weight.inv().expect("multinomial is a nonzero integer");
            entries.insert(expo.clone(), coeff.clone() * inv);
        }
        SymmetricTensor {
            num_vars: p.num_vars(),
            degree: p.degree(),
            entries,
        }
    }

    /// Builds a tensor from explicit basis evaluations keyed by exponent
    /// vector (e.g. a wedge table). Missing entries are zero.
    pub fn from_table(
        num_vars: usize,
        degree: u32,
        entries: BTreeMap<Vec<u16>, S>,
    ) -> Self {
        for expo in entries.keys() {
            assert_eq!(expo.len(), num_vars, "exponent length mismatch");
            let total: u32 = expo.iter().map(|&e| u32::from(e)).sum();
            assert_eq!(total, degree, "exponent degree mismatch");
        }
        SymmetricTensor {
            num_vars,
            degree,
            entries,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The tensor entry on the basis multiset `α`.
    pub fn entry(&self, expo: &[u16]) -> S {
        self.entries.get(expo).cloned().unwrap_or_else(S::zero)
    }

    /// The diagonal restriction `v ↦ T(v,…,v)` as a polynomial
    /// (`p_α = T[α]·multinomial(α)`), inverse to [`Self::polarize`].
    pub fn to_poly(&self) -> HomogeneousPoly<S> {
        let mut out = HomogeneousPoly::zero(self.num_vars, self.degree);
        for (expo, value) in &self.entries {
            let weight = S::from_int(multinomial(expo));
            out.add_term(expo.clone(), value.clone() * weight);
        }
        out
    }

    /// Evaluates the tensor on `degree` vectors by expanding over all index
    /// tuples (`num_vars^degree` terms; intended for small models).
    pub fn eval(&self, slots: &[Vec<S>]) -> S {
        assert_eq!(
            slots.len(),
            self.degree as usize,
            "need one vector per tensor slot"
        );
        for slot in slots {
            assert_eq!(slot.len(), self.num_vars, "slot length mismatch");
        }
        let d = slots.len();
        if d == 0 {
            return self.entry(&[]);
        }
        let mut idx = vec![0usize; d];
        let mut acc = S::zero();
        loop {
            let mut expo = vec![0u16; self.num_vars];
            for &i in &idx {
                expo[i] += 1;
            }
            let value = self.entry(&expo);
            if !value.is_zero() {
                let term = idx
                    .iter()
                    .enumerate()
                    .fold(value, |acc, (slot, &i)| acc * slots[slot][i].clone());
                acc = acc + term;
            }
            // Odometer increment over the index tuple.
            let mut j = 0;
            loop {
                idx[j] += 1;
                if idx[j] < self.num_vars {
                    break;
                }
                idx[j] = 0;
                j += 1;
                if j == d {
                    return acc;
                }
            }
        }
    }

    /// Maps the scalars of the tensor.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SymmetricTensor<T> {
        SymmetricTensor {
            num_vars: self.num_vars,
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|(expo, value)| (expo.clone(), f(value)))
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Intersection models
// ---------------------------------------------------------------------------

/// Intersection data of a compact manifold of real dimension `4n`,
/// restricted to a `b2`-dimensional subspace of its second cohomology: the
/// top intersection polynomial `η ↦ ∫ η^{2n}`, optionally a Kähler class
/// (used as a positivity witness when resolving signs), and optionally an
/// explicit multilinear table for mixed products.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionModel<S> {
    /// Number of tracked second-cohomology coordinates.
    pub b2: usize,
    /// Quarter of the real dimension; the manifold has complex dimension
    /// `2n`.
    pub n: usize,
    /// The polynomial `η ↦ ∫ η^{2n}`, homogeneous of degree `2n` in `b2`
    /// variables.
    pub top_poly: HomogeneousPoly<S>,
    /// Coordinates of a Kähler class, when one is recorded.
    pub kahler_class: Option<Vec<S>>,
    /// Explicit multilinear table. When absent, mixed products fall back to
    /// the polarization of `top_poly`.
    pub multilinear: Option<SymmetricTensor<S>>,
}

impl<S: Scalar> IntersectionModel<S> {
    /// Validates the declared shape: `top_poly` must have `b2` variables and
    /// degree `2n` with `n ≥ 1`.
    pub fn new(
        b2: usize,
        n: usize,
        top_poly: HomogeneousPoly<S>,
    ) -> Result<Self, HkError> {
        let expected_degree = 2 * n as u32;
        if n == 0 || top_poly.num_vars() != b2 || top_poly.degree() != expected_degree {
            return Err(HkError::ModelShape {
                num_vars: top_poly.num_vars(),
                degree: top_poly.degree(),
                b2,
                expected_degree,
            });
        }
        Ok(IntersectionModel {
            b2,
            n,
            top_poly,
            kahler_class: None,
            multilinear: None,
        })
    }

    /// Records a Kähler class used as the positivity witness.
    pub fn with_kahler_class(mut self, kappa: Vec<S>) -> Self {
        assert_eq!(kappa.len(), self.b2, "Kähler class length mismatch");
        self.kahler_class = Some(kappa);
        self
    }

    /// Records an explicit multilinear table.
    pub fn with_multilinear(mut self, tensor: SymmetricTensor<S>) -> Self {
        assert_eq!(tensor.num_vars(), self.b2, "table variable count mismatch");
        assert_eq!(tensor.degree(), 2 * self.n as u32, "table degree mismatch");
        self.multilinear = Some(tensor);
        self
    }

    /// The symmetric multilinear extension used for mixed products: the
    /// recorded table when present, otherwise the polarization of a nonzero
    /// `top_poly` (the symmetric extension of a homogeneous form is unique).
    pub fn multilinear_tensor(&self) -> Result<SymmetricTensor<S>, HkError> {
        if let Some(tensor) = &self.multilinear {
            return Ok(tensor.clone());
        }
        if self.top_poly.is_zero() {
            return Err(HkError::MissingMultilinearData);
        }
        Ok(SymmetricTensor::polarize(&self.top_poly))
    }
}

// ---------------------------------------------------------------------------
// Fujiki extraction and the Beauville–Bogomolov expression
// ---------------------------------------------------------------------------

/// Recovers the quadratic form and constant with `∫ η^{2n} = c·q(η,η)ⁿ`
/// from a model, resolving the overall sign of the representative.
///
/// For odd `n`, flipping `q` flips `c`, so the representative with `c > 0`
/// is canonical; a recorded Kähler class must then satisfy `q(κ,κ) > 0` or
/// the data is inconsistent. For even `n` the power is blind to the sign of
/// `q`, so a Kähler class is required and the sign is fixed by
/// `q(κ,κ) > 0`. Failures of either rule report [`HkError::SignAmbiguous`].
pub fn fujiki_extract<S: RealScalar>(
    model: &IntersectionModel<S>,
) -> Result<QuadraticFormOnSpan<S>, HkError> {
    let mut q = extract_quadric(&model.top_poly, model.n)?;
    let witness = |kappa: &[S]| kappa.iter().map(Scalar::render).collect::<Vec<_>>();
    let kappa_sign = |q: &QuadraticFormOnSpan<S>, kappa: &[S]| {
        assert_eq!(kappa.len(), q.k(), "Kähler class length mismatch");
        let value = q.quad(kappa);
        let kappa_scale = kappa.iter().map(Scalar::mag).fold(1.0, f64::max);
        if value.negligible_at(q.gram.max_mag() * kappa_scale * kappa_scale) {
            None
        } else {
            value.real_sign()
        }
    };

    if model.n % 2 == 1 {
        match (
            q.c.real_sign(),
            q.c.negligible_at(model.top_poly.max_mag()),
        ) {
            (Some(-1), false) => q.flip_sign(model.n, Normalization::PositiveConstant),
            (Some(1), false) => q.normalization = Normalization::PositiveConstant,
            _ => return Err(HkError::SignAmbiguous),
        }
        if let Some(kappa) = &model.kahler_class {
            if kappa_sign(&q, kappa) != Some(1) {
                return Err(HkError::SignAmbiguous);
            }
        }
    } else {
        let kappa = model.kahler_class.as_ref().ok_or(HkError::SignAmbiguous)?;
        match kappa_sign(&q, kappa) {
            Some(1) => {
                q.normalization = Normalization::PositiveOnWitness {
                    witness: witness(kappa),
                };
            }
            Some(-1) => q.flip_sign(
                model.n,
                Normalization::PositiveOnWitness {
                    witness: witness(kappa),
                },
            ),
            _ => return Err(HkError::SignAmbiguous),
        }
    }
    Ok(q)
}

/// The normalization integral `∫ (Ω ∧ Ω̄)ⁿ` of a holomorphic symplectic
/// class. [`bbf_from_ring`] is proportional to the quadratic form exactly
/// when this integral is 1.
pub fn omega_normalization<S: Complexify>(
    model: &IntersectionModel<S>,
    omega_class: &[S::C],
) -> Result<S::C, HkError> {
    assert_eq!(omega_class.len(), model.b2, "class length mismatch");
    let tensor = model
        .multilinear_tensor()?
        .convert(|x| x.clone().complexify());
    let omega = omega_class.to_vec();
    let omega_bar: Vec<S::C> = omega_class.iter().map(Scalar::conj).collect();
    let mut slots = vec![omega; model.n];
    slots.extend(std::iter::repeat_n(omega_bar, model.n));
    Ok(tensor.eval(&slots))
}

/// Evaluates the Beauville–Bogomolov expression for `q(η,η)` directly from
/// intersection numbers:
///
/// `(n/2)·∫ η∧η∧Ω^{n−1}∧Ω̄^{n−1} + (1−n)·(∫ η∧Ω^{n−1}∧Ω̄ⁿ)·(∫ η∧Ωⁿ∧Ω̄^{n−1})`
///
/// where `Ω` is the holomorphic symplectic class. When `Ω` is normalized so
/// that `∫ (Ω∧Ω̄)ⁿ = 1` (see [`omega_normalization`]) the result equals the
/// extracted `q(η,η)` up to one positive constant `μ` independent of `η`;
/// for `n = 1` the second term vanishes and no normalization is needed.
/// Integrals are taken from the model's multilinear tensor, so an explicit
/// wedge table is honored when recorded.
pub fn bbf_from_ring<S: Complexify>(
    model: &IntersectionModel<S>,
    omega_class: &[S::C],
    eta: &[S::C],
) -> Result<S::C, HkError> {
    assert_eq!(omega_class.len(), model.b2, "class length mismatch");
    assert_eq!(eta.len(), model.b2, "class length mismatch");
    let tensor = model
        .multilinear_tensor()?
        .convert(|x| x.clone().complexify());
    let n = model.n;
    let omega = omega_class.to_vec();
    let omega_bar: Vec<S::C> = omega_class.iter().map(Scalar::conj).collect();
    let eta = eta.to_vec();

    let mut slots = vec![eta.clone(), eta.clone()];
    slots.extend(std::iter::repeat_n(omega.clone(), n - 1));
    slots.extend(std::iter::repeat_n(omega_bar.clone(), n - 1));
    let square_term = S::C::from_ratio(n as i64, 2) * tensor.eval(&slots);

    let mut slots = vec![eta.clone()];
    slots.extend(std::iter::repeat_n(omega.clone(), n - 1));
    slots.extend(std::iter::repeat_n(omega_bar.clone(), n));
    let conjugate_heavy = tensor.eval(&slots);

    let mut slots = vec![eta];
    slots.extend(std::iter::repeat_n(omega, n));
    slots.extend(std::iter::repeat_n(omega_bar, n - 1));
    let holomorphic_heavy = tensor.eval(&slots);

    Ok(square_term + S::C::from_int(1 - n as i64) * conjugate_heavy * holomorphic_heavy)
}

// ---------------------------------------------------------------------------
// The pairing identity
// ---------------------------------------------------------------------------

/// Sampling parameters for [`pairing_check`] and
/// [`kernel_class_inconsistent`].
#[derive(Clone, Copy, Debug)]
pub struct PairingOptions {
    /// Number of `(α, β)` pairs to verify.
    pub samples: usize,
    /// Seed for the deterministic sample stream.
    pub seed: u64,
}

impl Default for PairingOptions {
    fn default() -> Self {
        PairingOptions {
            samples: 50,
            seed: 0,
        }
    }
}

/// Outcome of checking the pairing identity on sampled classes.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingReport<S> {
    /// Constant fitted from the first sampled class with a nonzero
    /// self-pairing.
    pub c_gamma: S,
    /// Largest residual magnitude over the sampled pairs.
    pub max_residual: f64,
    /// Number of `(α, β)` pairs checked.
    pub samples: usize,
    /// Whether every residual was negligible at its working scale.
    pub consistent: bool,
}

fn power<S: Scalar>(base: &S, exponent: usize) -> S {
    (0..exponent).fold(S::one(), |acc, _| acc * base.clone())
}

fn draw_class<S: Scalar>(rng: &mut ChaCha8Rng, len: usize) -> Vec<S> {
    (0..len).map(|_| S::from_int(rng.gen_range(-9..=9))).collect()
}

/// Verifies the pairing identity `γ·α^{2m−1}·β = c_γ·q(α,α)^{m−1}·q(α,β)`
/// against an external evaluator for the left side: fits
/// `c_γ = F(α,α)/q(α,α)^m` at the first sampled `α` with a nonzero
/// self-pairing, then measures residuals over seeded random `(α, β)` pairs.
/// When the evaluator is the polarization of `c·qᵐ` itself, the fitted
/// constant is exactly `c` and every residual vanishes.
pub fn pairing_check<S, F>(
    model: &IntersectionModel<S>,
    gamma_data: F,
    m: usize,
    q: &QuadraticFormOnSpan<S>,
    options: PairingOptions,
) -> Result<PairingReport<S>, HkError>
where
    S: Scalar,
    F: Fn(&[S], &[S]) -> S,
{
    assert!(m >= 1, "need a positive exponent");
    assert_eq!(q.k(), model.b2, "form size mismatch");
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let self_pairing_scale = q.gram.max_mag() * 81.0 * model.b2 as f64;

    let mut c_gamma = None;
    for _ in 0..(100 + options.samples) {
        let alpha: Vec<S> = draw_class(&mut rng, model.b2);
        let self_pairing = q.quad(&alpha);
        if self_pairing.negligible_at(self_pairing_scale) {
            continue;
        }
        let denominator = power(&self_pairing, m);
        let inv = denominator.inv().expect("nonzero value has an inverse");
        c_gamma = Some(gamma_data(&alpha, &alpha) * inv);
        break;
    }
    let c_gamma = c_gamma.ok_or(HkError::NoNonNullAlpha)?;

    let mut max_residual = 0.0f64;
    let mut consistent = true;
    for _ in 0..options.samples {
        let alpha: Vec<S> = draw_class(&mut rng, model.b2);
        let beta: Vec<S> = draw_class(&mut rng, model.b2);
        let lhs = gamma_data(&alpha, &beta);
        let rhs = c_gamma.clone()
            * power(&q.quad(&alpha), m - 1)
            * q.pair(&alpha, &beta);
        let residual = lhs.clone() - rhs.clone();
        if !residual.negligible_at(lhs.mag().max(rhs.mag())) {
            consistent = false;
        }
        max_residual = max_residual.max(residual.mag());
    }
    Ok(PairingReport {
        c_gamma,
        max_residual,
        samples: options.samples,
        consistent,
    })
}

/// Decides whether a claimed pairing-kernel class contradicts a
/// nondegenerate form. If `F(α, β)` vanishes for every sampled `α`, the
/// pairing identity forces `q(α, β) = 0` for all `α`; a nondegenerate `q`
/// then admits no nonzero such `β`, so a nonzero claimed kernel class flags
/// the data as inconsistent — the injectivity argument for restriction of
/// second cohomology. Returns `false` when `β` is zero, when some sampled
/// pairing is nonzero, or when `q` is itself degenerate (a genuine radical
/// direction is consistent).
pub fn kernel_class_inconsistent<S, F>(
    gamma_data: F,
    q: &QuadraticFormOnSpan<S>,
    beta: &[S],
    options: PairingOptions,
) -> bool
where
    S: Scalar,
    F: Fn(&[S], &[S]) -> S,
{
    assert_eq!(beta.len(), q.k(), "class length mismatch");
    let beta_scale = beta.iter().map(Scalar::mag).fold(0.0, f64::max);
    if beta.iter().all(|b| b.negligible_at(beta_scale)) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut pairings = Vec::with_capacity(options.samples);
    let mut scale = 0.0f64;
    for _ in 0..options.samples.max(1) {
        let alpha: Vec<S> = draw_class(&mut rng, q.k());
        scale = scale.max(gamma_data(&alpha, &alpha).mag());
        pairings.push(gamma_data(&alpha, beta));
    }
    let vanished = pairings.iter().all(|value| value.negligible_at(scale));
    vanished && rank(&q.gram) == q.k()
}

// ---------------------------------------------------------------------------
// Torus and subvariety obstructions
// ---------------------------------------------------------------------------

/// The complex-dimension lower bound for an absolutely trianalytic torus in
/// a hyperkähler manifold with second Betti number `b2`:
/// `2^{⌊(b₂−1)/2⌋−1}`, clamped below by the quaternionic minimum of 2 (such
/// a torus is itself hyperkähler, so its real dimension is a positive
/// multiple of four).
pub fn torus_bound(b2: usize) -> u128 {
    assert!(b2 >= 3, "need b2 >= 3");
    let exponent = (b2 - 1) / 2 - 1;
    assert!(exponent < 128, "bound exceeds u128");
    (1u128 << exponent).max(2)
}

/// Everything the dimension obstructions say about absolutely trianalytic
/// tori in a hyperkähler manifold with the given second Betti number and
/// complex dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub b2: usize,
    pub manifold_dim_c: usize,
    /// `2^{⌊(b₂−1)/2⌋−1}`, from the rank bound on the torus.
    pub naive_torus_bound: u128,
    /// The two Clifford algebras acting on the torus's first cohomology:
    /// `Cl(r−1, s)` and `Cl(s−1, r)` for `(r, s) = (b₂−3, 3)`.
    pub clifford_signatures: (Signature, Signature),
    /// Minimal real dimension of a nontrivial module over either algebra.
    pub refined_b1_bound: u128,
    /// `refined_b1_bound / 2`: the module bound on the torus's complex
    /// dimension.
    pub refined_torus_dim_c_bound: u128,
    /// Largest complex dimension of a proper trianalytic subvariety
    /// (`manifold_dim_c − 2`).
    pub max_proper_subvariety_dim_c: usize,
    /// Whether a torus evades both dimension obstructions.
    pub torus_possible: bool,
    /// Human-readable explanation of the verdict.
    pub narrative: String,
}

/// Runs both torus obstructions for a hyperkähler manifold with second
/// Betti number `b2` and complex dimension `manifold_dim_c`.
///
/// The induced structure on a torus's first cohomology makes it a module
/// over the Clifford algebras `Cl(r−1, s)` and `Cl(s−1, r)`, where
/// `(r, s) = (b₂−3, 3)` is the signature of the restricted form. A torus is
/// excluded once either the rank bound ([`torus_bound`]) or the minimal
/// module dimension over those algebras exceeds the manifold's own complex
/// dimension; the verdict claims only non-obstruction, never existence.
pub fn ogrady_verdict(b2: usize, manifold_dim_c: usize) -> ObstructionVerdict {
    assert!(b2 >= 4, "need b2 >= 4");
    assert!(
        manifold_dim_c >= 2 && manifold_dim_c.is_multiple_of(2),
        "need an even complex dimension >= 2"
    );
    let (r, s) = (b2 - 3, 3usize);
    let first = Signature::new(r - 1, s);
    let second = Signature::new(s - 1, r);
    let refined_b1_bound = minimal_module_dim(first, ScalarField::Real, false)
        .min(minimal_module_dim(second, ScalarField::Real, false));
    let refined_torus_dim_c_bound = refined_b1_bound / 2;
    let naive_torus_bound = torus_bound(b2);
    let dim_c = manifold_dim_c as u128;
    let torus_possible = naive_torus_bound <= dim_c && refined_torus_dim_c_bound <= dim_c;

    let algebras = format!(
        "Cl({},{}) and Cl({},{})",
        first.r, first.s, second.r, second.s
    );
    let narrative = if naive_torus_bound > dim_c {
        format!(
            "An absolutely trianalytic torus would need complex dimension at \
             least {naive_torus_bound} by the rank bound for b2 = {b2}, but \
             the manifold has complex dimension {manifold_dim_c}; no such \
             torus exists."
        )
    } else if refined_torus_dim_c_bound > dim_c {
        format!(
            "The rank bound (complex dimension >= {naive_torus_bound}) does \
             not exclude a torus, but its first cohomology must be a module \
             over {algebras}, forcing b1 >= {refined_b1_bound} and complex \
             dimension >= {refined_torus_dim_c_bound}; the manifold has \
             complex dimension {manifold_dim_c}, so no such torus exists."
        )
    } else {
        format!(
            "Neither bound exceeds the manifold's complex dimension \
             {manifold_dim_c} (rank bound {naive_torus_bound}, module bound \
             {refined_torus_dim_c_bound} over {algebras}); the method does \
             not obstruct a torus, and proper trianalytic subvarieties may \
             have complex dimension up to {max_proper}.",
            max_proper = manifold_dim_c - 2
        )
    };

    ObstructionVerdict {
        b2,
        manifold_dim_c,
        naive_torus_bound,
        clifford_signatures: (first, second),
        refined_b1_bound,
        refined_torus_dim_c_bound,
        max_proper_subvariety_dim_c: manifold_dim_c - 2,
        torus_possible,
        narrative,
    }
}

/// Whether a candidate factor is admissible inside an ambient manifold:
/// second Betti numbers can only grow under passage to the factors of an
/// absolutely trianalytic decomposition, so a factor with
/// `b2_candidate < b2_ambient` is ruled out.
pub fn b2_comparison_verdict(b2_ambient: usize, b2_candidate: usize) -> bool {
    b2_candidate >= b2_ambient
}
