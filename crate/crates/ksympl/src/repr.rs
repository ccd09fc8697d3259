//! Concrete matrix representations of Clifford algebras, the blade-group
//! averaged invariant metric, and the induced span of two-forms.
//!
//! Seed conventions (fixed so outputs are reproducible bit-for-bit):
//!
//! * pure minus signatures use left-multiplication matrices of the
//!   Cayley–Dickson algebras — the complex unit for one generator, the
//!   quaternions `i, j, k` for two or three, the octonion imaginary units
//!   for four to seven, and a doubled octonion block construction for eight;
//! * pure plus signatures use `[1]`, then the Pauli pair
//!   `[[0,1],[1,0]], [[1,0],[0,-1]]`, then a tensor step onto the pure minus
//!   seeds;
//! * mixed signatures strip `(1,1)` blocks by tensoring with an explicit
//!   hyperbolic 2x2 pair;
//! * signatures deeper than eight generators in one sign tensor with the
//!   eight-generator module (Bott step).

use crate::clifford::Signature;
use crate::ksymplectic::TwoFormSpan;
use crate::linalg::Mat;
use crate::scalar::{RealScalar, Scalar};
use thiserror::Error;

/// Errors from representation-level operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReprError {
    /// The invariant-metric averaging requires the generating form to be
    /// negative definite with unit lengths (Gram diagonal exactly -1).
    #[error("generating quadratic form is not negative definite with unit Gram entries")]
    NotNegativeDefinite,
    /// A generator fails to be skew-adjoint for the supplied metric.
    #[error("generator {index} is not skew-adjoint for the metric")]
    NotSkewAdjoint { index: usize },
}

/// A module over a Clifford algebra: generator endomorphisms together with
/// the diagonal Gram matrix of the generating quadratic space, satisfying
/// `rho(e_i) rho(e_j) + rho(e_j) rho(e_i) = 2 gram_ij Id`.
///
/// `signature` is populated when all Gram entries are exactly +-1 (counting
/// minuses and pluses); modules built from verified spans may carry general
/// nonzero rational Gram entries instead, because rescaling generators to
/// unit length needs square roots the exact backend does not have.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordModule<S> {
    pub signature: Option<Signature>,
    pub generators: Vec<Mat<S>>,
    pub gram: Vec<S>,
}

impl<S: Scalar> CliffordModule<S> {
    /// Wraps generators and a diagonal Gram; derives `signature` when the
    /// Gram entries are all exactly +-1.
    pub fn new(generators: Vec<Mat<S>>, gram: Vec<S>) -> Self {
        assert_eq!(generators.len(), gram.len(), "one Gram entry per generator");
        let n = generators.first().map_or(0, Mat::rows);
        for g in &generators {
            assert!(
                g.rows() == n && g.cols() == n,
                "generators must be square of equal size"
            );
        }
        let one = S::one();
        let minus_one = -S::one();
        let mut r = 0usize;
        let mut s = 0usize;
        let mut all_unit = true;
        for x in &gram {
            if *x == minus_one {
                r += 1;
            } else if *x == one {
                s += 1;
            } else {
                all_unit = false;
            }
        }
        let signature = all_unit.then(|| Signature::new(r, s));
        CliffordModule {
            signature,
            generators,
            gram,
        }
    }

    /// Dimension `N` of the module.
    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Mat::rows)
    }
}

/// Outcome of checking the Clifford relations of a module.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    /// All anticommutators match `2 gram_ij Id` (exactly on exact backends,
    /// within relative tolerance on float backends) and the module is
    /// nontrivial.
    pub passed: bool,
    /// Largest entry magnitude among the defect matrices.
    pub max_deviation: f64,
    /// Generator pairs `(i, j)`, `i <= j`, whose relation fails.
    pub failing_pairs: Vec<(usize, usize)>,
    /// False when every generator is the zero matrix.
    pub nontrivial: bool,
}

/// Checks `rho(e_i) rho(e_j) + rho(e_j) rho(e_i) = 2 gram_ij Id` for all
/// pairs. Failures are reported, never thrown.
pub fn verify_clifford_relations<S: Scalar>(module: &CliffordModule<S>) -> RelationReport {
    let n = module.dim();
    let k = module.generators.len();
    let two = S::from_int(2);
    let mut max_deviation = 0.0f64;
    let mut failing_pairs = Vec::new();
    let scale = module
        .generators
        .iter()
        .map(Mat::max_mag)
        .fold(1.0, f64::max)
        .powi(2);
    for i in 0..k {
        for j in i..k {
            let gi = &module.generators[i];
            let gj = &module.generators[j];
            let anti = gi.mul(gj).add(&gj.mul(gi));
            let expected = if i == j {
                Mat::scaled_identity(n, two.clone() * module.gram[i].clone())
            } else {
                Mat::zeros(n, n)
            };
            let defect = anti.sub(&expected);
            let dev = defect.max_mag();
            let ok = if S::EXACT {
                dev == 0.0
            } else {
                dev <= crate::scalar::REL_EQ_TOL * scale
            };
            if !ok {
                failing_pairs.push((i, j));
            }
            max_deviation = max_deviation.max(dev);
        }
    }
    let nontrivial = module.generators.iter().any(|g| !g.is_zero());
    RelationReport {
        passed: failing_pairs.is_empty() && nontrivial,
        max_deviation,
        failing_pairs,
        nontrivial,
    }
}

// ---------------------------------------------------------------------------
// Cayley-Dickson seeds
// ---------------------------------------------------------------------------

/// Basis product in the Cayley–Dickson algebra of dimension `dim`
/// (1, 2, 4, 8 = reals, complexes, quaternions, octonions):
/// `e_i e_j = sign * e_k`, returned as `(k, sign)`.
fn cd_mul(dim: usize, i: usize, j: usize) -> (usize, i8) {
    debug_assert!(i < dim && j < dim);
    if dim == 1 {
        return (0, 1);
    }
    let h = dim / 2;
    // conj(e_t) = e_t for t = 0, -e_t otherwise, in every Cayley-Dickson step.
    let conj_sign = |t: usize| if t == 0 { 1i8 } else { -1i8 };
    match (i < h, j < h) {
        (true, true) => cd_mul(h, i, j),
        (true, false) => {
            // (a,0)(0,d) = (0, d a)
            let (k, s) = cd_mul(h, j - h, i);
            (h + k, s)
        }
        (false, true) => {
            // (0,b)(c,0) = (0, b conj(c))
            let (k, s) = cd_mul(h, i - h, j);
            (h + k, s * conj_sign(j))
        }
        (false, false) => {
            // (0,b)(0,d) = (-conj(d) b, 0)
            let (k, s) = cd_mul(h, j - h, i - h);
            (k, -s * conj_sign(j - h))
        }
    }
}

/// Left-multiplication matrix of the basis element `e_idx` in the
/// Cayley–Dickson algebra of dimension `dim`.
fn cd_left_mul<S: Scalar>(dim: usize, idx: usize) -> Mat<S> {
    let mut out = Mat::zeros(dim, dim);
    for j in 0..dim {
        let (k, sign) = cd_mul(dim, idx, j);
        out[(k, j)] = S::from_int(sign as i64);
    }
    out
}

/// Generators for the pure minus signature `(k, 0)` on the minimal module.
fn pure_minus_generators<S: Scalar>(k: usize) -> Vec<Mat<S>> {
    match k {
        0 => Vec::new(),
        1 => vec![cd_left_mul(2, 1)],
        2 | 3 => (1..=k).map(|i| cd_left_mul(4, i)).collect(),
        4..=7 => (1..=k).map(|i| cd_left_mul(8, i)).collect(),
        8 => {
            // Double the octonion block: G_i = [[0, L_i], [L_i, 0]] for the
            // seven octonion generators, and G_8 = [[0, -I], [I, 0]].
            let eye: Mat<S> = Mat::identity(8);
            let mut gens: Vec<Mat<S>> = (1..=7)
                .map(|i| {
                    let l: Mat<S> = cd_left_mul(8, i);
                    off_diagonal_pair(&l, &l)
                })
                .collect();
            gens.push(off_diagonal_pair(&eye.neg(), &eye));
            gens
        }
        _ => {
            // Bott step: Cl(k,0) from Cl(k-8,0) tensored with the
            // eight-generator module and its volume element.
            let base = pure_minus_generators::<S>(8);
            let vol = base
                .iter()
                .fold(Mat::identity(16), |acc, g| acc.mul(g));
            let rest = pure_minus_generators::<S>(k - 8);
            let rest_dim = rest.first().map_or(1, Mat::rows);
            let mut gens: Vec<Mat<S>> = base
                .iter()
                .map(|g| g.kron(&Mat::identity(rest_dim)))
                .collect();
            gens.extend(rest.iter().map(|g| vol.kron(g)));
            gens
        }
    }
}

/// `[[0, upper], [lower, 0]]` as one matrix.
fn off_diagonal_pair<S: Scalar>(upper: &Mat<S>, lower: &Mat<S>) -> Mat<S> {
    let n = upper.rows();
    let mut out = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            out[(i, n + j)] = upper[(i, j)].clone();
            out[(n + i, j)] = lower[(i, j)].clone();
        }
    }
    out
}

/// Generators for the pure plus signature `(0, k)` on the minimal module.
fn pure_plus_generators<S: Scalar>(k: usize) -> Vec<Mat<S>> {
    let sigma_x = || Mat::<S>::from_int_rows(&[vec![0, 1], vec![1, 0]]);
    let sigma_z = || Mat::<S>::from_int_rows(&[vec![1, 0], vec![0, -1]]);
    match k {
        0 => Vec::new(),
        1 => vec![Mat::identity(1)],
        2 => vec![sigma_x(), sigma_z()],
        _ => {
            // Tensor step: two new plus generators 1 (x) sigma, old minus
            // generators gamma_i (x) (sigma_x sigma_z), which squares to -1.
            let inner = pure_minus_generators::<S>(k - 2);
            let inner_dim = inner.first().map_or(1, Mat::rows);
            let eye = Mat::<S>::identity(inner_dim);
            let xz = sigma_x().mul(&sigma_z());
            let mut gens = vec![eye.kron(&sigma_x()), eye.kron(&sigma_z())];
            gens.extend(inner.iter().map(|g| g.kron(&xz)));
            gens
        }
    }
}

/// Generators of `Cl(r,s)` on its minimal module, minus generators first.
fn minimal_generators<S: Scalar>(sig: Signature) -> Vec<Mat<S>> {
    let strip = sig.r.min(sig.s);
    if strip == 0 {
        return if sig.r > 0 {
            pure_minus_generators(sig.r)
        } else {
            pure_plus_generators(sig.s)
        };
    }
    // Strip one (1,1) block: new minus and plus generators act on the 2x2
    // factor; previous generators tensor with the product f1 f2, which
    // squares to +1 and anticommutes with both.
    let inner = minimal_generators::<S>(Signature::new(sig.r - 1, sig.s - 1));
    let inner_dim = inner.first().map_or(1, Mat::rows);
    let eye = Mat::<S>::identity(inner_dim);
    let f1 = Mat::<S>::from_int_rows(&[vec![0, -1], vec![1, 0]]);
    let f2 = Mat::<S>::from_int_rows(&[vec![0, 1], vec![1, 0]]);
    let f12 = f1.mul(&f2);
    let inner_count_minus = sig.r - 1;
    let mut minus_gens = vec![eye.kron(&f1)];
    let mut plus_gens = Vec::new();
    for (t, g) in inner.iter().enumerate() {
        let lifted = g.kron(&f12);
        if t < inner_count_minus {
            minus_gens.push(lifted);
        } else {
            plus_gens.push(lifted);
        }
    }
    plus_gens.push(eye.kron(&f2));
    minus_gens.extend(plus_gens);
    minus_gens
}

/// Builds the module of `copies` direct summands of the minimal module of
/// `Cl(r,s)`, with generators in minus-first order and Gram diagonal
/// `(-1, ..., -1, +1, ..., +1)`.
pub fn gamma_representation<S: Scalar>(sig: Signature, copies: usize) -> CliffordModule<S> {
    assert!(copies >= 1, "at least one copy");
    let gens = minimal_generators::<S>(sig);
    let gens: Vec<Mat<S>> = gens
        .into_iter()
        .map(|g| g.direct_sum_copies(copies))
        .collect();
    let gram: Vec<S> = (0..sig.dim())
        .map(|i| S::from_int(sig.metric(i) as i64))
        .collect();
    CliffordModule::new(gens, gram)
}

// ---------------------------------------------------------------------------
// Invariant metric and embedded two-forms
// ---------------------------------------------------------------------------

/// Averages the standard inner product over the finite blade group
/// `{+- rho(e_{i1}) ... rho(e_{ig})}` of the module. Requires the generating
/// form to be negative definite with Gram entries exactly -1, which makes
/// the blade group finite; the result is symmetric positive definite and
/// every generator is skew-adjoint for it:
/// `rho(e_i)^T g = -g rho(e_i)`.
pub fn invariant_metric<S: Scalar>(module: &CliffordModule<S>) -> Result<Mat<S>, ReprError> {
    let minus_one = -S::one();
    if module.gram.iter().any(|x| *x != minus_one) {
        return Err(ReprError::NotNegativeDefinite);
    }
    let k = module.generators.len();
    let n = module.dim();
    // rho(e_S) for every subset S, by lowest-set-bit dynamic programming;
    // the +- signs of the full group square away in rho^T rho, so subsets
    // suffice (each signed pair contributes the same term twice).
    let mut blade_reps: Vec<Mat<S>> = Vec::with_capacity(1 << k);
    blade_reps.push(Mat::identity(n));
    for mask in 1usize..(1 << k) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let m = module.generators[low].mul(&blade_reps[rest]);
        blade_reps.push(m);
    }
    let mut sum = Mat::zeros(n, n);
    for rep in &blade_reps {
        sum = sum.add(&rep.transpose().mul(rep));
    }
    let denom = S::from_int(1i64 << k).inv().expect("2^k is nonzero");
    Ok(sum.scalar_mul(&denom))
}

/// The span of two-forms `omega_i(u, v) = g(e_i . u, v)`, i.e. the matrices
/// `rho(e_i)^T g`. Each is antisymmetric precisely because the generators
/// are `g`-skew-adjoint; violations surface as `NotSkewAdjoint`.
pub fn embed_forms<S: Scalar>(
    module: &CliffordModule<S>,
    g: &Mat<S>,
) -> Result<TwoFormSpan<S>, ReprError> {
    let mut forms = Vec::with_capacity(module.generators.len());
    for (index, rho) in module.generators.iter().enumerate() {
        let w = rho.transpose().mul(g);
        if !w.is_antisymmetric() {
            return Err(ReprError::NotSkewAdjoint { index });
        }
        forms.push(w);
    }
    TwoFormSpan::new(forms, true).map_err(|_| ReprError::NotSkewAdjoint {
        index: usize::MAX,
    })
}

/// End-to-end construction of a `k`-symplectic span from the negative
/// definite signature `(k, 0)`: build the gamma representation, enlarge the
/// copy count so the module dimension is a multiple of four, average the
/// invariant metric, and embed the forms.
pub fn construct_span<S: RealScalar>(
    k: usize,
    copies: usize,
) -> (CliffordModule<S>, Mat<S>, TwoFormSpan<S>) {
    assert!(k >= 1, "need at least one generator");
    assert!(copies >= 1);
    let sig = Signature::new(k, 0);
    let probe = gamma_representation::<S>(sig, 1);
    let minimal_dim = probe.dim();
    // Smallest multiple of `copies` making the total dimension 4n.
    let mut m = copies;
    while !(minimal_dim * m).is_multiple_of(4) {
        m += copies.max(1);
    }
    let module = if m == 1 {
        probe
    } else {
        gamma_representation::<S>(sig, m)
    };
    let g = invariant_metric(&module).expect("pure minus Gram is negative definite");
    let span = embed_forms(&module, &g).expect("averaged metric makes generators skew-adjoint");
    (module, g, span)
}
