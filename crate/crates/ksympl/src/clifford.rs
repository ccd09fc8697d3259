//! Real and complex Clifford algebras as concrete finite-dimensional
//! algebras: blade arithmetic over any scalar backend, the three standard
//! involutions, and the classification of `Cl(r,s)` (and its even part) as a
//! sum of matrix algebras over R, C or H.
//!
//! Conventions: `Cl(r,s)` has `r` generators squaring to `-1` followed by `s`
//! generators squaring to `+1`. Blades are indexed by bitmasks over the
//! generators; `e_{i1} ... e_{ig}` with ascending indices is the canonical
//! basis blade for the mask with those bits set.

use crate::linalg::Mat;
use crate::scalar::Scalar;
use serde::Serialize;
use thiserror::Error;

/// Errors from Clifford-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CliffordError {
    /// Operands live in different algebras.
    #[error("multivector signatures do not match")]
    SignatureMismatch,
    /// The supplied element is not a grade-1 vector with square -1.
    #[error("element is not a unit vector with square -1")]
    NotUnitVector,
    /// The supplied element does not lie in the subalgebra generated by the
    /// orthogonal complement of the chosen vector.
    #[error("element is not generated by the orthogonal complement")]
    NotOrthogonal,
}

/// The signature of the generating quadratic space: `r` minus directions
/// followed by `s` plus directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature {
    pub r: usize,
    pub s: usize,
}

impl Signature {
    pub fn new(r: usize, s: usize) -> Self {
        Signature { r, s }
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        self.r + self.s
    }

    /// Number of blades, i.e. the algebra dimension `2^(r+s)`.
    pub fn blade_count(&self) -> usize {
        1usize << self.dim()
    }

    /// `e_i^2` for the 0-based generator index `i`: `-1` for `i < r`,
    /// `+1` otherwise.
    pub fn metric(&self, i: usize) -> i8 {
        assert!(i < self.dim(), "generator index out of range");
        if i < self.r {
            -1
        } else {
            1
        }
    }
}

/// An element of `Cl(r,s)` with one coefficient per blade bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S> {
    sig: Signature,
    coeffs: Vec<S>,
}

/// Sign incurred by reordering the concatenation of two ascending blades
/// into ascending order (counts transpositions across the boundary).
fn reorder_sign(a: u32, b: u32) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: resulting mask and overall sign, including
/// the metric factors from repeated generators.
fn blade_product(sig: Signature, a: u32, b: u32) -> (u32, i8) {
    let mut sign = reorder_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let i = common.trailing_zeros() as usize;
        sign *= sig.metric(i);
        common &= common - 1;
    }
    (a ^ b, sign)
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![S::zero(); sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    /// The generator `e_i` (0-based).
    pub fn basis_vector(sig: Signature, i: usize) -> Self {
        assert!(i < sig.dim());
        Self::blade(sig, 1 << i, S::one())
    }

    /// `coeff` times the canonical blade for `mask`.
    pub fn blade(sig: Signature, mask: u32, coeff: S) -> Self {
        assert!((mask as usize) < sig.blade_count(), "blade mask out of range");
        let mut m = Self::zero(sig);
        m.coeffs[mask as usize] = coeff;
        m
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), sig.blade_count());
        Multivector { sig, coeffs }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: u32) -> &S {
        &self.coeffs[mask as usize]
    }

    pub fn scalar_part(&self) -> S {
        self.coeffs[0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// True when only the empty blade carries a coefficient.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch);
        }
        Ok(Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scalar_mul(&self, k: &S) -> Self {
        self.map(|x| k.clone() * x.clone())
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// The geometric (Clifford) product.
    pub fn geometric_product(&self, other: &Self) -> Result<Self, CliffordError> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch);
        }
        let mut out = Self::zero(self.sig);
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let (mask, sign) = blade_product(self.sig, a as u32, b as u32);
                let term = ca.clone() * cb.clone();
                let term = if sign < 0 { -term } else { term };
                let slot = &mut out.coeffs[mask as usize];
                *slot = slot.clone() + term;
            }
        }
        Ok(out)
    }

    /// The grade-`g` component.
    pub fn grade_part(&self, g: u32) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(mask, c)| {
                    if (mask as u32).count_ones() == g {
                        c.clone()
                    } else {
                        S::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        self.parity_part(0)
    }

    pub fn odd_part(&self) -> Self {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: u32) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(mask, c)| {
                    if (mask as u32).count_ones() % 2 == parity {
                        c.clone()
                    } else {
                        S::zero()
                    }
                })
                .collect(),
        }
    }

    /// The grade involution: `+1` on even grades, `-1` on odd grades.
    pub fn grade_involution(&self) -> Self {
        self.graded_signs(|g| g % 2 == 1)
    }

    /// The reversal antiautomorphism: sign `(-1)^{g(g-1)/2}` on grade `g`.
    pub fn reversal(&self) -> Self {
        self.graded_signs(|g| (g * (g.wrapping_sub(1)) / 2) % 2 == 1)
    }

    /// The bar involution: reversal composed with the grade involution.
    pub fn bar(&self) -> Self {
        self.grade_involution().reversal()
    }

    fn graded_signs(&self, flip: impl Fn(u32) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(mask, c)| {
                    if flip((mask as u32).count_ones()) {
                        -c.clone()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        }
    }

    /// Matrix of left multiplication by `self` in the blade basis.
    pub fn left_mul_matrix(&self) -> Mat<S> {
        let n = self.sig.blade_count();
        let mut out = Mat::<S>::zeros(n, n);
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for b in 0..n {
                let (mask, sign) = blade_product(self.sig, a as u32, b as u32);
                let term = if sign < 0 { -ca.clone() } else { ca.clone() };
                let slot = (mask as usize, b);
                out[slot] = out[slot].clone() + term;
            }
        }
        out
    }

    /// Matrix of right multiplication by `self` in the blade basis.
    pub fn right_mul_matrix(&self) -> Mat<S> {
        let n = self.sig.blade_count();
        let mut out = Mat::<S>::zeros(n, n);
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for b in 0..n {
                let (mask, sign) = blade_product(self.sig, b as u32, a as u32);
                let term = if sign < 0 { -ca.clone() } else { ca.clone() };
                let slot = (mask as usize, b);
                out[slot] = out[slot].clone() + term;
            }
        }
        out
    }
}

/// The three standard involutions of a multivector, as a tuple
/// `(tau, transpose, bar)`: the grade involution, the reversal, and their
/// composition.
pub fn involutions<S: Scalar>(a: &Multivector<S>) -> (Multivector<S>, Multivector<S>, Multivector<S>) {
    (a.grade_involution(), a.reversal(), a.bar())
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// The base ring of a matrix-algebra summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseRing {
    Real,
    Complex,
    Quaternion,
}

impl BaseRing {
    /// Real dimension of the ring itself.
    pub fn real_dim(&self) -> u128 {
        match self {
            BaseRing::Real => 1,
            BaseRing::Complex => 2,
            BaseRing::Quaternion => 4,
        }
    }
}

/// One simple summand `Mat(size, ring)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixSummand {
    pub size: u64,
    pub ring: BaseRing,
}

/// A finite-dimensional semisimple algebra as a sum of matrix algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraDescription {
    pub summands: Vec<MatrixSummand>,
}

impl AlgebraDescription {
    fn simple(size: u64, ring: BaseRing) -> Self {
        AlgebraDescription {
            summands: vec![MatrixSummand { size, ring }],
        }
    }

    fn double(size: u64, ring: BaseRing) -> Self {
        AlgebraDescription {
            summands: vec![MatrixSummand { size, ring }, MatrixSummand { size, ring }],
        }
    }

    /// Total real dimension: sum over summands of `size^2 x dim_R(ring)`.
    pub fn total_real_dim(&self) -> u128 {
        self.summands
            .iter()
            .map(|m| (m.size as u128) * (m.size as u128) * m.ring.real_dim())
            .sum()
    }

    /// Real dimension of the smallest nontrivial module: a module may kill
    /// all but one simple summand, so the minimum over summands of
    /// `size x dim_R(ring)` suffices.
    pub fn minimal_real_module_dim(&self) -> u128 {
        self.summands
            .iter()
            .map(|m| (m.size as u128) * m.ring.real_dim())
            .min()
            .expect("descriptions always have at least one summand")
    }

    /// Complex dimension of the smallest nontrivial module; only meaningful
    /// for complex algebras (all summands complex).
    pub fn minimal_complex_module_dim(&self) -> u128 {
        self.summands
            .iter()
            .map(|m| m.size as u128)
            .min()
            .expect("descriptions always have at least one summand")
    }
}

/// Which ground field the classification is over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarField {
    Real,
    Complex,
}

/// Classifies `Cl(r,s)` (or its even subalgebra) as a sum of matrix
/// algebras, via the (8,8)-periodic table over the reals or the 2-periodic
/// table over the complexes. Over the complexes only `r+s` matters.
pub fn classify(sig: Signature, scalars: ScalarField, even_only: bool) -> AlgebraDescription {
    match scalars {
        ScalarField::Real => {
            if even_only {
                // Cl0(r,s) = Cl(r, s-1) for s > 0, Cl(s, r-1) for r > 0.
                let reduced = if sig.s > 0 {
                    Signature::new(sig.r, sig.s - 1)
                } else if sig.r > 0 {
                    Signature::new(sig.s, sig.r - 1)
                } else {
                    return AlgebraDescription::simple(1, BaseRing::Real);
                };
                classify(reduced, ScalarField::Real, false)
            } else {
                classify_real(sig)
            }
        }
        ScalarField::Complex => {
            let k = sig.dim();
            let k = if even_only {
                match k.checked_sub(1) {
                    Some(k1) => k1,
                    None => return AlgebraDescription::simple(1, BaseRing::Complex),
                }
            } else {
                k
            };
            classify_complex(k)
        }
    }
}

fn classify_real(sig: Signature) -> AlgebraDescription {
    let n = sig.dim() as u32;
    // Bott-periodic table indexed by (s - r) mod 8.
    let m = ((sig.s as i64 - sig.r as i64).rem_euclid(8)) as u32;
    let p = |e: u32| 1u64 << e; // 2^e
    match m {
        0 => AlgebraDescription::simple(p(n / 2), BaseRing::Real),
        1 => AlgebraDescription::double(p((n - 1) / 2), BaseRing::Real),
        2 => AlgebraDescription::simple(p(n / 2), BaseRing::Real),
        3 => AlgebraDescription::simple(p((n - 1) / 2), BaseRing::Complex),
        4 => AlgebraDescription::simple(p((n - 2) / 2), BaseRing::Quaternion),
        5 => AlgebraDescription::double(p((n - 3) / 2), BaseRing::Quaternion),
        6 => AlgebraDescription::simple(p((n - 2) / 2), BaseRing::Quaternion),
        7 => AlgebraDescription::simple(p((n - 1) / 2), BaseRing::Complex),
        _ => unreachable!(),
    }
}

fn classify_complex(k: usize) -> AlgebraDescription {
    let k = k as u32;
    if k.is_multiple_of(2) {
        AlgebraDescription::simple(1u64 << (k / 2), BaseRing::Complex)
    } else {
        AlgebraDescription::double(1u64 << ((k - 1) / 2), BaseRing::Complex)
    }
}

/// Dimension of the smallest nontrivial module of `Cl(r,s)` (or of its even
/// part): real dimension over the reals, complex dimension over the
/// complexes.
pub fn minimal_module_dim(sig: Signature, scalars: ScalarField, even_only: bool) -> u128 {
    let desc = classify(sig, scalars, even_only);
    match scalars {
        ScalarField::Real => desc.minimal_real_module_dim(),
        ScalarField::Complex => desc.minimal_complex_module_dim(),
    }
}

// ---------------------------------------------------------------------------
// Even subalgebra isomorphism
// ---------------------------------------------------------------------------

/// The isomorphism `Cl(W) -> Cl0(Omega)` sending `eta` to
/// `eta_even + omega1 * eta_odd`, where `W` is the orthogonal complement of a
/// unit vector `omega1` with `omega1^2 = -1`.
///
/// `w_element` must lie in the subalgebra generated by `W`; this is checked
/// via the commutation criterion (`omega1` commutes with even elements of
/// `Cl(W)` and anticommutes with odd ones).
pub fn even_subalgebra_iso<S: Scalar>(
    omega1: &Multivector<S>,
    w_element: &Multivector<S>,
) -> Result<Multivector<S>, CliffordError> {
    if omega1.signature() != w_element.signature() {
        return Err(CliffordError::SignatureMismatch);
    }
    // omega1 must be a grade-1 vector with square exactly -1.
    if omega1.grade_part(1) != *omega1 {
        return Err(CliffordError::NotUnitVector);
    }
    let sq = omega1.geometric_product(omega1)?;
    let minus_one = Multivector::scalar(omega1.signature(), -S::one());
    if sq != minus_one {
        return Err(CliffordError::NotUnitVector);
    }
    // Membership in the subalgebra generated by the orthogonal complement:
    // omega1 commutes with the even part and anticommutes with the odd part.
    let eta0 = w_element.even_part();
    let eta1 = w_element.odd_part();
    let comm = omega1
        .geometric_product(&eta0)?
        .sub(&eta0.geometric_product(omega1)?)?;
    let anti = omega1
        .geometric_product(&eta1)?
        .add(&eta1.geometric_product(omega1)?)?;
    if !comm.is_zero() || !anti.is_zero() {
        return Err(CliffordError::NotOrthogonal);
    }
    omega1.geometric_product(&eta1)?.add(&eta0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank_kernel, signature as sym_signature, Mat};
    use num_rational::BigRational;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    type Q = BigRational;

    fn int(n: i64) -> Q {
        <Q as Scalar>::from_int(n)
    }

    fn random_mv(rng: &mut StdRng, sig: Signature) -> Multivector<Q> {
        let coeffs = (0..sig.blade_count())
            .map(|_| int(rng.gen_range(-4..=4)))
            .collect();
        Multivector::from_coeffs(sig, coeffs)
    }

    #[test]
    fn defining_relations_all_signatures_up_to_4() {
        for r in 0..=4usize {
            for s in 0..=(4 - r) {
                if r + s == 0 {
                    continue;
                }
                let sig = Signature::new(r, s);
                for i in 0..sig.dim() {
                    for j in 0..sig.dim() {
                        let ei = Multivector::<Q>::basis_vector(sig, i);
                        let ej = Multivector::<Q>::basis_vector(sig, j);
                        let anti = ei
                            .geometric_product(&ej)
                            .unwrap()
                            .add(&ej.geometric_product(&ei).unwrap())
                            .unwrap();
                        let expected = if i == j {
                            Multivector::scalar(sig, int(2 * sig.metric(i) as i64))
                        } else {
                            Multivector::zero(sig)
                        };
                        assert_eq!(anti, expected, "relation failed at Cl({r},{s}) pair ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn squares_of_bivectors() {
        // In Cl_{1,0}: e1 e1 = -1.
        let sig = Signature::new(1, 0);
        let e1 = Multivector::<Q>::basis_vector(sig, 0);
        assert_eq!(
            e1.geometric_product(&e1).unwrap(),
            Multivector::scalar(sig, int(-1))
        );
        // In Cl_{0,2}: (e1 e2)^2 = -(q(e1) q(e2)) = -1.
        let sig = Signature::new(0, 2);
        let b = Multivector::<Q>::blade(sig, 0b11, int(1));
        assert_eq!(
            b.geometric_product(&b).unwrap(),
            Multivector::scalar(sig, int(-1))
        );
        // In Cl_{2,0} (quaternions): (e1 e2)^2 = -1 as well.
        let sig = Signature::new(2, 0);
        let b = Multivector::<Q>::blade(sig, 0b11, int(1));
        assert_eq!(
            b.geometric_product(&b).unwrap(),
            Multivector::scalar(sig, int(-1))
        );
        // Mixed case Cl_{1,1}: (e1 e2)^2 = -(-1)(+1) = +1.
        let sig = Signature::new(1, 1);
        let b = Multivector::<Q>::blade(sig, 0b11, int(1));
        assert_eq!(
            b.geometric_product(&b).unwrap(),
            Multivector::scalar(sig, int(1))
        );
    }

    #[test]
    fn involution_table_on_low_blades() {
        let sig = Signature::new(2, 1);
        let one = Multivector::<Q>::scalar(sig, int(1));
        let (t, tr, bar) = involutions(&one);
        assert_eq!(t, one);
        assert_eq!(tr, one);
        assert_eq!(bar, one);

        let e1 = Multivector::<Q>::basis_vector(sig, 0);
        let (t, tr, bar) = involutions(&e1);
        assert_eq!(t, e1.neg());
        assert_eq!(tr, e1);
        assert_eq!(bar, e1.neg());

        let e12 = Multivector::<Q>::blade(sig, 0b11, int(1));
        let (t, tr, bar) = involutions(&e12);
        assert_eq!(t, e12);
        assert_eq!(tr, e12.neg());
        assert_eq!(bar, e12.neg());
    }

    #[test]
    fn product_is_associative_on_random_elements() {
        let mut rng = StdRng::seed_from_u64(11);
        let sig = Signature::new(2, 2);
        for _ in 0..20 {
            let a = random_mv(&mut rng, sig);
            let b = random_mv(&mut rng, sig);
            let c = random_mv(&mut rng, sig);
            let left = a
                .geometric_product(&b)
                .unwrap()
                .geometric_product(&c)
                .unwrap();
            let right = a
                .geometric_product(&b.geometric_product(&c).unwrap())
                .unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn reversal_is_an_antiautomorphism() {
        let mut rng = StdRng::seed_from_u64(12);
        let sig = Signature::new(1, 2);
        for _ in 0..20 {
            let a = random_mv(&mut rng, sig);
            let b = random_mv(&mut rng, sig);
            let ab_rev = a.geometric_product(&b).unwrap().reversal();
            let brev_arev = b.reversal().geometric_product(&a.reversal()).unwrap();
            assert_eq!(ab_rev, brev_arev);
        }
    }

    #[test]
    fn tau_is_an_automorphism_and_bar_antidistributes() {
        let mut rng = StdRng::seed_from_u64(13);
        let sig = Signature::new(3, 0);
        for _ in 0..20 {
            let a = random_mv(&mut rng, sig);
            let b = random_mv(&mut rng, sig);
            let ab = a.geometric_product(&b).unwrap();
            assert_eq!(
                ab.grade_involution(),
                a.grade_involution()
                    .geometric_product(&b.grade_involution())
                    .unwrap()
            );
            assert_eq!(
                ab.bar(),
                b.bar().geometric_product(&a.bar()).unwrap()
            );
        }
    }

    #[test]
    fn mismatched_signatures_rejected() {
        let a = Multivector::<Q>::scalar(Signature::new(1, 0), int(1));
        let b = Multivector::<Q>::scalar(Signature::new(0, 1), int(1));
        assert_eq!(
            a.geometric_product(&b),
            Err(CliffordError::SignatureMismatch)
        );
    }

    #[test]
    fn classification_anchors() {
        // Cl_{4,3} = Mat(8, C) as a real algebra.
        let d = classify(Signature::new(4, 3), ScalarField::Real, false);
        assert_eq!(
            d.summands,
            vec![MatrixSummand { size: 8, ring: BaseRing::Complex }]
        );
        // Cl_{2,3} = Mat(4,R) + Mat(4,R).
        let d = classify(Signature::new(2, 3), ScalarField::Real, false);
        assert_eq!(
            d.summands,
            vec![
                MatrixSummand { size: 4, ring: BaseRing::Real },
                MatrixSummand { size: 4, ring: BaseRing::Real },
            ]
        );
        // Cl_{2,5} = Mat(8, C) as well.
        let d = classify(Signature::new(2, 5), ScalarField::Real, false);
        assert_eq!(
            d.summands,
            vec![MatrixSummand { size: 8, ring: BaseRing::Complex }]
        );
        // Complex even subalgebra for k = 3 generators: Mat(2, C).
        let d = classify(Signature::new(3, 0), ScalarField::Complex, true);
        assert_eq!(
            d.summands,
            vec![MatrixSummand { size: 2, ring: BaseRing::Complex }]
        );
    }

    #[test]
    fn low_rank_table_matches_known_algebras() {
        let cases = [
            ((1, 0), vec![(1, BaseRing::Complex)]),                       // C
            ((0, 1), vec![(1, BaseRing::Real), (1, BaseRing::Real)]),     // R+R
            ((2, 0), vec![(1, BaseRing::Quaternion)]),                    // H
            ((0, 2), vec![(2, BaseRing::Real)]),                          // Mat(2,R)
            ((1, 1), vec![(2, BaseRing::Real)]),                          // Mat(2,R)
            ((3, 0), vec![(1, BaseRing::Quaternion), (1, BaseRing::Quaternion)]),
            ((0, 3), vec![(2, BaseRing::Complex)]),                       // Mat(2,C)
            ((2, 1), vec![(2, BaseRing::Complex)]),                       // Mat(2,C)
            ((1, 2), vec![(2, BaseRing::Real), (2, BaseRing::Real)]),
        ];
        for ((r, s), expected) in cases {
            let d = classify(Signature::new(r, s), ScalarField::Real, false);
            let got: Vec<(u64, BaseRing)> = d.summands.iter().map(|m| (m.size, m.ring)).collect();
            assert_eq!(got, expected, "Cl({r},{s})");
        }
    }

    #[test]
    fn total_real_dim_matches_algebra_dim() {
        for r in 0..=8usize {
            for s in 0..=(8 - r) {
                if r + s == 0 {
                    continue;
                }
                let sig = Signature::new(r, s);
                let full = classify(sig, ScalarField::Real, false);
                assert_eq!(
                    full.total_real_dim(),
                    1u128 << (r + s),
                    "Cl({r},{s}) total dimension"
                );
                let even = classify(sig, ScalarField::Real, true);
                assert_eq!(
                    even.total_real_dim(),
                    1u128 << (r + s - 1),
                    "Cl0({r},{s}) total dimension"
                );
            }
        }
    }

    #[test]
    fn minimal_module_dims() {
        assert_eq!(
            minimal_module_dim(Signature::new(4, 3), ScalarField::Real, false),
            16
        );
        assert_eq!(
            minimal_module_dim(Signature::new(2, 5), ScalarField::Real, false),
            16
        );
        assert_eq!(
            minimal_module_dim(Signature::new(2, 3), ScalarField::Real, false),
            4
        );
        // Complex Cl0 with k = 3 generators: module dimension 2^{(3-1)/2} = 2.
        assert_eq!(
            minimal_module_dim(Signature::new(3, 0), ScalarField::Complex, true),
            2
        );
        // Quaternions act on R^4 minimally.
        assert_eq!(
            minimal_module_dim(Signature::new(2, 0), ScalarField::Real, false),
            4
        );
    }

    /// Brute-force structure oracle: center dimension and the signature of
    /// the regular-representation trace form, computed from the
    /// multiplication table alone. These invariants separate all algebras
    /// appearing for r+s <= 3.
    fn structure_invariants(sig: Signature) -> (usize, (usize, usize, usize)) {
        let n = sig.blade_count();
        // Center: kernel of the stacked commutators with all generators.
        let mut stacked = Mat::<Q>::zeros(0, n);
        for i in 0..sig.dim() {
            let e = Multivector::<Q>::basis_vector(sig, i);
            let comm = e.left_mul_matrix().sub(&e.right_mul_matrix());
            let mut next = Mat::<Q>::zeros(stacked.rows() + n, n);
            for r in 0..stacked.rows() {
                for c in 0..n {
                    next[(r, c)] = stacked[(r, c)].clone();
                }
            }
            for r in 0..n {
                for c in 0..n {
                    next[(stacked.rows() + r, c)] = comm[(r, c)].clone();
                }
            }
            stacked = next;
        }
        let (_, kernel) = rank_kernel(&stacked);
        let center_dim = kernel.len();
        // Trace form tau(x, y) = tr(L_x L_y) = 2^n * scalar_part(x y); the
        // product of two basis blades has a scalar part only when the masks
        // coincide, so the Gram matrix is diagonal in the blade basis.
        let mut gram = Mat::<Q>::zeros(n, n);
        for a in 0..n {
            let (mask, sign) = blade_product(sig, a as u32, a as u32);
            debug_assert_eq!(mask, 0);
            gram[(a, a)] = int(sign as i64 * n as i64);
        }
        let sig3 = sym_signature(&gram).unwrap();
        (center_dim, sig3)
    }

    /// Expected invariants for a matrix-algebra description, derived by hand:
    /// center contributes dim_R of the ring's center per summand; the trace
    /// form of Mat(m,R) has inertia (m(m-1)/2 minuses, m(m+1)/2 pluses), of
    /// Mat(m,C) (m^2, m^2), and of H (3 minuses, 1 plus).
    fn expected_invariants(desc: &AlgebraDescription) -> (usize, (usize, usize, usize)) {
        let mut center = 0usize;
        let (mut minus, mut plus) = (0usize, 0usize);
        for m in &desc.summands {
            let sz = m.size as usize;
            match m.ring {
                BaseRing::Real => {
                    center += 1;
                    minus += sz * (sz - 1) / 2;
                    plus += sz * (sz + 1) / 2;
                }
                BaseRing::Complex => {
                    center += 2;
                    minus += sz * sz;
                    plus += sz * sz;
                }
                BaseRing::Quaternion => {
                    assert_eq!(sz, 1, "oracle covers quaternion summands of size 1 only");
                    center += 1;
                    minus += 3;
                    plus += 1;
                }
            }
        }
        (center, (minus, plus, 0))
    }

    #[test]
    fn classification_agrees_with_structure_oracle_up_to_rank_3() {
        for r in 0..=3usize {
            for s in 0..=(3 - r) {
                if r + s == 0 {
                    continue;
                }
                let sig = Signature::new(r, s);
                let desc = classify(sig, ScalarField::Real, false);
                assert_eq!(
                    structure_invariants(sig),
                    expected_invariants(&desc),
                    "Cl({r},{s})"
                );
            }
        }
    }

    #[test]
    fn even_iso_fixes_even_part_and_twists_odd_part() {
        let sig = Signature::new(3, 0);
        let e1 = Multivector::<Q>::basis_vector(sig, 0);
        let e2 = Multivector::<Q>::basis_vector(sig, 1);
        let e3 = Multivector::<Q>::basis_vector(sig, 2);
        // eta = 1 -> 1
        let one = Multivector::scalar(sig, int(1));
        assert_eq!(even_subalgebra_iso(&e1, &one).unwrap(), one);
        // eta = e2 (a vector orthogonal to e1) -> e1 e2
        let expect = e1.geometric_product(&e2).unwrap();
        assert_eq!(even_subalgebra_iso(&e1, &e2).unwrap(), expect);
        // eta = e2 e3 (even) is fixed
        let e23 = e2.geometric_product(&e3).unwrap();
        assert_eq!(even_subalgebra_iso(&e1, &e23).unwrap(), e23);
    }

    #[test]
    fn even_iso_is_multiplicative_on_random_pairs() {
        let mut rng = StdRng::seed_from_u64(21);
        let sig = Signature::new(3, 2);
        let e1 = Multivector::<Q>::basis_vector(sig, 0);
        // Random elements of the subalgebra generated by e2..e5: blades whose
        // mask avoids bit 0.
        let random_w = |rng: &mut StdRng| {
            let coeffs = (0..sig.blade_count())
                .map(|mask| {
                    if mask & 1 == 0 {
                        int(rng.gen_range(-3..=3))
                    } else {
                        int(0)
                    }
                })
                .collect();
            Multivector::<Q>::from_coeffs(sig, coeffs)
        };
        for _ in 0..20 {
            let a = random_w(&mut rng);
            let b = random_w(&mut rng);
            let phi_a = even_subalgebra_iso(&e1, &a).unwrap();
            let phi_b = even_subalgebra_iso(&e1, &b).unwrap();
            let lhs = phi_a.geometric_product(&phi_b).unwrap();
            let rhs = even_subalgebra_iso(&e1, &a.geometric_product(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn even_iso_rejects_bad_inputs() {
        let sig = Signature::new(2, 1);
        let e1 = Multivector::<Q>::basis_vector(sig, 0);
        let e3 = Multivector::<Q>::basis_vector(sig, 2); // squares to +1
        let one = Multivector::<Q>::scalar(sig, int(1));
        assert_eq!(
            even_subalgebra_iso(&e3, &one),
            Err(CliffordError::NotUnitVector)
        );
        // e1 itself is not orthogonal to e1.
        assert_eq!(
            even_subalgebra_iso(&e1, &e1),
            Err(CliffordError::NotOrthogonal)
        );
    }
}
