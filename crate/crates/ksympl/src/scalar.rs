//! Scalar backends for all numerical kernels in this crate.
//!
//! Every algorithm is generic over a [`Scalar`] type. Two families are
//! provided:
//!
//! * exact arithmetic over the rationals ([`BigRational`]) and the Gaussian
//!   rationals (`Complex<BigRational>`), where every zero test is exact, and
//! * hardware floats (`f64`, `Complex<f64>`), where zero tests are made
//!   against relative tolerances derived from the data's magnitude.
//!
//! [`QuadExt`] adjoins a square root of a known non-square to a base field so
//! that null vectors of a quadratic form can be produced exactly even when
//! the form has no rational isotropic directions on the chosen lines.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Relative tolerance for rank decisions (pivot acceptance) on float backends.
pub const REL_RANK_TOL: f64 = 1e-8;

/// Relative tolerance for equality of computed quantities on float backends.
pub const REL_EQ_TOL: f64 = 1e-9;

/// A field element usable by the linear-algebra and polynomial kernels.
///
/// All arithmetic is by value; implementors are cheap or structurally
/// necessary to clone. `Div` by zero follows the underlying type's behaviour
/// (panics); fallible inversion goes through [`Scalar::inv`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Whether zero tests on this type are exact. Exact backends may rely on
    /// `is_zero`; float backends must compare magnitudes against a scale.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    /// The field element `n/d`. Panics if `d == 0`.
    fn from_ratio(n: i64, d: i64) -> Self;

    fn is_zero(&self) -> bool;

    /// A magnitude estimate used for pivot selection and tolerance checks.
    /// Exact backends only need this to be monotone-ish; it never affects
    /// their correctness.
    fn mag(&self) -> f64;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Complex conjugate (identity on real types).
    fn conj(&self) -> Self;

    /// A square root inside the same field, if one exists and is findable.
    /// Exact backends decide exactly; `f64` fails on negatives and
    /// `Complex<f64>` is total.
    fn sqrt(&self) -> Option<Self>;

    /// The sign of a provably real value: `Some(-1 | 0 | 1)`, or `None` when
    /// the value is not known to be real.
    fn real_sign(&self) -> Option<i8>;

    /// Numeric snapshot for diagnostics and reporting.
    fn to_c64(&self) -> Complex<f64>;

    /// Compact textual rendering for records and serialized output: exact
    /// rationals as `n` or `n/d`, floats in full-precision scientific
    /// notation. Composite backends fall back to their debug form; they are
    /// serialized from their parts instead.
    fn render(&self) -> String {
        format!("{self:?}")
    }

    /// Scale-aware zero test: exact backends test exactly, float backends
    /// compare `mag()` against `REL_RANK_TOL * scale`.
    fn negligible_at(&self, scale: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.mag() <= REL_RANK_TOL * scale.max(1.0)
        }
    }

    /// Scale-aware equality: exact on exact backends, relative tolerance
    /// `REL_EQ_TOL * scale` on float backends.
    fn approx_eq(&self, other: &Self, scale: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).mag() <= REL_EQ_TOL * scale.max(1.0)
        }
    }
}

/// A scalar with a real total order, paired with its complexification.
pub trait RealScalar: Scalar + PartialOrd {
    type Cplx: ComplexScalar<Real = Self>;

    fn abs(&self) -> Self {
        if self.real_sign() == Some(-1) {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// A complex scalar with access to its real and imaginary parts.
pub trait ComplexScalar: Scalar {
    type Real: RealScalar<Cplx = Self>;

    fn from_re(re: Self::Real) -> Self;
    fn from_re_im(re: Self::Real, im: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;
    fn i() -> Self;
}

/// Embedding of a scalar into a complex field; identity on complex types.
/// Lets real-input pipelines run kernels that need complex arithmetic.
pub trait Complexify: Scalar {
    type C: ComplexScalar;

    fn complexify(self) -> Self::C;
}

// ---------------------------------------------------------------------------
// Exact square roots
// ---------------------------------------------------------------------------

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Exact square root of a Gaussian rational, if one exists in `Q(i)`.
///
/// `z = x + iy` is a square iff `r = sqrt(x^2 + y^2)` is rational and
/// `(x + r)/2` is a rational square; then `a = sqrt((x+r)/2)`, `b = y/(2a)`.
pub fn gaussian_sqrt(z: &Complex<BigRational>) -> Option<Complex<BigRational>> {
    let x = &z.re;
    let y = &z.im;
    let rat_zero = || <BigRational as Zero>::zero();
    if Zero::is_zero(y) {
        return if x.is_negative() {
            rational_sqrt(&-x.clone()).map(|s| Complex::new(rat_zero(), s))
        } else {
            rational_sqrt(x).map(|s| Complex::new(s, rat_zero()))
        };
    }
    let r = rational_sqrt(&(x * x + y * y))?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let a = rational_sqrt(&((x + &r) * &half))?;
    // y != 0 forces r > |x|, so a > 0 here.
    let b = y * &half / &a;
    Some(Complex::new(a, b))
}

// ---------------------------------------------------------------------------
// BigRational
// ---------------------------------------------------------------------------

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mag(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn real_sign(&self) -> Option<i8> {
        Some(if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        })
    }
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl RealScalar for BigRational {
    type Cplx = Complex<BigRational>;
}

impl Complexify for BigRational {
    type C = Complex<BigRational>;

    fn complexify(self) -> Self::C {
        Complex::new(self, <BigRational as Zero>::zero())
    }
}

// ---------------------------------------------------------------------------
// f64
// ---------------------------------------------------------------------------

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        n as f64 / d as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn mag(&self) -> f64 {
        f64::abs(*self)
    }
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn conj(&self) -> Self {
        *self
    }
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(f64::sqrt(*self))
        }
    }
    fn real_sign(&self) -> Option<i8> {
        if self.is_nan() {
            None
        } else if *self > 0.0 {
            Some(1)
        } else if *self < 0.0 {
            Some(-1)
        } else {
            Some(0)
        }
    }
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(*self, 0.0)
    }
    fn render(&self) -> String {
        format!("{self:.16e}")
    }
}

impl RealScalar for f64 {
    type Cplx = Complex<f64>;
}

impl Complexify for f64 {
    type C = Complex<f64>;

    fn complexify(self) -> Self::C {
        Complex::new(self, 0.0)
    }
}

// ---------------------------------------------------------------------------
// Complex<BigRational>
// ---------------------------------------------------------------------------

impl Scalar for Complex<BigRational> {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        Complex::new(One::one(), Zero::zero())
    }
    fn from_int(n: i64) -> Self {
        Complex::new(<BigRational as Scalar>::from_int(n), Zero::zero())
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Complex::new(<BigRational as Scalar>::from_ratio(n, d), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn mag(&self) -> f64 {
        Scalar::to_c64(self).norm()
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(<Self as Scalar>::one() / self.clone())
        }
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn sqrt(&self) -> Option<Self> {
        gaussian_sqrt(self)
    }
    fn real_sign(&self) -> Option<i8> {
        if Zero::is_zero(&self.im) {
            Scalar::real_sign(&self.re)
        } else {
            None
        }
    }
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl ComplexScalar for Complex<BigRational> {
    type Real = BigRational;

    fn from_re(re: Self::Real) -> Self {
        Complex::new(re, Zero::zero())
    }
    fn from_re_im(re: Self::Real, im: Self::Real) -> Self {
        Complex::new(re, im)
    }
    fn re(&self) -> Self::Real {
        self.re.clone()
    }
    fn im(&self) -> Self::Real {
        self.im.clone()
    }
    fn i() -> Self {
        Complex::new(Zero::zero(), One::one())
    }
}

impl Complexify for Complex<BigRational> {
    type C = Self;

    fn complexify(self) -> Self::C {
        self
    }
}

// ---------------------------------------------------------------------------
// Complex<f64>
// ---------------------------------------------------------------------------

impl Scalar for Complex<f64> {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_int(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Complex::new(n as f64 / d as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn mag(&self) -> f64 {
        self.norm()
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(<Self as Scalar>::one() / *self)
        }
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn sqrt(&self) -> Option<Self> {
        Some(Complex::sqrt(*self))
    }
    fn real_sign(&self) -> Option<i8> {
        if self.im == 0.0 {
            Scalar::real_sign(&self.re)
        } else {
            None
        }
    }
    fn to_c64(&self) -> Complex<f64> {
        *self
    }
}

impl ComplexScalar for Complex<f64> {
    type Real = f64;

    fn from_re(re: Self::Real) -> Self {
        Complex::new(re, 0.0)
    }
    fn from_re_im(re: Self::Real, im: Self::Real) -> Self {
        Complex::new(re, im)
    }
    fn re(&self) -> Self::Real {
        self.re
    }
    fn im(&self) -> Self::Real {
        self.im
    }
    fn i() -> Self {
        Complex::new(0.0, 1.0)
    }
}

impl Complexify for Complex<f64> {
    type C = Self;

    fn complexify(self) -> Self::C {
        self
    }
}

// ---------------------------------------------------------------------------
// Quadratic extension K = S[delta] / (delta^2 - e)
// ---------------------------------------------------------------------------

/// An element `a + b*delta` of a quadratic extension of the base field `S`,
/// where `delta^2 = e` for a fixed non-square `e`.
///
/// The extension parameter `e` rides along in each element. Elements created
/// by [`Scalar::zero`]/[`Scalar::one`]/`from_int` carry `e = 0` and act as
/// plain base-field constants; binary operations take `e` from whichever
/// operand genuinely uses the extension. This type exists to let the
/// null-cone sampler produce exact isotropic vectors; it is a field whenever
/// `e` is a non-square in `S`.
#[derive(Clone, Debug)]
pub struct QuadExt<S> {
    pub a: S,
    pub b: S,
    pub e: S,
}

impl<S: Scalar> QuadExt<S> {
    pub fn new(a: S, b: S, e: S) -> Self {
        QuadExt { a, b, e }
    }

    /// Embed a base-field element.
    pub fn base(a: S) -> Self {
        QuadExt {
            a,
            b: S::zero(),
            e: S::zero(),
        }
    }

    /// The generator `delta` with `delta^2 = e`.
    pub fn adjoin(e: S) -> Self {
        QuadExt {
            a: S::zero(),
            b: S::one(),
            e,
        }
    }

    fn unify_e(&self, other: &Self) -> S {
        if !self.b.is_zero() {
            self.e.clone()
        } else if !other.b.is_zero() {
            other.e.clone()
        } else if !self.e.is_zero() {
            self.e.clone()
        } else {
            other.e.clone()
        }
    }
}

impl<S: Scalar> PartialEq for QuadExt<S> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && (self.b.is_zero() || self.e == other.e)
    }
}

impl<S: Scalar> Add for QuadExt<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let e = self.unify_e(&rhs);
        QuadExt::new(self.a + rhs.a, self.b + rhs.b, e)
    }
}

impl<S: Scalar> Sub for QuadExt<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let e = self.unify_e(&rhs);
        QuadExt::new(self.a - rhs.a, self.b - rhs.b, e)
    }
}

impl<S: Scalar> Mul for QuadExt<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let e = self.unify_e(&rhs);
        let a = self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.b.clone() * e.clone();
        let b = self.a * rhs.b + self.b * rhs.a;
        QuadExt::new(a, b, e)
    }
}

impl<S: Scalar> Neg for QuadExt<S> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt::new(-self.a, -self.b, self.e)
    }
}

impl<S: Scalar> Div for QuadExt<S> {
    type Output = Self;
    // Field division is multiplication by the inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        let inv = Scalar::inv(&rhs).expect("division by zero in quadratic extension");
        self * inv
    }
}

impl<S: Scalar> Scalar for QuadExt<S> {
    const EXACT: bool = S::EXACT;

    fn zero() -> Self {
        QuadExt::base(S::zero())
    }
    fn one() -> Self {
        QuadExt::base(S::one())
    }
    fn from_int(n: i64) -> Self {
        QuadExt::base(S::from_int(n))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        QuadExt::base(S::from_ratio(n, d))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn mag(&self) -> f64 {
        Scalar::to_c64(self).norm()
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        // (a + b d)^-1 = (a - b d) / (a^2 - b^2 e); the norm form is
        // anisotropic because e is a non-square, so the denominator is
        // nonzero for nonzero elements.
        let norm = self.a.clone() * self.a.clone()
            - self.b.clone() * self.b.clone() * self.e.clone();
        let ninv = norm.inv()?;
        Some(QuadExt::new(
            self.a.clone() * ninv.clone(),
            -self.b.clone() * ninv,
            self.e.clone(),
        ))
    }
    fn conj(&self) -> Self {
        QuadExt::new(self.a.conj(), self.b.conj(), self.e.conj())
    }
    fn sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            self.a.sqrt().map(QuadExt::base)
        } else {
            None
        }
    }
    fn real_sign(&self) -> Option<i8> {
        if self.b.is_zero() {
            self.a.real_sign()
        } else {
            None
        }
    }
    fn to_c64(&self) -> Complex<f64> {
        self.a.to_c64() + self.b.to_c64() * self.e.to_c64().sqrt()
    }
}
