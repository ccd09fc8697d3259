//! k-symplectic structures on finite-dimensional vector spaces, their
//! correspondence with Clifford-algebra modules, and the resulting dimension
//! obstructions for trianalytic tori in hyperkähler geometry.
//!
//! The crate is organised as a pipeline:
//!
//! * [`scalar`] — exact (rational / Gaussian-rational) and `f64`-based
//!   arithmetic backends behind one trait.
//! * [`linalg`] — dense matrices, fraction-free elimination, Pfaffians,
//!   signatures, characteristic polynomials and multivariate polynomials.
//! * [`clifford`] — real and complex Clifford algebras: blade arithmetic,
//!   classification up to isomorphism, minimal module dimensions.
//! * [`repr`] — explicit matrix representations of Clifford algebras,
//!   invariant metrics and the two-forms they induce.
//! * [`ksymplectic`] — spans of two-forms, Pfaffian polynomials, quadric
//!   extraction, verification and the induced Clifford action.
//! * [`hk`] — intersection-form models: quadric extraction from top
//!   intersection polynomials, the degree-two pairing check and dimension
//!   bounds for trianalytic tori.

#![forbid(unsafe_code)]

pub mod clifford;
pub mod exec;
pub mod hk;
pub mod ksymplectic;
pub mod linalg;
pub mod repr;
pub mod scalar;
pub mod wire;

pub use scalar::{Complexify, ComplexScalar, QuadExt, RealScalar, Scalar};
