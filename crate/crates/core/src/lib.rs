//! Exact arithmetic of Brauer classes, quaternion algebras and quadratic
//! forms over Q and its quadratic extensions, together with an engine that
//! computes the index of torsors under adjoint groups of type A1 and A2n
//! and constructs a separable field of exactly that degree trivializing
//! the torsor.
//!
//! Polynomial, matrix and quaternion-element code is generic over
//! [`Scalar`]; the aliases below fix the exact rational instantiation the
//! rest of the crate uses.

pub mod arith;
pub mod brauer;
pub mod cli;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod modp;
pub mod places;
pub mod poly;
pub mod quat;
pub mod scalar;
pub mod witt;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rationals backing every arithmetic decision.
pub type Rational = num_rational::BigRational;
/// Polynomials with rational coefficients.
pub type RatPoly = poly::Poly<Rational>;
/// Quaternion algebra `(a, b)` over Q.
pub type QuaternionAlgebraQ = quat::QuaternionAlgebra<Rational>;
/// Element of a quaternion algebra over Q.
pub type Quaternion = quat::QuaternionElement<Rational>;
/// Symmetric matrix over Q.
pub type RatMatrix = linalg::Matrix<Rational>;

pub use brauer::{BrauerClassK, BrauerClassQ, Fraction01};
pub use places::{IntegerPolynomial, Place, PlaceOverK, QuadraticField};
pub use witt::{HermitianForm, QuadraticForm, WittInvariants};
