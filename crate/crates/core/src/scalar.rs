//! The scalar abstraction shared by the generic algebra code.
//!
//! Polynomials, Gram-matrix elimination and quaternion element arithmetic
//! only need field operations, so they are written against [`Scalar`].
//! Everything that touches local arithmetic (symbols, invariants, places)
//! is pinned to [`Rational`](crate::Rational).

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// A field element usable by the generic routines.
///
/// Exactness matters for every decision the library makes; `f64`
/// satisfies the bound but is only suitable for the element-level
/// quaternion product.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}
