//! Quaternion algebras `(a, b)` with `i² = a`, `j² = b`, `k = ij = -ji`,
//! their canonical involution, and the descent form of quaternion algebras
//! over K = Q(√d) carrying a unitary involution.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::brauer::{quaternion_class, BrauerClassQ};
use crate::error::{Error, Result};
use crate::places::QuadraticField;
use crate::scalar::Scalar;
use crate::{Quaternion, QuaternionAlgebraQ, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionAlgebra<T> {
    a: T,
    b: T,
}

/// `w + x i + y j + z k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionElement<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> QuaternionElement<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        QuaternionElement { w, x, y, z }
    }

    pub fn scalar(c: T) -> Self {
        QuaternionElement::new(c, T::zero(), T::zero(), T::zero())
    }

    pub fn zero() -> Self {
        Self::scalar(T::zero())
    }

    pub fn one() -> Self {
        Self::scalar(T::one())
    }

    pub fn i() -> Self {
        QuaternionElement::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        QuaternionElement::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        QuaternionElement::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.is_scalar() && self.w.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        QuaternionElement::new(
            self.w.clone() + o.w.clone(),
            self.x.clone() + o.x.clone(),
            self.y.clone() + o.y.clone(),
            self.z.clone() + o.z.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, c: &T) -> Self {
        QuaternionElement::new(
            self.w.clone() * c.clone(),
            self.x.clone() * c.clone(),
            self.y.clone() * c.clone(),
            self.z.clone() * c.clone(),
        )
    }

    /// Canonical involution `trd(u) - u`.
    pub fn conjugate(&self) -> Self {
        QuaternionElement::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    pub fn reduced_trace(&self) -> T {
        self.w.clone() + self.w.clone()
    }
}

impl<T: Scalar> QuaternionAlgebra<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(QuaternionAlgebra { a, b })
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn multiply(
        &self,
        u: &QuaternionElement<T>,
        v: &QuaternionElement<T>,
    ) -> QuaternionElement<T> {
        let (a, b) = (self.a.clone(), self.b.clone());
        let ab = a.clone() * b.clone();
        let (w1, x1, y1, z1) = (u.w.clone(), u.x.clone(), u.y.clone(), u.z.clone());
        let (w2, x2, y2, z2) = (v.w.clone(), v.x.clone(), v.y.clone(), v.z.clone());
        QuaternionElement {
            w: w1.clone() * w2.clone()
                + a.clone() * x1.clone() * x2.clone()
                + b.clone() * y1.clone() * y2.clone()
                - ab * z1.clone() * z2.clone(),
            x: w1.clone() * x2.clone() + x1.clone() * w2.clone()
                - b.clone() * y1.clone() * z2.clone()
                + b * z1.clone() * y2.clone(),
            y: w1.clone() * y2.clone()
                + y1.clone() * w2.clone()
                + a.clone() * x1.clone() * z2.clone()
                - a * z1.clone() * x2.clone(),
            z: w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        }
    }

    /// `nrd(u) = u σ₀(u) = w² - a x² - b y² + ab z²`.
    pub fn reduced_norm(&self, u: &QuaternionElement<T>) -> T {
        let ab = self.a.clone() * self.b.clone();
        u.w.clone() * u.w.clone()
            - self.a.clone() * u.x.clone() * u.x.clone()
            - self.b.clone() * u.y.clone() * u.y.clone()
            + ab * u.z.clone() * u.z.clone()
    }
}

impl QuaternionAlgebraQ {
    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        QuaternionAlgebra::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        )
    }

    pub fn class(&self) -> BrauerClassQ {
        quaternion_class(&self.a, &self.b).expect("entries are nonzero")
    }
}

impl fmt::Display for QuaternionAlgebraQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// An element `re + im √d` of the quadratic field K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KScalar {
    pub re: Rational,
    pub im: Rational,
}

impl KScalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        KScalar { re, im }
    }

    pub fn conjugate(&self) -> Self {
        KScalar::new(self.re.clone(), -self.im.clone())
    }
}

/// `re + im ⊗ √d` in `Q₀ ⊗_Q K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentElement {
    pub re: Quaternion,
    pub im: Quaternion,
}

impl DescentElement {
    pub fn new(re: Quaternion, im: Quaternion) -> Self {
        DescentElement { re, im }
    }

    pub fn from_base(q: Quaternion) -> Self {
        DescentElement::new(q, Quaternion::zero())
    }

    /// `1 ⊗ √d`.
    pub fn sqrt_d() -> Self {
        DescentElement::new(Quaternion::zero(), Quaternion::one())
    }
}

/// `(Q₀, σ₀) ⊗ (K, conjugation)`: a quaternion algebra over K with the
/// unitary involution `σ(q₁ + q₂√d) = σ₀(q₁) - σ₀(q₂)√d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitaryQuaternion {
    base: QuaternionAlgebraQ,
    field: QuadraticField,
}

pub fn albert_descent(alg: &QuaternionAlgebraQ, field: &QuadraticField) -> UnitaryQuaternion {
    UnitaryQuaternion {
        base: alg.clone(),
        field: *field,
    }
}

impl UnitaryQuaternion {
    pub fn base(&self) -> &QuaternionAlgebraQ {
        &self.base
    }

    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    fn d(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.field.d()))
    }

    pub fn multiply(&self, u: &DescentElement, v: &DescentElement) -> DescentElement {
        let m = |p: &Quaternion, q: &Quaternion| self.base.multiply(p, q);
        let re = m(&u.re, &v.re).add(&m(&u.im, &v.im).scale(&self.d()));
        let im = m(&u.re, &v.im).add(&m(&u.im, &v.re));
        DescentElement::new(re, im)
    }

    pub fn involution(&self, u: &DescentElement) -> DescentElement {
        DescentElement::new(u.re.conjugate(), u.im.conjugate().neg())
    }

    /// `c · u` for `c ∈ K` acting through the center.
    pub fn scale(&self, c: &KScalar, u: &DescentElement) -> DescentElement {
        let re =
            u.re.scale(&c.re)
                .add(&u.im.scale(&(c.im.clone() * self.d())));
        let im = u.im.scale(&c.re).add(&u.re.scale(&c.im));
        DescentElement::new(re, im)
    }

    /// Whether `u` lies in the center K (both components scalar).
    pub fn is_central(&self, u: &DescentElement) -> bool {
        u.re.is_scalar() && u.im.is_scalar()
    }

    /// The fixed field of σ on the center: `c` is fixed iff `c ∈ Q`.
    pub fn fixes_central(&self, c: &KScalar) -> bool {
        let u = DescentElement::new(
            Quaternion::scalar(c.re.clone()),
            Quaternion::scalar(c.im.clone()),
        );
        self.involution(&u) == u
    }

    /// `σ(u) u` when it is a rational scalar, i.e. `u` is a similitude
    /// with multiplier in Q.
    pub fn similitude_multiplier(&self, u: &DescentElement) -> Option<Rational> {
        let p = self.multiply(&self.involution(u), u);
        (p.re.is_scalar() && p.im.is_zero() && !p.re.w.is_zero()).then_some(p.re.w)
    }
}

/// Result of [`splitting_quadratic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplittingQuadratic {
    AlreadySplit,
    Field(QuadraticField),
}

/// The quadratic field `Q(√d)` of least `|d|` (positive first) splitting
/// the algebra.
pub fn splitting_quadratic(
    alg: &QuaternionAlgebraQ,
    height_bound: u64,
) -> Result<SplittingQuadratic> {
    let class = alg.class();
    if class.is_zero() {
        return Ok(SplittingQuadratic::AlreadySplit);
    }
    splitting_quadratic_for(&class, height_bound).map(SplittingQuadratic::Field)
}

/// Least-height quadratic field killing an order-2 class.
pub fn splitting_quadratic_for(class: &BrauerClassQ, height_bound: u64) -> Result<QuadraticField> {
    let bound = i64::try_from(height_bound).unwrap_or(i64::MAX);
    for m in 1..=bound {
        for d in [m, -m] {
            let Ok(k) = QuadraticField::new(d) else {
                continue;
            };
            if class.splits_over_quadratic(&k) {
                return Ok(k);
            }
        }
    }
    Err(Error::SearchExhausted {
        what: "splitting quadratic field",
        bound: height_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::places::IntegerPolynomial;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn el(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::new(q(w), q(x), q(y), q(z))
    }

    #[test]
    fn structure_constants() {
        let alg = QuaternionAlgebraQ::from_i64(2, 3).unwrap();
        assert_eq!(
            alg.multiply(&Quaternion::i(), &Quaternion::j()),
            Quaternion::k()
        );
        assert_eq!(
            alg.multiply(&Quaternion::j(), &Quaternion::i()),
            Quaternion::k().neg()
        );
        assert_eq!(
            alg.multiply(&Quaternion::i(), &Quaternion::i()),
            Quaternion::scalar(q(2))
        );
        assert_eq!(
            alg.multiply(&Quaternion::k(), &Quaternion::k()),
            Quaternion::scalar(q(-6))
        );
        assert!(QuaternionAlgebraQ::from_i64(0, 1).is_err());
    }

    #[test]
    fn norm_and_trace() {
        let h = QuaternionAlgebraQ::from_i64(-1, -1).unwrap();
        let u = el(1, 1, 1, 1);
        assert_eq!(h.reduced_norm(&u), q(4));
        assert_eq!(h.multiply(&u, &u.conjugate()), Quaternion::scalar(q(4)));
        assert_eq!(Quaternion::i().reduced_trace(), q(0));
    }

    #[test]
    fn generic_over_f64() {
        let h = QuaternionAlgebra::new(-1.0_f64, -1.0).unwrap();
        let i = QuaternionElement::<f64>::i();
        let j = QuaternionElement::<f64>::j();
        assert_eq!(h.multiply(&i, &j), QuaternionElement::k());
        assert_eq!(
            h.reduced_norm(&QuaternionElement::new(1.0, 1.0, 1.0, 1.0)),
            4.0
        );
    }

    #[test]
    fn descent_involution_examples() {
        let u = albert_descent(
            &QuaternionAlgebraQ::from_i64(-1, -1).unwrap(),
            &QuadraticField::new(5).unwrap(),
        );
        let one = DescentElement::from_base(Quaternion::one());
        assert_eq!(u.involution(&one), one);
        let i = DescentElement::from_base(Quaternion::i());
        assert_eq!(
            u.involution(&i),
            DescentElement::from_base(Quaternion::i().neg())
        );
        let s = DescentElement::sqrt_d();
        assert_eq!(
            u.involution(&s),
            DescentElement::new(Quaternion::zero(), Quaternion::one().neg())
        );
        assert!(u.fixes_central(&KScalar::new(q(3), q(0))));
        assert!(!u.fixes_central(&KScalar::new(q(3), q(1))));
        assert!(u.is_central(&s));
    }

    #[test]
    fn similitudes_from_below() {
        let u = albert_descent(
            &QuaternionAlgebraQ::from_i64(2, -3).unwrap(),
            &QuadraticField::new(-7).unwrap(),
        );
        let x = DescentElement::from_base(el(1, 2, -1, 3));
        let m = u.similitude_multiplier(&x).unwrap();
        assert_eq!(m, u.base().reduced_norm(&x.re));
    }

    #[test]
    fn splitting_quadratic_examples() {
        let split = QuaternionAlgebraQ::from_i64(1, 1).unwrap();
        assert_eq!(
            splitting_quadratic(&split, 50).unwrap(),
            SplittingQuadratic::AlreadySplit
        );
        let h = QuaternionAlgebraQ::from_i64(-1, -1).unwrap();
        let gi = SplittingQuadratic::Field(QuadraticField::new(-1).unwrap());
        assert_eq!(splitting_quadratic(&h, 50).unwrap(), gi);
        assert_eq!(
            splitting_quadratic(&QuaternionAlgebraQ::from_i64(-1, -3).unwrap(), 50).unwrap(),
            gi
        );
        let k = QuadraticField::new(-1).unwrap();
        assert!(h.class().splits_over(&k.minimal_polynomial()).unwrap());
        assert!(IntegerPolynomial::from_i64(&[1, 0, 1]).unwrap() == k.minimal_polynomial());
    }
}
