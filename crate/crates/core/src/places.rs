//! Places of Q, local symbols, quadratic fields and their place
//! decomposition, and local degrees of number fields given by a monic
//! integer polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, legendre, mod_u64, split_valuation, square_class_integer};
use crate::error::{Error, Result};
use crate::linalg;
use crate::modp::PolyModP;
use crate::poly::Poly;
use crate::Rational;

/// A place of Q. Finite places sort by prime; the real place sorts last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(u64),
    Infinite,
}

impl Place {
    pub fn finite(p: u64) -> Result<Self> {
        if arith::is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            Place::Finite(p) => Some(*p),
            Place::Infinite => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "inf"),
        }
    }
}

/// Hilbert symbol `(a, b)_v`: `+1` iff `z² = a x² + b y²` has a nontrivial
/// solution over the completion of Q at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let p = match v {
        Place::Infinite => {
            return Ok(if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            });
        }
        Place::Finite(p) => p,
    };
    let (alpha, u) = split_valuation(&square_class_integer(a), p);
    let (beta, w) = split_valuation(&square_class_integer(b), p);
    let (alpha, beta) = (u64::from(alpha), u64::from(beta));
    if p == 2 {
        // unit residue formula: (-1)^(e(u)e(w) + alpha*o(w) + beta*o(u))
        let eps = |x: &BigInt| (mod_u64(x, 4) - 1) / 2;
        let omega = |x: &BigInt| {
            let r = mod_u64(x, 8);
            ((r * r - 1) / 8) % 2
        };
        let e = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
        Ok(if e % 2 == 0 { 1 } else { -1 })
    } else {
        // tame symbol: (-1)^(alpha*beta*(p-1)/2) (u/p)^beta (w/p)^alpha
        let mut s: i8 = if (alpha * beta) % 2 == 1 && p % 4 == 3 {
            -1
        } else {
            1
        };
        if beta % 2 == 1 {
            s *= legendre(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(&w, p);
        }
        Ok(s)
    }
}

/// Places where `(a, b)_v` can be nontrivial: the real place, 2, and the
/// primes dividing numerators or denominators of `a` and `b`.
pub fn symbol_support(a: &Rational, b: &Rational) -> Result<Vec<Place>> {
    let mut primes = arith::rational_support(&[a.clone(), b.clone()])?;
    if !primes.contains(&2) {
        primes.push(2);
        primes.sort_unstable();
    }
    let mut places: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinite);
    Ok(places)
}

/// How a place of Q behaves in a quadratic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decomposition {
    Split,
    Inert,
    Ramified,
}

/// K = Q(√d) for a squarefree `d ∉ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticField {
    d: i64,
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !arith::is_squarefree(d) {
            return Err(Error::InvalidQuadraticField(d));
        }
        Ok(QuadraticField { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_real(&self) -> bool {
        self.d > 0
    }

    /// At the real place "split" means two real embeddings and "ramified"
    /// means one complex place.
    pub fn decomposition(&self, v: Place) -> Decomposition {
        let d = BigInt::from(self.d);
        match v {
            Place::Infinite => {
                if self.d > 0 {
                    Decomposition::Split
                } else {
                    Decomposition::Ramified
                }
            }
            Place::Finite(2) => match self.d.rem_euclid(8) {
                1 => Decomposition::Split,
                5 => Decomposition::Inert,
                _ => Decomposition::Ramified,
            },
            Place::Finite(p) => match legendre(&d, p) {
                0 => Decomposition::Ramified,
                1 => Decomposition::Split,
                _ => Decomposition::Inert,
            },
        }
    }

    pub fn places_above(&self, v: Place) -> Vec<PlaceOverK> {
        match self.decomposition(v) {
            Decomposition::Split => vec![
                PlaceOverK {
                    base: v,
                    slot: Slot::First,
                    decomposition: Decomposition::Split,
                },
                PlaceOverK {
                    base: v,
                    slot: Slot::Second,
                    decomposition: Decomposition::Split,
                },
            ],
            dec => vec![PlaceOverK {
                base: v,
                slot: Slot::Only,
                decomposition: dec,
            }],
        }
    }

    /// The polynomial `x² - d`.
    pub fn minimal_polynomial(&self) -> IntegerPolynomial {
        IntegerPolynomial::new(vec![BigInt::from(-self.d), BigInt::zero(), BigInt::one()])
            .expect("x^2 - d is irreducible for squarefree d != 1")
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// Which of the places above a split place is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Only,
    First,
    Second,
}

/// A place of a quadratic field K, named by the place of Q below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaceOverK {
    pub base: Place,
    pub slot: Slot,
    pub decomposition: Decomposition,
}

impl PlaceOverK {
    /// `[K_w : Q_v]`.
    pub fn local_degree(&self) -> u64 {
        match self.decomposition {
            Decomposition::Split => 1,
            _ => 2,
        }
    }

    pub fn is_complex(&self) -> bool {
        self.base == Place::Infinite && self.decomposition != Decomposition::Split
    }
}

impl fmt::Display for PlaceOverK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.slot {
            Slot::Only => write!(f, "{}", self.base),
            Slot::First => write!(f, "{}.1", self.base),
            Slot::Second => write!(f, "{}.2", self.base),
        }
    }
}

/// A monic polynomial with integer coefficients, certified irreducible
/// over Q at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
    discriminant: BigInt,
}

const CERTIFY_PRIMES: usize = 80;

impl IntegerPolynomial {
    /// Coefficients constant term first.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        if !coeffs.last().unwrap().is_one() {
            return Err(Error::InvalidPolynomial("polynomial must be monic".into()));
        }
        if coeffs.len() > 64 {
            return Err(Error::InvalidPolynomial(
                "degree above 63 is not supported".into(),
            ));
        }
        let discriminant = discriminant(&coeffs);
        if discriminant.is_zero() {
            return Err(Error::InvalidPolynomial(
                "polynomial has a repeated factor".into(),
            ));
        }
        let f = IntegerPolynomial {
            coeffs,
            discriminant,
        };
        f.certify_irreducible()?;
        Ok(f)
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        IntegerPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The linear polynomial `x`, defining Q itself.
    pub fn linear() -> Self {
        IntegerPolynomial::from_i64(&[0, 1]).unwrap()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn to_rational(&self) -> Poly<Rational> {
        Poly::new(
            self.coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn reduce_mod(&self, p: u64) -> PolyModP {
        PolyModP::new(p, self.coeffs.iter().map(|c| mod_u64(c, p)).collect())
    }

    pub fn real_root_count(&self) -> usize {
        self.to_rational().real_root_count()
    }

    /// For a quadratic polynomial, the field Q(√D) it defines.
    pub fn quadratic_field(&self) -> Option<QuadraticField> {
        if self.degree() != 2 {
            return None;
        }
        let sf = arith::squarefree_part(&self.discriminant).ok()?;
        QuadraticField::new(sf.to_i64()?).ok()
    }

    fn certify_irreducible(&self) -> Result<()> {
        let n = self.degree();
        if n == 1 {
            return Ok(());
        }
        let reducible = || {
            Err(Error::InvalidPolynomial(format!(
                "{self} is reducible over Q"
            )))
        };
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return reducible();
        }
        if let Ok(divs) = divisors(c0) {
            for r in divs {
                if self.eval(&r).is_zero() || self.eval(&-r).is_zero() {
                    return reducible();
                }
            }
            if n <= 3 {
                return Ok(());
            }
        }
        // Degrees a rational factor could have, narrowed by factor patterns mod p.
        let full: u64 = if n == 63 {
            u64::MAX
        } else {
            (1u64 << (n + 1)) - 1
        };
        let mut possible = full & !1 & !(1u64 << n);
        for p in small_primes().take(CERTIFY_PRIMES) {
            if (&self.discriminant % BigInt::from(p)).is_zero() {
                continue;
            }
            let mut sums = 1u64;
            for d in self.reduce_mod(p).factor_degrees() {
                sums |= sums << d;
            }
            possible &= sums;
            if possible == 0 {
                return Ok(());
            }
        }
        Err(Error::InvalidPolynomial(format!(
            "could not certify irreducibility of {self}"
        )))
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_rational(), f)
    }
}

pub(crate) fn small_primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&p| arith::is_prime(p))
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let mut divs = vec![BigInt::one()];
    for p in arith::prime_factors(&n)? {
        let e = arith::valuation(&n, p);
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    Ok(divs)
}

/// Discriminant of a monic polynomial: `(-1)^(n(n-1)/2) Res(f, f')`.
fn discriminant(coeffs: &[BigInt]) -> BigInt {
    let f: Vec<Rational> = coeffs.iter().cloned().map(Rational::from_integer).collect();
    let n = f.len() - 1;
    let df: Vec<Rational> = (1..=n)
        .map(|i| f[i].clone() * Rational::from_integer(BigInt::from(i)))
        .collect();
    let res = resultant(&f, &df);
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
    debug_assert!(res.is_integer());
    res.to_integer() * sign
}

/// Sylvester resultant of two polynomials given constant term first.
pub(crate) fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut syl = vec![vec![Rational::zero(); size]; size];
    for r in 0..n {
        for (i, c) in f.iter().rev().enumerate() {
            syl[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.iter().rev().enumerate() {
            syl[n + r][r + i] = c.clone();
        }
    }
    linalg::determinant(&syl)
}

/// One place of a number field F above a prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LocalFactor {
    /// `[F_w : Q_p]`
    pub degree: u64,
    pub ramified: bool,
}

/// Places of `Q[x]/(f)` above `p`.
///
/// Unramified primes are handled by distinct-degree factorization mod `p`.
/// Primes dividing the discriminant are supported only for quadratic `f`,
/// where the decomposition follows from the field discriminant.
pub fn local_factors(f: &IntegerPolynomial, p: u64) -> Result<Vec<LocalFactor>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f.degree() == 1 {
        return Ok(vec![LocalFactor {
            degree: 1,
            ramified: false,
        }]);
    }
    let divides_disc = (f.discriminant() % BigInt::from(p)).is_zero();
    if !divides_disc {
        return Ok(f
            .reduce_mod(p)
            .factor_degrees()
            .into_iter()
            .map(|d| LocalFactor {
                degree: d as u64,
                ramified: false,
            })
            .collect());
    }
    let Some(k) = f.quadratic_field() else {
        return Err(Error::RamifiedPrime {
            prime: p,
            degree: f.degree(),
        });
    };
    Ok(match k.decomposition(Place::Finite(p)) {
        Decomposition::Split => vec![
            LocalFactor {
                degree: 1,
                ramified: false
            };
            2
        ],
        Decomposition::Inert => vec![LocalFactor {
            degree: 2,
            ramified: false,
        }],
        Decomposition::Ramified => vec![LocalFactor {
            degree: 2,
            ramified: true,
        }],
    })
}

/// Local degrees `[F_w : Q_p]` of the places above `p`, ascending. At
/// unramified primes these are the residue degrees.
pub fn local_degrees(f: &IntegerPolynomial, p: u64) -> Result<Vec<u64>> {
    let mut degs: Vec<u64> = local_factors(f, p)?.into_iter().map(|l| l.degree).collect();
    degs.sort_unstable();
    Ok(degs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn symbol_examples() {
        for v in [Place::Infinite, Place::Finite(2), Place::Finite(7)] {
            assert_eq!(hilbert_symbol(&q(1), &q(13), v).unwrap(), 1);
        }
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Place::Infinite).unwrap(), -1);
        assert_eq!(
            hilbert_symbol(&q(-1), &q(-1), Place::Finite(2)).unwrap(),
            -1
        );
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Place::Finite(5)).unwrap(), 1);
        assert_eq!(
            hilbert_symbol(&q(0), &q(3), Place::Infinite),
            Err(Error::ZeroArgument)
        );
    }

    #[test]
    fn symbol_with_denominators() {
        let a = Rational::new(3.into(), 4.into());
        assert_eq!(
            hilbert_symbol(&a, &q(-1), Place::Finite(3)).unwrap(),
            hilbert_symbol(&q(3), &q(-1), Place::Finite(3)).unwrap()
        );
    }

    #[test]
    fn place_construction() {
        assert_eq!(Place::finite(7), Ok(Place::Finite(7)));
        assert_eq!(Place::finite(9), Err(Error::NotPrime(9)));
        assert!(Place::Finite(3) < Place::Infinite);
    }

    #[test]
    fn quadratic_decomposition() {
        let k = QuadraticField::new(-1).unwrap();
        assert_eq!(k.decomposition(Place::Finite(5)), Decomposition::Split);
        assert_eq!(k.decomposition(Place::Finite(3)), Decomposition::Inert);
        assert_eq!(k.decomposition(Place::Finite(2)), Decomposition::Ramified);
        assert_eq!(k.decomposition(Place::Infinite), Decomposition::Ramified);
        let k = QuadraticField::new(17).unwrap();
        assert_eq!(k.decomposition(Place::Finite(2)), Decomposition::Split);
        assert_eq!(
            QuadraticField::new(5)
                .unwrap()
                .decomposition(Place::Finite(2)),
            Decomposition::Inert
        );
        assert!(QuadraticField::new(12).is_err());
        assert!(QuadraticField::new(1).is_err());
        assert!(QuadraticField::new(0).is_err());
    }

    #[test]
    fn local_degree_examples() {
        let x = IntegerPolynomial::linear();
        assert_eq!(local_degrees(&x, 7).unwrap(), vec![1]);
        let f = IntegerPolynomial::from_i64(&[-1, -1, 0, 1]).unwrap();
        assert_eq!(local_degrees(&f, 2).unwrap(), vec![3]);
        let f = IntegerPolynomial::from_i64(&[1, 0, 1]).unwrap();
        assert_eq!(local_degrees(&f, 5).unwrap(), vec![1, 1]);
        let f = IntegerPolynomial::from_i64(&[-1, 1, 0, 1]).unwrap();
        assert_eq!(local_degrees(&f, 5).unwrap(), vec![3]);
    }

    #[test]
    fn ramified_primes() {
        // x^2 + 1 at 2 is ramified; x^2 - 5 at 2 is inert even though 2 | 20
        let f = IntegerPolynomial::from_i64(&[1, 0, 1]).unwrap();
        assert_eq!(
            local_factors(&f, 2).unwrap(),
            vec![LocalFactor {
                degree: 2,
                ramified: true
            }]
        );
        let f = IntegerPolynomial::from_i64(&[-5, 0, 1]).unwrap();
        assert_eq!(local_degrees(&f, 2).unwrap(), vec![2]);
        let f = IntegerPolynomial::from_i64(&[-2, 0, 0, 1]).unwrap();
        assert_eq!(
            local_degrees(&f, 3),
            Err(Error::RamifiedPrime {
                prime: 3,
                degree: 3
            })
        );
    }

    #[test]
    fn polynomial_validation() {
        assert!(IntegerPolynomial::from_i64(&[-1, 0, 1]).is_err());
        assert!(IntegerPolynomial::from_i64(&[1, 0, 2]).is_err());
        assert!(IntegerPolynomial::from_i64(&[0, 0, 1]).is_err());
        // (x^2 + 1)(x^2 + 2) has no rational roots
        assert!(IntegerPolynomial::from_i64(&[2, 0, 3, 0, 1]).is_err());
        assert!(IntegerPolynomial::from_i64(&[-1, -1, 0, 0, 0, 1]).is_ok());
        let f = IntegerPolynomial::from_i64(&[-2, 0, 0, 1]).unwrap();
        assert_eq!(f.discriminant(), &BigInt::from(-108));
        assert_eq!(f.to_string(), "x^3 - 2");
    }
}
