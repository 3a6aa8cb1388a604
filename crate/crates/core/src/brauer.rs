//! Brauer classes over Q and over a quadratic field K, stored as their
//! local Hasse invariants.
//!
//! Over a number field a class is determined by its invariants, its
//! exponent equals its Schur index, and the index is the lcm of the local
//! orders. Everything here works at that level; the only algebras handled
//! element-wise are quaternions (see [`crate::quat`]).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith;
use crate::error::{Error, Result};
use crate::places::{
    self, hilbert_symbol, Decomposition, IntegerPolynomial, Place, PlaceOverK, QuadraticField,
};
use crate::Rational;

/// An element of Q/Z, kept reduced with `0 <= num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction01 {
    num: u64,
    den: u64,
}

impl Fraction01 {
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidClass("zero denominator".into()));
        }
        let r = i128::from(num).rem_euclid(i128::from(den)) as u64;
        Ok(Self::reduced(r, den))
    }

    fn reduced(num: u64, den: u64) -> Self {
        let g = num.gcd(&den);
        Fraction01 {
            num: num / g,
            den: den / g,
        }
    }

    pub const fn zero() -> Self {
        Fraction01 { num: 0, den: 1 }
    }

    pub const fn half() -> Self {
        Fraction01 { num: 1, den: 2 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Order in Q/Z.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn add(self, other: Self) -> Self {
        let den = self.den.lcm(&other.den);
        let a = u128::from(self.num) * u128::from(den / self.den);
        let b = u128::from(other.num) * u128::from(den / other.den);
        Self::reduced(((a + b) % u128::from(den)) as u64, den)
    }

    pub fn neg(self) -> Self {
        Self::reduced((self.den - self.num) % self.den, self.den)
    }

    pub fn times(self, k: u64) -> Self {
        let n = (u128::from(self.num) * u128::from(k)) % u128::from(self.den);
        Self::reduced(n as u64, self.den)
    }
}

impl fmt::Display for Fraction01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Finite-support map to Q/Z with zero entries dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Invariants<P: Ord>(BTreeMap<P, Fraction01>);

impl<P: Ord> Default for Invariants<P> {
    fn default() -> Self {
        Invariants(BTreeMap::new())
    }
}

impl<P: Ord + Copy> Invariants<P> {
    fn from_entries(entries: impl IntoIterator<Item = (P, Fraction01)>) -> Result<Self>
    where
        P: fmt::Display,
    {
        let mut map = BTreeMap::new();
        for (p, x) in entries {
            if map.insert(p, x).is_some() {
                return Err(Error::InvalidClass(format!("place {p} listed twice")));
            }
        }
        map.retain(|_, x| !x.is_zero());
        Ok(Invariants(map))
    }

    fn get(&self, p: &P) -> Fraction01 {
        self.0.get(p).copied().unwrap_or(Fraction01::zero())
    }

    fn sum(&self) -> Fraction01 {
        self.0.values().fold(Fraction01::zero(), |a, &b| a.add(b))
    }

    fn combine(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (p, x) in &other.0 {
            let e = map.entry(*p).or_insert(Fraction01::zero());
            *e = e.add(*x);
        }
        map.retain(|_, x| !x.is_zero());
        Invariants(map)
    }

    fn negate(&self) -> Self {
        Invariants(self.0.iter().map(|(p, x)| (*p, x.neg())).collect())
    }

    fn index(&self) -> u64 {
        self.0.values().fold(1, |acc, x| acc.lcm(&x.order()))
    }
}

/// A class in Br Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrauerClassQ {
    inv: Invariants<Place>,
}

impl BrauerClassQ {
    /// Validates that the real invariant lies in {0, 1/2} and that the
    /// invariants sum to zero.
    pub fn new(entries: impl IntoIterator<Item = (Place, Fraction01)>) -> Result<Self> {
        let inv = Invariants::from_entries(entries)?;
        let real = inv.get(&Place::Infinite);
        if !real.is_zero() && real != Fraction01::half() {
            return Err(Error::InvalidClass(format!(
                "real invariant {real} not in {{0, 1/2}}"
            )));
        }
        if !inv.sum().is_zero() {
            return Err(Error::InvalidClass(format!(
                "invariants sum to {} instead of 0",
                inv.sum()
            )));
        }
        Ok(BrauerClassQ { inv })
    }

    pub fn zero() -> Self {
        BrauerClassQ {
            inv: Invariants::default(),
        }
    }

    pub fn invariant(&self, v: Place) -> Fraction01 {
        self.inv.get(&v)
    }

    /// Places with nonzero invariant, ascending.
    pub fn support(&self) -> impl Iterator<Item = (Place, Fraction01)> + '_ {
        self.inv.0.iter().map(|(p, x)| (*p, *x))
    }

    pub fn is_zero(&self) -> bool {
        self.inv.0.is_empty()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        BrauerClassQ {
            inv: self.inv.combine(&other.inv),
        }
    }

    pub fn opposite(&self) -> Self {
        BrauerClassQ {
            inv: self.inv.negate(),
        }
    }

    /// lcm of the local orders (index = exponent over number fields).
    pub fn schur_index(&self) -> u64 {
        self.inv.index()
    }

    /// Base change to K: each place `w | v` gets `[K_w : Q_v] * inv_v`.
    pub fn restrict_to_quadratic(&self, k: &QuadraticField) -> BrauerClassK {
        let entries = self.support().flat_map(|(v, x)| {
            k.places_above(v)
                .into_iter()
                .map(move |w| (w, x.times(w.local_degree())))
        });
        BrauerClassK {
            field: *k,
            inv: Invariants::from_entries(entries)
                .expect("places above distinct places are distinct"),
        }
    }

    /// Whether `Q[x]/(f)` splits this class.
    pub fn splits_over(&self, f: &IntegerPolynomial) -> Result<bool> {
        for (v, x) in self.support() {
            let ok = match v {
                Place::Infinite => f.real_root_count() == 0,
                Place::Finite(p) => places::local_degrees(f, p)?
                    .into_iter()
                    .all(|d| x.times(d).is_zero()),
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn splits_over_quadratic(&self, k: &QuadraticField) -> bool {
        self.restrict_to_quadratic(k).is_zero()
    }
}

impl fmt::Display for BrauerClassQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_invariants(f, self.support())
    }
}

fn write_invariants<P: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    entries: impl Iterator<Item = (P, Fraction01)>,
) -> fmt::Result {
    write!(f, "{{")?;
    for (i, (p, x)) in entries.enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{p}: {x}")?;
    }
    write!(f, "}}")
}

/// Class of the quaternion algebra `(a, b)`: invariant 1/2 exactly where
/// the Hilbert symbol is -1.
pub fn quaternion_class(a: &Rational, b: &Rational) -> Result<BrauerClassQ> {
    let mut entries = Vec::new();
    for v in places::symbol_support(a, b)? {
        if hilbert_symbol(a, b, v)? == -1 {
            entries.push((v, Fraction01::half()));
        }
    }
    BrauerClassQ::new(entries)
}

/// A class in Br K for K = Q(√d).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrauerClassK {
    field: QuadraticField,
    inv: Invariants<PlaceOverK>,
}

impl BrauerClassK {
    /// Validates places against the decomposition in K, the real and
    /// complex constraints, and the zero-sum condition.
    pub fn new(
        field: QuadraticField,
        entries: impl IntoIterator<Item = (PlaceOverK, Fraction01)>,
    ) -> Result<Self> {
        let inv = Invariants::from_entries(entries)?;
        for (w, x) in &inv.0 {
            if !field.places_above(w.base).contains(w) {
                return Err(Error::InvalidClass(format!(
                    "{w} is not a place of {field}"
                )));
            }
            if w.is_complex() {
                return Err(Error::InvalidClass(
                    "complex place with nonzero invariant".into(),
                ));
            }
            if w.base == Place::Infinite && *x != Fraction01::half() {
                return Err(Error::InvalidClass(format!(
                    "real invariant {x} not in {{0, 1/2}}"
                )));
            }
        }
        if !inv.sum().is_zero() {
            return Err(Error::InvalidClass(format!(
                "invariants sum to {} instead of 0",
                inv.sum()
            )));
        }
        Ok(BrauerClassK { field, inv })
    }

    pub fn zero(field: QuadraticField) -> Self {
        BrauerClassK {
            field,
            inv: Invariants::default(),
        }
    }

    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    pub fn invariant(&self, w: &PlaceOverK) -> Fraction01 {
        self.inv.get(w)
    }

    pub fn support(&self) -> impl Iterator<Item = (PlaceOverK, Fraction01)> + '_ {
        self.inv.0.iter().map(|(p, x)| (*p, *x))
    }

    pub fn is_zero(&self) -> bool {
        self.inv.0.is_empty()
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::BaseMismatch);
        }
        Ok(BrauerClassK {
            field: self.field,
            inv: self.inv.combine(&other.inv),
        })
    }

    pub fn opposite(&self) -> Self {
        BrauerClassK {
            field: self.field,
            inv: self.inv.negate(),
        }
    }

    pub fn schur_index(&self) -> u64 {
        self.inv.index()
    }

    /// `inv_v = Σ_{w | v} inv_w`.
    pub fn corestrict(&self) -> BrauerClassQ {
        let mut map: BTreeMap<Place, Fraction01> = BTreeMap::new();
        for (w, x) in self.support() {
            let e = map.entry(w.base).or_insert(Fraction01::zero());
            *e = e.add(x);
        }
        map.retain(|_, x| !x.is_zero());
        BrauerClassQ {
            inv: Invariants(map),
        }
    }

    /// A K/Q-involution exists iff the corestriction vanishes.
    pub fn admits_unitary_involution(&self) -> bool {
        self.corestrict().is_zero()
    }

    /// Whether the compositum `F K` (F = `Q[x]/(f)`) splits this class:
    /// every place of `F ⊗ K` above a supported place `w` must have local
    /// degree over `K_w` killing `inv_w`.
    pub fn splits_over(&self, f: &IntegerPolynomial) -> Result<bool> {
        for (w, x) in self.support() {
            let degrees = match w.base {
                // complex places carry no invariant; a real K_w is R
                Place::Infinite => {
                    if f.real_root_count() == 0 {
                        vec![2]
                    } else {
                        vec![1]
                    }
                }
                Place::Finite(p) => compositum_degrees(f, &self.field, w.decomposition, p)?,
            };
            if !degrees.into_iter().all(|d| x.times(d).is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Degrees over `K_w` of the factors of `F ⊗_Q K_w`, for `w | p`.
fn compositum_degrees(
    f: &IntegerPolynomial,
    k: &QuadraticField,
    dec: Decomposition,
    p: u64,
) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for lf in places::local_factors(f, p)? {
        match (dec, lf.ramified) {
            (Decomposition::Split, _) => out.push(lf.degree),
            (Decomposition::Inert, false) => {
                // unramified of degree r against the unramified quadratic
                let r = lf.degree;
                let g = r.gcd(&2);
                out.extend(std::iter::repeat_n(r / g, g as usize));
            }
            (Decomposition::Ramified, false) => out.push(lf.degree),
            (Decomposition::Inert, true) => out.push(2),
            (Decomposition::Ramified, true) => {
                // two ramified quadratics: equal iff d_F / d_K is a p-adic square
                let df = f.quadratic_field().expect("only quadratic f ramifies here");
                let ratio = Rational::new(BigInt::from(df.d()), BigInt::from(k.d()));
                if arith::is_padic_square(&ratio, p) {
                    out.extend([1, 1]);
                } else {
                    out.push(2);
                }
            }
        }
    }
    Ok(out)
}

impl fmt::Display for BrauerClassK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", ClassEntries(self), self.field)
    }
}

struct ClassEntries<'a>(&'a BrauerClassK);

impl fmt::Display for ClassEntries<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_invariants(f, self.0.support())
    }
}

/// Finds the squarefree pair `(a, b)` of least height `max(|a|, |b|)` with
/// `quaternion_class(a, b) = class`. Ties go to the smaller `(|a|, |b|)`,
/// then positive before negative in each slot.
///
/// Every odd prime of the support must divide `ab`, so once one entry is
/// fixed the other only runs over multiples of the missing primes.
pub fn find_quaternion_symbol(class: &BrauerClassQ, height_bound: u64) -> Result<(i64, i64)> {
    if class.support().any(|(_, x)| x != Fraction01::half()) {
        return Err(Error::InvalidClass("exponent does not divide 2".into()));
    }
    let odd: Vec<u64> = class
        .support()
        .filter_map(|(v, _)| v.prime())
        .filter(|&p| p != 2)
        .collect();
    let bound = i64::try_from(height_bound).unwrap_or(i64::MAX);
    // product of the support primes not dividing n, saturating past the bound
    let missing = |n: i64| -> i64 {
        odd.iter()
            .filter(|&&p| n % p as i64 != 0)
            .fold(1i64, |acc, &p| acc.saturating_mul(p as i64))
    };
    let matches = |ma: i64, mb: i64| -> Result<Option<(i64, i64)>> {
        for (a, b) in [(ma, mb), (ma, -mb), (-ma, mb), (-ma, -mb)] {
            let cls = quaternion_class(
                &Rational::from_integer(a.into()),
                &Rational::from_integer(b.into()),
            )?;
            if &cls == class {
                return Ok(Some((a, b)));
            }
        }
        Ok(None)
    };
    for h in 1..=bound {
        if !arith::is_squarefree(h) {
            continue;
        }
        let step = missing(h);
        if step > h {
            continue;
        }
        // (m, h) for m < h, then (h, m) for m <= h
        for m in (step..h).step_by(step as usize) {
            if arith::is_squarefree(m) {
                if let Some(found) = matches(m, h)? {
                    return Ok(found);
                }
            }
        }
        for m in (step..=h).step_by(step as usize) {
            if arith::is_squarefree(m) {
                if let Some(found) = matches(h, m)? {
                    return Ok(found);
                }
            }
        }
    }
    Err(Error::SearchExhausted {
        what: "quaternion symbol",
        bound: height_bound,
    })
}
