//! Hermitian forms over `(K, ¯)` for `K = Q(√d)`, handled through their
//! trace forms `⟨a⟩ ↦ ⟨a, -ad⟩` (the norm form of K scaled by `a`).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::QuadraticForm;
use crate::arith;
use crate::error::{Error, Result};
use crate::places::{hilbert_symbol, Decomposition, Place, QuadraticField};
use crate::quat::KScalar;
use crate::Rational;

/// Largest |ν| tried when looking for a similarity multiplier.
const MULTIPLIER_BOUND: u64 = 1_000_000;

/// Diagonal hermitian form `⟨a₁, …, a_r⟩` over K; entries are nonzero
/// rationals, the only possible diagonal values of a hermitian form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianForm {
    field: QuadraticField,
    entries: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity {
    pub similar: bool,
    /// ν with `ν·h' ≅ h`, when similar.
    pub multiplier: Option<Rational>,
}

/// A K-vector on which the trace-form block of one entry vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapWitness {
    pub entry: usize,
    pub vector: (KScalar, KScalar),
    pub value: KScalar,
}

impl HermitianForm {
    pub fn new(field: QuadraticField, entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::ZeroArgument);
        }
        Ok(HermitianForm { field, entries })
    }

    pub fn from_i64(field: QuadraticField, entries: &[i64]) -> Result<Self> {
        HermitianForm::new(
            field,
            entries
                .iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect(),
        )
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn scale(&self, nu: &Rational) -> Self {
        assert!(!nu.is_zero(), "scaling by zero");
        HermitianForm {
            field: self.field,
            entries: self.entries.iter().map(|a| a * nu).collect(),
        }
    }

    pub fn trace_form(&self) -> QuadraticForm {
        trace_form(self)
    }

    /// Over K each block `⟨a, -ad⟩` is hyperbolic: `(√d, 1)` is isotropic.
    pub fn swap_witnesses(&self) -> Vec<SwapWitness> {
        let d = Rational::from_integer(self.field.d().into());
        let x = KScalar::new(Rational::zero(), Rational::one());
        let y = KScalar::new(Rational::one(), Rational::zero());
        self.entries
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let sq = |z: &KScalar| {
                    KScalar::new(
                        &z.re * &z.re + &d * &z.im * &z.im,
                        Rational::from_integer(2.into()) * &z.re * &z.im,
                    )
                };
                let (x2, y2) = (sq(&x), sq(&y));
                let ad = a * &d;
                let value = KScalar::new(a * &x2.re - &ad * &y2.re, a * &x2.im - &ad * &y2.im);
                SwapWitness {
                    entry: i,
                    vector: (x.clone(), y.clone()),
                    value,
                }
            })
            .collect()
    }
}

impl fmt::Display for HermitianForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "> over Q(sqrt({}))", self.field.d())
    }
}

pub fn trace_form(h: &HermitianForm) -> QuadraticForm {
    let d = Rational::from_integer(h.field.d().into());
    let mut e = Vec::with_capacity(2 * h.rank());
    for a in &h.entries {
        e.push(a.clone());
        e.push(-(a * &d));
    }
    QuadraticForm::new(e).expect("entries are nonzero")
}

/// Decide whether `h ≅ ν·h'` for some `ν ∈ Q*` and find such a ν.
///
/// Trace forms classify hermitian forms. Scaling the trace form of a rank-r
/// form by ν keeps dimension and discriminant, multiplies the signature by
/// `sign ν` and the Hasse invariant at v by `(ν, d)_v^r`. For even r only
/// the sign of ν matters. For odd r the Hasse invariants must differ exactly
/// on a set T of places nonsplit in K; some ν has `(ν, d)_v = -1` exactly
/// on T, and it is found by search over squarefree integers.
pub fn hermitian_similar(h: &HermitianForm, h2: &HermitianForm) -> Result<Similarity> {
    if h.field != h2.field {
        return Err(Error::BaseMismatch);
    }
    if h.rank() != h2.rank() {
        return Err(Error::RankMismatch {
            left: h.rank(),
            right: h2.rank(),
        });
    }
    let (q, q2) = (trace_form(h), trace_form(h2));
    let no = Similarity {
        similar: false,
        multiplier: None,
    };
    if h.rank().is_multiple_of(2) {
        for nu in [Rational::one(), -Rational::one()] {
            if q2.scale(&nu).isometric(&q)? {
                return Ok(Similarity {
                    similar: true,
                    multiplier: Some(nu),
                });
            }
        }
        return Ok(no);
    }
    let (a, b) = (q.invariants()?, q2.invariants()?);
    let differ: BTreeSet<Place> = a
        .hasse_minus
        .symmetric_difference(&b.hasse_minus)
        .copied()
        .collect();
    if differ
        .iter()
        .any(|&v| h.field.decomposition(v) == Decomposition::Split)
    {
        return Ok(no);
    }
    let sign = match (a.signature.signum(), b.signature.signum()) {
        (0, 0) => None,
        (x, y) if a.signature.abs() == b.signature.abs() && x != 0 && y != 0 => Some(x * y),
        _ => return Ok(no),
    };
    let nu = find_multiplier(h.field, &differ, sign)?;
    if !q2.scale(&nu).isometric(&q)? {
        return Ok(no);
    }
    Ok(Similarity {
        similar: true,
        multiplier: Some(nu),
    })
}

/// Smallest squarefree ν (by |ν|, positive first, of the given sign if
/// any) with `(ν, d)_v = -1` exactly at the places of `target`.
fn find_multiplier(
    field: QuadraticField,
    target: &BTreeSet<Place>,
    sign: Option<i64>,
) -> Result<Rational> {
    let d = Rational::from_integer(field.d().into());
    let d_primes = arith::prime_factors(&BigInt::from(field.d()))?;
    for m in 1..=MULTIPLIER_BOUND {
        if !arith::is_squarefree(m as i64) {
            continue;
        }
        let primes = arith::prime_factors(&BigInt::from(m))?;
        for nu in [m as i64, -(m as i64)] {
            if sign.is_some_and(|s| s != nu.signum()) {
                continue;
            }
            let nu_r = Rational::from_integer(nu.into());
            let mut places: BTreeSet<Place> = target.clone();
            places.extend(primes.iter().chain(&d_primes).map(|&p| Place::Finite(p)));
            places.insert(Place::Finite(2));
            places.insert(Place::Infinite);
            let ok = places.iter().all(|&v| {
                let s = hilbert_symbol(&nu_r, &d, v).expect("nonzero");
                (s == -1) == target.contains(&v)
            });
            if ok {
                return Ok(nu_r);
            }
        }
    }
    Err(Error::SearchExhausted {
        what: "similarity multiplier",
        bound: MULTIPLIER_BOUND,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(d: i64) -> QuadraticField {
        QuadraticField::new(d).unwrap()
    }

    fn h(d: i64, e: &[i64]) -> HermitianForm {
        HermitianForm::from_i64(k(d), e).unwrap()
    }

    #[test]
    fn trace_form_shape() {
        assert_eq!(
            trace_form(&h(-1, &[3])),
            QuadraticForm::from_i64(&[3, 3]).unwrap()
        );
        assert_eq!(
            trace_form(&h(2, &[1, -1])),
            QuadraticForm::from_i64(&[1, -2, -1, 2]).unwrap()
        );
    }

    #[test]
    fn similarity_examples() {
        let s = hermitian_similar(&h(-1, &[1]), &h(-1, &[3])).unwrap();
        assert!(s.similar);
        let nu = s.multiplier.unwrap();
        assert!(trace_form(&h(-1, &[3]).scale(&nu))
            .isometric(&trace_form(&h(-1, &[1])))
            .unwrap());

        // rank 2: <1,1> and <1,3> over Q(i) have different trace forms and
        // scaling cannot fix that
        let s = hermitian_similar(&h(-1, &[1, 1]), &h(-1, &[1, 3])).unwrap();
        assert!(!s.similar);
        assert!(
            hermitian_similar(&h(-1, &[1, 1]), &h(-1, &[2, 1]))
                .unwrap()
                .similar
        );
        assert_eq!(
            hermitian_similar(&h(-1, &[1]), &h(-1, &[1, 1])),
            Err(Error::RankMismatch { left: 1, right: 2 })
        );
        assert_eq!(
            hermitian_similar(&h(-1, &[1]), &h(2, &[1])),
            Err(Error::BaseMismatch)
        );
    }

    #[test]
    fn similarity_spec_cases() {
        let s = hermitian_similar(&h(-1, &[1, 1, 1]), &h(-1, &[1, 1, 2])).unwrap();
        assert_eq!(
            s,
            Similarity {
                similar: true,
                multiplier: Some(Rational::one())
            }
        );
        assert!(
            !hermitian_similar(&h(-1, &[1, 1, 1]), &h(-1, &[1, 1, -1]))
                .unwrap()
                .similar
        );
        let s = hermitian_similar(&h(-1, &[1, 3, 3]), &h(-1, &[-1, -3, -3])).unwrap();
        assert_eq!(s.multiplier, Some(-Rational::one()));
    }

    #[test]
    fn rank_one_always_similar() {
        for d in [-1, -3, 2, 5, -7] {
            for a in [1, -1, 2, 3, -6, 7, 11] {
                let s = hermitian_similar(&h(d, &[1]), &h(d, &[a])).unwrap();
                assert!(s.similar);
                let nu = s.multiplier.unwrap();
                assert!(trace_form(&h(d, &[a]).scale(&nu))
                    .isometric(&trace_form(&h(d, &[1])))
                    .unwrap());
            }
        }
    }

    #[test]
    fn swap_witnesses_vanish() {
        for w in h(-5, &[1, 2, -3]).swap_witnesses() {
            assert!(w.value.re.is_zero() && w.value.im.is_zero());
        }
    }
}
