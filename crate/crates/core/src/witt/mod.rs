//! Quadratic forms over Q: Hasse–Minkowski invariants, isotropy, Witt
//! equivalence; hermitian forms over (K, conjugation) through their trace
//! forms; and the Scharlau transfer along odd-degree extensions.
//!
//! Discriminants are plain determinants modulo squares (no sign twist).
//! The Hasse invariant at `v` is `∏_{i<j} (a_i, a_j)_v`.

mod hermitian;
mod transfer;

pub use hermitian::{hermitian_similar, trace_form, HermitianForm, Similarity, SwapWitness};
pub use transfer::{
    odd_degree_descent, projection_formula_check, transfer, DescentOutcome, FieldElement,
    ProjectionCheck, SimpleExtension,
};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::linalg;
use crate::places::{hilbert_symbol, Place};
use crate::{RatMatrix, Rational};

/// A diagonal form `⟨a₁, …, aₙ⟩` with nonzero rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadraticForm {
    entries: Vec<Rational>,
}

/// Complete isometry invariants over Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittInvariants {
    pub dim: usize,
    /// Squarefree representative of the determinant.
    pub disc: BigInt,
    /// Places where the Hasse invariant is -1.
    pub hasse_minus: BTreeSet<Place>,
    pub signature: i64,
}

/// Local data `(n, d, ε)` classifying a form over one completion.
struct LocalForm {
    dim: usize,
    disc: BigInt,
    hasse: i8,
}

fn rat(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Squarefree part of `x * y` for squarefree `x`, `y`.
fn sf_mul(x: &BigInt, y: &BigInt) -> BigInt {
    let g = x.gcd(y);
    (x / &g) * (y / &g)
}

fn symbol(a: &BigInt, b: &BigInt, v: Place) -> i8 {
    hilbert_symbol(&rat(a), &rat(b), v).expect("squarefree classes are nonzero")
}

fn is_local_square(x: &BigInt, v: Place) -> bool {
    match v {
        Place::Infinite => x.is_positive(),
        Place::Finite(p) => arith::is_padic_square(&rat(x), p),
    }
}

impl LocalForm {
    fn is_isotropic(&self, v: Place) -> bool {
        let minus_one = -BigInt::one();
        match self.dim {
            0 | 1 => false,
            2 => is_local_square(&-&self.disc, v),
            3 => symbol(&minus_one, &-&self.disc, v) == self.hasse,
            4 => !is_local_square(&self.disc, v) || self.hasse == symbol(&minus_one, &minus_one, v),
            _ => true,
        }
    }

    /// Dimension of the anisotropic part, peeling hyperbolic planes:
    /// `q = H ⊥ q'` gives `d' = -d` and `ε' = ε · (-1, -d)`.
    fn anisotropic_dimension(mut self, v: Place) -> usize {
        while self.is_isotropic(v) {
            let disc = -&self.disc;
            self.hasse *= symbol(&-BigInt::one(), &disc, v);
            self.disc = disc;
            self.dim -= 2;
        }
        self.dim
    }
}

impl QuadraticForm {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::ZeroArgument);
        }
        Ok(QuadraticForm { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        QuadraticForm::new(
            entries
                .iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect(),
        )
    }

    pub fn empty() -> Self {
        QuadraticForm::default()
    }

    /// `n` copies of the hyperbolic plane `⟨1, -1⟩`.
    pub fn hyperbolic(n: usize) -> Self {
        let mut e = Vec::with_capacity(2 * n);
        for _ in 0..n {
            e.push(Rational::one());
            e.push(-Rational::one());
        }
        QuadraticForm { entries: e }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let mut e = self.entries.clone();
        e.extend(other.entries.iter().cloned());
        QuadraticForm { entries: e }
    }

    /// `c · q`; `c` must be nonzero.
    pub fn scale(&self, c: &Rational) -> Self {
        assert!(!c.is_zero(), "scaling by zero");
        QuadraticForm {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut e = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                e.push(a * b);
            }
        }
        QuadraticForm { entries: e }
    }

    pub fn gram(&self) -> RatMatrix {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            self.entries[i].clone()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn signature(&self) -> i64 {
        self.entries
            .iter()
            .map(|a| if a.is_positive() { 1 } else { -1 })
            .sum()
    }

    fn squarefree_entries(&self) -> Result<Vec<BigInt>> {
        self.entries
            .iter()
            .map(arith::squarefree_part_rational)
            .collect()
    }

    /// The real place, 2, and every prime dividing an entry: outside these
    /// the form is unimodular and its local behaviour is forced.
    fn support(sf: &[BigInt]) -> Result<Vec<Place>> {
        let mut primes = vec![2u64];
        for s in sf {
            primes.extend(arith::prime_factors(s)?);
        }
        primes.sort_unstable();
        primes.dedup();
        let mut places: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
        places.push(Place::Infinite);
        Ok(places)
    }

    fn disc_of(sf: &[BigInt]) -> BigInt {
        sf.iter().fold(BigInt::one(), |acc, s| sf_mul(&acc, s))
    }

    /// `∏_{i<j} (a_i, a_j)_v`, accumulated as `∏_j (a₁⋯a_{j-1}, a_j)_v`.
    fn hasse_of(sf: &[BigInt], v: Place) -> i8 {
        let mut running = BigInt::one();
        let mut h = 1;
        for s in sf {
            h *= symbol(&running, s, v);
            running = sf_mul(&running, s);
        }
        h
    }

    pub fn determinant(&self) -> Rational {
        self.entries.iter().fold(Rational::one(), |acc, a| acc * a)
    }

    pub fn hasse_invariant(&self, v: Place) -> Result<i8> {
        Ok(Self::hasse_of(&self.squarefree_entries()?, v))
    }

    pub fn invariants(&self) -> Result<WittInvariants> {
        let sf = self.squarefree_entries()?;
        let hasse_minus = Self::support(&sf)?
            .into_iter()
            .filter(|&v| Self::hasse_of(&sf, v) == -1)
            .collect();
        Ok(WittInvariants {
            dim: self.dim(),
            disc: Self::disc_of(&sf),
            hasse_minus,
            signature: self.signature(),
        })
    }

    /// Hasse–Minkowski: isometric iff dimension, discriminant, all Hasse
    /// invariants and signature agree.
    pub fn isometric(&self, other: &Self) -> Result<bool> {
        Ok(self.invariants()? == other.invariants()?)
    }

    pub fn local_anisotropic_dimension(&self, v: Place) -> Result<usize> {
        if v == Place::Infinite {
            return Ok(self.signature().unsigned_abs() as usize);
        }
        let sf = self.squarefree_entries()?;
        Ok(Self::local_form(&sf, v).anisotropic_dimension(v))
    }

    fn local_form(sf: &[BigInt], v: Place) -> LocalForm {
        LocalForm {
            dim: sf.len(),
            disc: Self::disc_of(sf),
            hasse: Self::hasse_of(sf, v),
        }
    }

    /// Dimension of the anisotropic part over Q: the maximum of the local
    /// anisotropic dimensions over the support places.
    pub fn anisotropic_dimension(&self) -> Result<usize> {
        let sf = self.squarefree_entries()?;
        let mut best = self.signature().unsigned_abs() as usize;
        for v in Self::support(&sf)? {
            if v == Place::Infinite {
                continue;
            }
            best = best.max(Self::local_form(&sf, v).anisotropic_dimension(v));
        }
        Ok(best)
    }

    pub fn is_isotropic(&self) -> Result<bool> {
        Ok(self.dim() > 0 && self.anisotropic_dimension()? < self.dim())
    }

    pub fn is_hyperbolic(&self) -> Result<bool> {
        Ok(self.anisotropic_dimension()? == 0)
    }

    /// Equality in W(Q): `self ⊥ -other` is hyperbolic.
    pub fn witt_equivalent(&self, other: &Self) -> Result<bool> {
        self.orthogonal_sum(&other.negate()).is_hyperbolic()
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")
    }
}

/// Diagonal form isometric to the given symmetric nondegenerate Gram matrix.
pub fn diagonalize(gram: &RatMatrix) -> Result<QuadraticForm> {
    QuadraticForm::new(linalg::diagonalize(gram)?)
}
