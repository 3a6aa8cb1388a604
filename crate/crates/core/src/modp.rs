//! Polynomials over the prime field F_p, just enough for distinct-degree
//! factorization of squarefree polynomials.

use crate::arith::{mul_mod, pow_mod};

/// Constant term first, trimmed, coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyModP {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|v| v % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyModP { p, coeffs: c }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn x(p: u64) -> Self {
        PolyModP::new(p, vec![0, 1])
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        PolyModP::new(
            p,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    (a + p - b) % p
                })
                .collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PolyModP::new(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        PolyModP::new(p, out)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("nonzero divisor");
        let inv = pow_mod(*d.coeffs.last().unwrap(), p - 2, p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyModP::new(p, Vec::new()), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], inv, p);
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = (rem[i + j] + p - mul_mod(c, dc, p)) % p;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (PolyModP::new(p, quot), PolyModP::new(p, rem))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = PolyModP::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Degrees of the irreducible factors of a squarefree polynomial,
    /// ascending (distinct-degree factorization).
    pub fn factor_degrees(&self) -> Vec<usize> {
        let p = self.p;
        let mut f = self.clone();
        let mut degrees = Vec::new();
        let x = PolyModP::x(p);
        let mut h = x.rem(&f);
        let mut i = 1;
        while f.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(p, &f);
            let g = f.gcd(&h.sub(&x));
            let gd = g.degree().unwrap_or(0);
            if gd > 0 {
                degrees.extend(std::iter::repeat_n(i, gd / i));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
            i += 1;
        }
        if let Some(d) = f.degree() {
            if d > 0 {
                degrees.push(d);
            }
        }
        degrees
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ddf_examples() {
        // x^3 - x - 1 mod 2 is irreducible
        assert_eq!(PolyModP::new(2, vec![1, 1, 0, 1]).factor_degrees(), vec![3]);
        // x^2 + 1 mod 5 splits
        assert_eq!(PolyModP::new(5, vec![1, 0, 1]).factor_degrees(), vec![1, 1]);
        // x^3 + x - 1 mod 5
        assert_eq!(PolyModP::new(5, vec![4, 1, 0, 1]).factor_degrees(), vec![3]);
        // (x^2 + 1)(x - 1) mod 3
        let f = PolyModP::new(3, vec![1, 0, 1]).mul(&PolyModP::new(3, vec![2, 1]));
        assert_eq!(f.factor_degrees(), vec![1, 2]);
    }
}
