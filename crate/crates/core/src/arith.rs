//! Integer and rational helpers: valuations, squarefree parts, factoring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Splits `n = p^v * u` with `p ∤ u`. `n` must be nonzero.
pub fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut u = n.clone();
    loop {
        let (q, r) = u.div_rem(&p);
        if !r.is_zero() {
            return (v, u);
        }
        u = q;
        v += 1;
    }
}

pub fn valuation(n: &BigInt, p: u64) -> u32 {
    split_valuation(n, p).0
}

/// An integer in the same square class as `r`: `num * den`.
pub fn square_class_integer(r: &Rational) -> BigInt {
    r.numer() * r.denom()
}

/// `u mod p` as a `u64` in `[0, p)`.
pub fn mod_u64(u: &BigInt, p: u64) -> u64 {
    u.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(u / p)` for an odd prime `p`; 0 when `p | u`.
pub fn legendre(u: &BigInt, p: u64) -> i8 {
    let r = mod_u64(u, p);
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

pub fn is_prime(p: u64) -> bool {
    num_prime::nt_funcs::is_prime64(p)
}

/// Distinct prime divisors of a nonzero integer, ascending.
pub fn prime_factors(n: &BigInt) -> Result<Vec<u64>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let m = n
        .abs()
        .to_u128()
        .ok_or_else(|| Error::TooLarge(n.to_string()))?;
    if m == 1 {
        return Ok(Vec::new());
    }
    num_prime::nt_funcs::factorize128(m)
        .into_keys()
        .map(|p| u64::try_from(p).map_err(|_| Error::TooLarge(n.to_string())))
        .collect()
}

/// Primes dividing the numerator or denominator of any of `values`.
pub fn rational_support(values: &[Rational]) -> Result<Vec<u64>> {
    let mut primes = Vec::new();
    for r in values {
        if r.is_zero() {
            return Err(Error::ZeroArgument);
        }
        primes.extend(prime_factors(r.numer())?);
        primes.extend(prime_factors(r.denom())?);
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

/// Squarefree integer representative of the square class of a nonzero integer.
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut out = if n.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    for p in prime_factors(n)? {
        if valuation(n, p) % 2 == 1 {
            out *= p;
        }
    }
    Ok(out)
}

pub fn squarefree_part_rational(r: &Rational) -> Result<BigInt> {
    squarefree_part(&square_class_integer(r))
}

pub fn is_squarefree(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    let n = BigInt::from(n);
    match prime_factors(&n) {
        Ok(ps) => ps.into_iter().all(|p| valuation(&n, p) == 1),
        Err(_) => false,
    }
}

/// Whether the nonzero rational `r` is a square in `Q_p`.
pub fn is_padic_square(r: &Rational, p: u64) -> bool {
    let n = square_class_integer(r);
    let (v, u) = split_valuation(&n, p);
    if v % 2 == 1 {
        return false;
    }
    if p == 2 {
        mod_u64(&u, 8) == 1
    } else {
        legendre(&u, p) == 1
    }
}

/// Whether the nonzero rational `r` is a square in `Q`.
pub fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let n = square_class_integer(r);
    let s = n.sqrt();
    &s * &s == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(
            squarefree_part(&BigInt::from(-12)).unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(squarefree_part(&BigInt::from(49)).unwrap(), BigInt::from(1));
        assert_eq!(squarefree_part_rational(&q(3, 8)).unwrap(), BigInt::from(6));
        assert!(squarefree_part(&BigInt::from(0)).is_err());
    }

    #[test]
    fn padic_squares() {
        assert!(is_padic_square(&q(-1, 1), 5));
        assert!(!is_padic_square(&q(-1, 1), 3));
        assert!(is_padic_square(&q(17, 1), 2));
        assert!(!is_padic_square(&q(5, 1), 2));
        assert!(is_padic_square(&q(4, 9), 3));
        assert!(!is_padic_square(&q(3, 1), 3));
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre(&BigInt::from(2), 7), 1);
        assert_eq!(legendre(&BigInt::from(3), 7), -1);
        assert_eq!(legendre(&BigInt::from(14), 7), 0);
        assert_eq!(legendre(&BigInt::from(-1), 13), 1);
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(&BigInt::from(-360)).unwrap(), vec![2, 3, 5]);
        assert!(prime_factors(&BigInt::from(1)).unwrap().is_empty());
        assert!(is_squarefree(-30));
        assert!(!is_squarefree(18));
    }
}
