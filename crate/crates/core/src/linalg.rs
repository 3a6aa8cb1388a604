//! Exact linear algebra on small dense matrices.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub type Matrix<T> = Vec<Vec<T>>;

pub fn is_symmetric<T: Scalar>(m: &Matrix<T>) -> bool {
    let n = m.len();
    m.iter().all(|row| row.len() == n) && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Diagonalizes a symmetric Gram matrix by symmetric elimination.
///
/// Returns the diagonal of a congruent diagonal matrix. A zero pivot with a
/// nonzero off-diagonal entry is handled by replacing `e_i` with `e_i + e_j`.
pub fn diagonalize<T: Scalar>(gram: &Matrix<T>) -> Result<Vec<T>> {
    if !is_symmetric(gram) {
        return Err(Error::NotSymmetric);
    }
    let mut m = gram.clone();
    let n = m.len();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !m[i][i].is_zero()) {
                m.swap(k, i);
                for row in m.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                for c in 0..n {
                    let v = m[k][c].clone() + m[j][c].clone();
                    m[k][c] = v;
                }
                for r in 0..n {
                    let v = m[r][k].clone() + m[r][j].clone();
                    m[r][k] = v;
                }
            } else {
                return Err(Error::Degenerate);
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone() / pivot.clone();
            for c in k..n {
                let v = m[i][c].clone() - factor.clone() * m[k][c].clone();
                m[i][c] = v;
            }
            for r in k..n {
                let v = m[r][i].clone() - factor.clone() * m[r][k].clone();
                m[r][i] = v;
            }
        }
        diag.push(pivot);
    }
    Ok(diag)
}

pub fn determinant<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.len();
    let mut a = m.clone();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone() / pivot.clone();
            for c in k..n {
                let v = a[i][c].clone() - factor.clone() * a[k][c].clone();
                a[i][c] = v;
            }
        }
    }
    det
}

/// Solves `m x = rhs`; `None` when `m` is singular.
pub fn solve<T: Scalar>(m: &Matrix<T>, rhs: &[T]) -> Option<Vec<T>> {
    let n = m.len();
    let mut a: Matrix<T> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let pivot = a[k][k].clone();
        for c in k..=n {
            let v = a[k][c].clone() / pivot.clone();
            a[k][c] = v;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for c in k..=n {
                let v = a[i][c].clone() - factor.clone() * a[k][c].clone();
                a[i][c] = v;
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn transpose<T: Clone>(m: &Matrix<T>) -> Matrix<T> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(T::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(x I - m)` by the Faddeev–LeVerrier recursion.
pub fn charpoly<T: Scalar>(m: &Matrix<T>) -> Poly<T> {
    let n = m.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let identity = |c: T| -> Matrix<T> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { c.clone() } else { T::zero() })
                    .collect()
            })
            .collect()
    };
    let mut aux: Matrix<T> = identity(T::zero());
    let mut k_scalar = T::zero();
    for k in 1..=n {
        k_scalar = k_scalar + T::one();
        let prev = coeffs[n - k + 1].clone();
        let mut shifted = mat_mul(m, &aux);
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = row[i].clone() + prev.clone();
        }
        aux = shifted;
        let am = mat_mul(m, &aux);
        let trace = (0..n).fold(T::zero(), |acc, i| acc + am[i][i].clone());
        coeffs[n - k] = -(trace / k_scalar.clone());
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect()
    }

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn diagonalize_identity_and_hyperbolic() {
        assert_eq!(
            diagonalize(&m(&[&[1, 0], &[0, 1]])).unwrap(),
            vec![r(1), r(1)]
        );
        let d = diagonalize(&m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(d[0].clone() * d[1].clone(), r(-1));
        assert_eq!(diagonalize(&m(&[&[1, 0], &[0, 0]])), Err(Error::Degenerate));
        assert_eq!(
            diagonalize(&m(&[&[1, 2], &[0, 1]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn diagonal_preserves_determinant() {
        let g = m(&[&[1, 0, 0], &[0, 0, 2], &[0, 2, 0]]);
        let d = diagonalize(&g).unwrap();
        let prod = d.iter().cloned().fold(r(1), |a, b| a * b);
        assert_eq!(prod, determinant(&g));
    }

    #[test]
    fn solve_and_charpoly() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve(&a, &[r(3), r(4)]).unwrap(), vec![r(1), r(1)]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[r(1), r(1)]).is_none());
        // companion matrix of x^3 - 2
        let c = m(&[&[0, 0, 2], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(charpoly(&c), Poly::new(vec![r(-2), r(0), r(0), r(1)]));
    }
}
