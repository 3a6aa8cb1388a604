//! Scharlau transfer along odd-degree extensions `L = L₀ ⊗ L₁ ⊗ ⋯` of Q,
//! where `L₀ = Q(λ)` and each further level adjoins a root of an odd-degree
//! polynomial with rational coefficients.
//!
//! Each level carries a functional `s(ζ^m) = h_m` with `h_m = δ_{m0}` for
//! `m < n` and the tail fixed by the minimal polynomial of the level's
//! generator ζ. Gram matrices are then Hankel expressions in the `h_m`.
//! The composite functional on L is the tensor product of the levels'.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::hermitian::{trace_form, HermitianForm};
use super::QuadraticForm;
use crate::error::{Error, Result};
use crate::linalg;
use crate::places::{small_primes, IntegerPolynomial};
use crate::poly::Poly;
use crate::{RatMatrix, RatPoly, Rational};

const CERTIFY_PRIMES: usize = 80;

/// An element of L in the monomial basis `∏ ζ_i^{a_i}`, level 0 fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn scale(&self, c: &Rational) -> FieldElement {
        FieldElement {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleExtension {
    poly: IntegerPolynomial,
    tower: Vec<IntegerPolynomial>,
}

/// One level's functional: the Hankel sequence of its generator.
struct Level {
    degree: usize,
    hankel: Vec<Rational>,
}

impl Level {
    fn new(minpoly: &RatPoly) -> Level {
        let n = minpoly.degree().expect("nonzero minimal polynomial");
        let len = 3 * n.max(1);
        let mut h: Vec<Rational> = (0..n)
            .map(|m| {
                if m == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        // ζ^m = -Σ_{t<n} g_t ζ^{m-n+t}
        for m in n..len {
            let mut acc = Rational::zero();
            for t in 0..n {
                acc -= minpoly.coeff(t) * &h[m - n + t];
            }
            h.push(acc);
        }
        Level {
            degree: n,
            hankel: h,
        }
    }
}

/// How the coordinates of level 0 are rewritten for an adapted functional.
struct Functional {
    levels: Vec<Level>,
    /// Rows are λ-coordinates of `μ^k`; present when level 0 uses powers of μ.
    base_change: Option<RatMatrix>,
}

fn subset_sums(parts: &[usize]) -> u128 {
    parts.iter().fold(1u128, |acc, &m| acc | (acc << m))
}

impl SimpleExtension {
    pub fn new(poly: IntegerPolynomial) -> Result<Self> {
        SimpleExtension::with_tower(poly, Vec::new())
    }

    /// `L₀ = Q[x]/(poly)` followed by the given levels; the tensor product
    /// must be a field, which is certified by residue patterns.
    pub fn with_tower(poly: IntegerPolynomial, tower: Vec<IntegerPolynomial>) -> Result<Self> {
        for f in std::iter::once(&poly).chain(&tower) {
            if f.degree() % 2 == 0 {
                return Err(Error::EvenDegree(f.degree()));
            }
        }
        let total: usize = std::iter::once(&poly)
            .chain(&tower)
            .map(|f| f.degree())
            .product();
        if total > 64 {
            return Err(Error::TooLarge(format!("tower of degree {total}")));
        }
        let ext = SimpleExtension { poly, tower };
        ext.certify_field()?;
        Ok(ext)
    }

    pub fn poly(&self) -> &IntegerPolynomial {
        &self.poly
    }

    pub fn tower(&self) -> &[IntegerPolynomial] {
        &self.tower
    }

    pub fn levels(&self) -> Vec<&IntegerPolynomial> {
        std::iter::once(&self.poly).chain(&self.tower).collect()
    }

    pub fn base_degree(&self) -> usize {
        self.poly.degree()
    }

    /// `[L : Q]`.
    pub fn degree(&self) -> usize {
        self.levels().iter().map(|f| f.degree()).product()
    }

    /// Level i adjoins a root of `f_i` to the field built so far; it stays
    /// a field iff `f_i` is irreducible there. A factor of degree k would
    /// show up as a subset sum of local factor degrees at every prime 𝔭 of
    /// the lower field, which is what is ruled out here.
    fn certify_field(&self) -> Result<()> {
        let levels = self.levels();
        for i in 1..levels.len() {
            let n = levels[i].degree();
            let below: usize = levels[..i].iter().map(|f| f.degree()).product();
            if n.gcd(&below) == 1 {
                continue;
            }
            let target = 1u128 | (1u128 << n);
            let mut allowed = (1u128 << (n + 1)) - 1;
            let usable = small_primes()
                .filter(|&p| {
                    levels[..=i]
                        .iter()
                        .all(|f| !(f.discriminant() % p).is_zero())
                })
                .take(CERTIFY_PRIMES);
            for p in usable {
                let mut residue: Vec<usize> = levels[0].reduce_mod(p).factor_degrees();
                for f in &levels[1..i] {
                    let ms = f.reduce_mod(p).factor_degrees();
                    residue = residue
                        .iter()
                        .flat_map(|&a| {
                            ms.iter()
                                .flat_map(move |&m| std::iter::repeat_n(a.lcm(&m), a.gcd(&m)))
                        })
                        .collect();
                }
                let ms = levels[i].reduce_mod(p).factor_degrees();
                for &r in &residue {
                    let parts: Vec<usize> = ms
                        .iter()
                        .flat_map(|&m| std::iter::repeat_n(m / m.gcd(&r), m.gcd(&r)))
                        .collect();
                    allowed &= subset_sums(&parts);
                }
                if allowed == target {
                    break;
                }
            }
            if allowed != target {
                return Err(Error::InvalidPolynomial(format!(
                    "could not certify that level {i} ({}) keeps the tower a field",
                    levels[i]
                )));
            }
        }
        Ok(())
    }

    fn reduce_base(&self, p: &RatPoly) -> Vec<Rational> {
        let r = p.rem(&self.poly.to_rational());
        (0..self.base_degree())
            .map(|i| r.coeff(i).clone())
            .collect()
    }

    fn embed_base(&self, base: Vec<Rational>) -> FieldElement {
        let mut coords = base;
        coords.resize(self.degree(), Rational::zero());
        FieldElement { coords }
    }

    /// The polynomial `Σ c_i λ^i`, reduced modulo f.
    pub fn element(&self, coeffs: &[Rational]) -> FieldElement {
        self.embed_base(self.reduce_base(&Poly::new(coeffs.to_vec())))
    }

    pub fn element_i64(&self, coeffs: &[i64]) -> FieldElement {
        let c: Vec<Rational> = coeffs
            .iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect();
        self.element(&c)
    }

    /// An element given by all its monomial coordinates (level 0 fastest).
    pub fn tower_element(&self, coords: Vec<Rational>) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(FieldElement { coords })
    }

    pub fn scalar(&self, c: Rational) -> FieldElement {
        self.element(&[c])
    }

    pub fn generator(&self) -> FieldElement {
        self.element_i64(&[0, 1])
    }

    pub fn is_base(&self, a: &FieldElement) -> bool {
        a.coords[self.base_degree()..].iter().all(Zero::is_zero)
    }

    fn base_poly(&self, a: &FieldElement) -> Result<RatPoly> {
        if a.coords.len() != self.degree() {
            return Err(Error::InvalidInput(
                "element belongs to a different extension".into(),
            ));
        }
        if !self.is_base(a) {
            return Err(Error::InvalidInput("expected an element of Q(λ)".into()));
        }
        Ok(Poly::new(a.coords[..self.base_degree()].to_vec()))
    }

    /// Product of two elements of `Q(λ)`.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.embed_base(self.reduce_base(&(&self.base_poly(a)? * &self.base_poly(b)?))))
    }

    /// Matrix of multiplication by `a ∈ Q(λ)`; row j holds `a·λ^j`.
    fn multiplication_matrix(&self, a: &FieldElement) -> Result<RatMatrix> {
        let p = self.base_poly(a)?;
        Ok((0..self.base_degree())
            .map(|j| self.reduce_base(&(&p * &Poly::monomial(Rational::one(), j))))
            .collect())
    }

    pub fn charpoly(&self, a: &FieldElement) -> Result<RatPoly> {
        Ok(linalg::charpoly(&self.multiplication_matrix(a)?))
    }

    /// `N_{L/Q}(a)` for `a ∈ Q(λ)`, i.e. `N_{Q(λ)/Q}(a)^{[L:Q(λ)]}`.
    pub fn norm(&self, a: &FieldElement) -> Result<Rational> {
        let base = linalg::determinant(&self.multiplication_matrix(a)?);
        let k = (self.degree() / self.base_degree()) as i32;
        Ok(num_traits::pow::Pow::pow(base, k))
    }

    /// Whether `a` generates `Q(λ)` over Q: its characteristic polynomial
    /// is then squarefree.
    pub fn generates_base(&self, a: &FieldElement) -> Result<bool> {
        let g = self.charpoly(a)?;
        Ok(g.gcd(&g.derivative()).degree() == Some(0))
    }

    fn standard_functional(&self) -> Functional {
        Functional {
            levels: self
                .levels()
                .iter()
                .map(|f| Level::new(&f.to_rational()))
                .collect(),
            base_change: None,
        }
    }

    /// Functional built from the powers of μ on level 0 (standard above).
    /// Falls back to the standard one when μ does not generate `Q(λ)`.
    fn adapted_functional(&self, mu: &FieldElement) -> Result<(Functional, bool)> {
        if !self.generates_base(mu)? {
            return Ok((self.standard_functional(), false));
        }
        let mut f = self.standard_functional();
        f.levels[0] = Level::new(&self.charpoly(mu)?);
        let p = self.base_poly(mu)?;
        let mut rows = Vec::with_capacity(self.base_degree());
        let mut power = Poly::one();
        for _ in 0..self.base_degree() {
            rows.push(self.reduce_base(&power));
            power = Poly::new(self.reduce_base(&(&power * &p)));
        }
        f.base_change = Some(linalg::transpose(&rows));
        Ok((f, true))
    }

    fn coordinates(&self, functional: &Functional, a: &FieldElement) -> Vec<Rational> {
        let Some(bt) = &functional.base_change else {
            return a.coords.clone();
        };
        let n0 = self.base_degree();
        let mut out = Vec::with_capacity(a.coords.len());
        for block in a.coords.chunks(n0) {
            if block.iter().all(Zero::is_zero) {
                out.extend(block.iter().cloned());
            } else {
                out.extend(linalg::solve(bt, block).expect("powers of a generator form a basis"));
            }
        }
        out
    }

    fn digits(&self, mut idx: usize) -> Vec<usize> {
        self.levels()
            .iter()
            .map(|f| {
                let n = f.degree();
                let d = idx % n;
                idx /= n;
                d
            })
            .collect()
    }

    /// Gram matrix of `⟨ν⟩` under the composite functional, computed in one
    /// go: `G_{αβ} = Σ_t ν_t ∏_i h^i_{t_i + α_i + β_i}`.
    fn gram_direct(&self, functional: &Functional, nu: &[Rational]) -> RatMatrix {
        let n = self.degree();
        let digits: Vec<Vec<usize>> = (0..n).map(|i| self.digits(i)).collect();
        let support: Vec<usize> = (0..n).filter(|&t| !nu[t].is_zero()).collect();
        let mut g = vec![vec![Rational::zero(); n]; n];
        for a in 0..n {
            for b in a..n {
                let mut acc = Rational::zero();
                for &t in &support {
                    let mut term = nu[t].clone();
                    for (lvl, level) in functional.levels.iter().enumerate() {
                        let h = &level.hankel[digits[t][lvl] + digits[a][lvl] + digits[b][lvl]];
                        if h.is_zero() {
                            term = Rational::zero();
                            break;
                        }
                        term *= h;
                    }
                    acc += term;
                }
                g[b][a] = acc.clone();
                g[a][b] = acc;
            }
        }
        g
    }

    /// The same Gram matrix computed level by level from the top: each step
    /// applies `s^i` (linear over the field below) to a matrix with entries
    /// in `L_{<i+1}`, producing a larger matrix with entries in `L_{<i}`.
    fn gram_stepwise(&self, functional: &Functional, nu: &[Rational]) -> RatMatrix {
        let mut mat: Vec<Vec<Vec<Rational>>> = vec![vec![nu.to_vec()]];
        for level in functional.levels.iter().rev() {
            let n = level.degree;
            let dim = mat.len();
            let inner = mat[0][0].len() / n;
            let mut next = vec![vec![Vec::new(); dim * n]; dim * n];
            for r in 0..dim {
                for r2 in 0..dim {
                    let e = &mat[r][r2];
                    for b in 0..n {
                        for b2 in 0..n {
                            let mut acc = vec![Rational::zero(); inner];
                            for u in 0..n {
                                let h = &level.hankel[u + b + b2];
                                if h.is_zero() {
                                    continue;
                                }
                                for (x, y) in acc.iter_mut().zip(&e[u * inner..(u + 1) * inner]) {
                                    *x += y * h;
                                }
                            }
                            next[r * n + b][r2 * n + b2] = acc;
                        }
                    }
                }
            }
            mat = next;
        }
        mat.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|mut e| e.pop().expect("one coordinate"))
                    .collect()
            })
            .collect()
    }

    fn check_entries(&self, form: &[FieldElement]) -> Result<()> {
        for (i, e) in form.iter().enumerate() {
            if e.coords.len() != self.degree() {
                return Err(Error::InvalidInput(
                    "element belongs to a different extension".into(),
                ));
            }
            if e.is_zero() {
                return Err(Error::NonInvertibleEntry(i));
            }
        }
        Ok(())
    }

    fn transfer_with(
        &self,
        functional: &Functional,
        form: &[FieldElement],
    ) -> Result<QuadraticForm> {
        self.check_entries(form)?;
        let mut out = QuadraticForm::empty();
        for e in form {
            let g = self.gram_direct(functional, &self.coordinates(functional, e));
            out = out.orthogonal_sum(&super::diagonalize(&g)?);
        }
        Ok(out)
    }

    fn block_diagonal(blocks: Vec<RatMatrix>) -> RatMatrix {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut g = vec![vec![Rational::zero(); n]; n];
        let mut off = 0;
        for b in blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    g[off + i][off + j] = x.clone();
                }
            }
            off += b.len();
        }
        g
    }

    /// Gram matrix of the transferred form (one block per entry) under the
    /// standard composite functional.
    pub fn transfer_gram(&self, form: &[FieldElement]) -> Result<RatMatrix> {
        self.check_entries(form)?;
        let f = self.standard_functional();
        Ok(Self::block_diagonal(
            form.iter()
                .map(|e| self.gram_direct(&f, &e.coords))
                .collect(),
        ))
    }

    /// As [`transfer_gram`](Self::transfer_gram), composing one level's
    /// transfer at a time.
    pub fn transfer_gram_stepwise(&self, form: &[FieldElement]) -> Result<RatMatrix> {
        self.check_entries(form)?;
        let f = self.standard_functional();
        Ok(Self::block_diagonal(
            form.iter()
                .map(|e| self.gram_stepwise(&f, &e.coords))
                .collect(),
        ))
    }

    /// `r*(q)`: the rational form viewed over L.
    pub fn extend_form(&self, q: &QuadraticForm) -> Vec<FieldElement> {
        q.entries().iter().map(|a| self.scalar(a.clone())).collect()
    }
}

/// `s_*` of a diagonal form over L, diagonalized over Q.
pub fn transfer(ext: &SimpleExtension, form: &[FieldElement]) -> Result<QuadraticForm> {
    ext.transfer_with(&ext.standard_functional(), form)
}

/// Outcome of [`projection_formula_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionCheck {
    /// `s_*(r*(q)) = q` in W(Q).
    pub plain: bool,
    /// `s_*(μ·r*(q)) = N(μ)·q` in W(Q).
    pub twisted: bool,
    pub norm: Rational,
    /// Whether level 0 used the functional adapted to μ.
    pub adapted: bool,
}

/// Both projection formulas for the transfer with the functional built
/// from the powers of μ. With the λ-functional and an arbitrary μ the
/// twisted formula fails in general; it is the μ-adapted functional for
/// which `s_*⟨μ⟩ = ⟨N(μ)⟩`.
pub fn projection_formula_check(
    ext: &SimpleExtension,
    q: &QuadraticForm,
    mu: &FieldElement,
) -> Result<ProjectionCheck> {
    if mu.is_zero() {
        return Err(Error::NonInvertibleEntry(0));
    }
    let (functional, adapted) = ext.adapted_functional(mu)?;
    let rq = ext.extend_form(q);
    let plain = ext.transfer_with(&functional, &rq)?.witt_equivalent(q)?;
    let twisted_form: Vec<FieldElement> = q.entries().iter().map(|a| mu.scale(a)).collect();
    let norm = ext.norm(mu)?;
    let twisted = ext
        .transfer_with(&functional, &twisted_form)?
        .witt_equivalent(&q.scale(&norm))?;
    Ok(ProjectionCheck {
        plain,
        twisted,
        norm,
        adapted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentOutcome {
    /// `h ≅ ν·h'` over K with `ν = N(λ)`.
    Similar {
        multiplier: Rational,
    },
    NoSimilarity,
}

/// If `h_L ≅ λ·h'_L`, then `h ≅ N(λ)·h'`. The premise is tested through
/// its transfer: `s_*(r*q_h)` and `s_*(λ·r*q_{h'})` must be isometric.
pub fn odd_degree_descent(
    h: &HermitianForm,
    h2: &HermitianForm,
    ext: &SimpleExtension,
    lambda: &FieldElement,
) -> Result<DescentOutcome> {
    if h.field() != h2.field() {
        return Err(Error::BaseMismatch);
    }
    if h.rank() != h2.rank() {
        return Err(Error::RankMismatch {
            left: h.rank(),
            right: h2.rank(),
        });
    }
    if lambda.is_zero() {
        return Err(Error::NonInvertibleEntry(0));
    }
    let (functional, _) = ext.adapted_functional(lambda)?;
    let (q, q2) = (trace_form(h), trace_form(h2));
    let left = ext.transfer_with(&functional, &ext.extend_form(&q))?;
    let twisted: Vec<FieldElement> = q2.entries().iter().map(|a| lambda.scale(a)).collect();
    let right = ext.transfer_with(&functional, &twisted)?;
    if !left.isometric(&right)? {
        return Ok(DescentOutcome::NoSimilarity);
    }
    let nu = ext.norm(lambda)?;
    if trace_form(&h2.scale(&nu)).isometric(&q)? {
        Ok(DescentOutcome::Similar { multiplier: nu })
    } else {
        Ok(DescentOutcome::NoSimilarity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::places::QuadraticField;

    fn ip(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(c).unwrap()
    }

    fn qf(e: &[i64]) -> QuadraticForm {
        QuadraticForm::from_i64(e).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn cube_root_of_two_grams() {
        let ext = SimpleExtension::new(ip(&[-2, 0, 0, 1])).unwrap();
        let g = ext.transfer_gram(&[ext.scalar(r(1))]).unwrap();
        let want: RatMatrix = [[1, 0, 0], [0, 0, 2], [0, 2, 0]]
            .iter()
            .map(|row| row.iter().map(|&x| r(x)).collect())
            .collect();
        assert_eq!(g, want);
        let t1 = transfer(&ext, &[ext.scalar(r(1))]).unwrap();
        assert!(t1.witt_equivalent(&qf(&[1])).unwrap());
        let tl = transfer(&ext, &[ext.generator()]).unwrap();
        assert!(tl.witt_equivalent(&qf(&[2])).unwrap());
        assert_eq!(ext.norm(&ext.generator()).unwrap(), r(2));
    }

    #[test]
    fn degree_one_is_identity() {
        let ext = SimpleExtension::new(IntegerPolynomial::linear()).unwrap();
        assert_eq!(transfer(&ext, &[ext.scalar(r(7))]).unwrap(), qf(&[7]));
        let c = projection_formula_check(&ext, &qf(&[1, -3]), &ext.scalar(r(1))).unwrap();
        assert!(c.plain && c.twisted);
    }

    #[test]
    fn even_degree_and_zero_entries_rejected() {
        assert_eq!(
            SimpleExtension::new(ip(&[1, 0, 1])),
            Err(Error::EvenDegree(2))
        );
        let ext = SimpleExtension::new(ip(&[-1, 1, 0, 1])).unwrap();
        assert_eq!(
            transfer(&ext, &[ext.scalar(r(1)), ext.element_i64(&[0])]),
            Err(Error::NonInvertibleEntry(1))
        );
    }

    #[test]
    fn projection_formulas_on_cubics() {
        for f in [&[-2, 0, 0, 1][..], &[-1, 1, 0, 1], &[-1, -1, 0, 0, 0, 1]] {
            let ext = SimpleExtension::new(ip(f)).unwrap();
            for mu in [&[0, 1][..], &[1, 1], &[2, -1, 1], &[3], &[1, 0, -2]] {
                let c =
                    projection_formula_check(&ext, &qf(&[1, -3, 5]), &ext.element_i64(mu)).unwrap();
                assert!(c.plain && c.twisted, "{f:?} {mu:?} {c:?}");
            }
        }
    }

    #[test]
    fn stepwise_matches_direct_on_tower() {
        let ext =
            SimpleExtension::with_tower(ip(&[-2, 0, 0, 1]), vec![ip(&[-1, 1, 0, 1])]).unwrap();
        assert_eq!(ext.degree(), 9);
        let e: Vec<Rational> = (0..9).map(|i| r((i * 7 % 5) as i64 - 2)).collect();
        let form = vec![ext.tower_element(e).unwrap(), ext.scalar(r(3))];
        assert_eq!(
            ext.transfer_gram(&form).unwrap(),
            ext.transfer_gram_stepwise(&form).unwrap()
        );
        let c =
            projection_formula_check(&ext, &qf(&[1, 2, -7]), &ext.element_i64(&[1, 1])).unwrap();
        assert!(c.plain && c.twisted);
    }

    #[test]
    fn tower_must_be_a_field() {
        // the same cubic twice: x³ - 2 has a root in Q(∛2)
        let err = SimpleExtension::with_tower(ip(&[-2, 0, 0, 1]), vec![ip(&[-2, 0, 0, 1])]);
        assert!(matches!(err, Err(Error::InvalidPolynomial(_))));
    }

    #[test]
    fn descent_examples() {
        let k = QuadraticField::new(-1).unwrap();
        let ext = SimpleExtension::new(ip(&[-2, 0, 0, 1])).unwrap();
        let h1 = HermitianForm::from_i64(k, &[1, 1, 1]).unwrap();
        let h2 = HermitianForm::from_i64(k, &[2, 2, 2]).unwrap();
        let one = ext.scalar(r(1));
        assert_eq!(
            odd_degree_descent(&h1, &h1, &ext, &one).unwrap(),
            DescentOutcome::Similar { multiplier: r(1) }
        );
        assert_eq!(
            odd_degree_descent(&h1, &h2, &ext, &one).unwrap(),
            DescentOutcome::Similar { multiplier: r(1) }
        );
        let h3 = HermitianForm::from_i64(k, &[1, 1, -1]).unwrap();
        for lam in [&[1][..], &[0, 1], &[1, 1], &[-1]] {
            let out = odd_degree_descent(&h1, &h3, &ext, &ext.element_i64(lam)).unwrap();
            assert_eq!(out, DescentOutcome::NoSimilarity);
        }
        // h' = <2,2,2>·<1> scaled by N(λ) = 2 for λ = ∛2
        let out = odd_degree_descent(&h2, &h1, &ext, &ext.generator()).unwrap();
        assert_eq!(out, DescentOutcome::Similar { multiplier: r(2) });
    }
}
