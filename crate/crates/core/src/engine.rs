//! Index of torsors under adjoint groups of type A1 and A2n over Q, with a
//! constructed field of exactly that degree.
//!
//! Three cases are handled: inner forms coming from two central simple
//! algebras over Q (split étale center), quaternion algebras over K with
//! unitary involution given by their Albert descents, and odd-degree
//! algebras over K with unitary involution.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::brauer::{find_quaternion_symbol, BrauerClassK, BrauerClassQ};
use crate::error::{Error, Result};
use crate::places::{local_degrees, IntegerPolynomial, Place, QuadraticField};
use crate::quat::{
    albert_descent, splitting_quadratic, DescentElement, KScalar, SplittingQuadratic,
};
use crate::witt::{hermitian_similar, HermitianForm, SwapWitness};
use crate::{Quaternion, QuaternionAlgebraQ, Rational};

/// Largest odd Schur index for which a field is searched.
pub const MAX_ODD_INDEX: u64 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Height bound for quaternion symbols and quadratic fields.
    pub search_bound: u64,
    /// Coefficient bound for trinomials `x^n + c x + e`.
    pub poly_bound: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            search_bound: 50,
            poly_bound: 30,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsorSpec {
    /// `[X] ↦ [C ⊗ B^op]`.
    SplitEtale { c: BrauerClassQ, b: BrauerClassQ },
    /// `(A, σ)`, `(B, τ)` quaternion algebras over K given by descents.
    Quaternion {
        a0: QuaternionAlgebraQ,
        b0: QuaternionAlgebraQ,
        field: QuadraticField,
    },
    /// `D = [A ⊗_K B^op]` for algebras of odd degree with unitary
    /// involutions; the hermitian forms are needed when D is split.
    OddDegree {
        class: BrauerClassK,
        degree: Option<u64>,
        forms: Option<(HermitianForm, HermitianForm)>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    SplitEtale,
    Quaternion,
    OddDegree,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::SplitEtale => "split-etale",
            Case::Quaternion => "quaternion",
            Case::OddDegree => "odd-degree",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    Zero,
    One,
    Undetermined,
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theta::Zero => "0",
            Theta::One => "1",
            Theta::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescription {
    Rationals,
    Quadratic(QuadraticField),
    /// `Q[x]/(f)`.
    Polynomial(IntegerPolynomial),
    /// `K[x]/(f)` with f irreducible over Q of odd degree.
    Compositum {
        field: QuadraticField,
        base: IntegerPolynomial,
    },
}

impl FieldDescription {
    pub fn degree(&self) -> u64 {
        match self {
            FieldDescription::Rationals => 1,
            FieldDescription::Quadratic(_) => 2,
            FieldDescription::Polynomial(f) => f.degree() as u64,
            FieldDescription::Compositum { base, .. } => 2 * base.degree() as u64,
        }
    }

    fn from_poly(f: &IntegerPolynomial) -> Self {
        if f.degree() == 1 {
            FieldDescription::Rationals
        } else {
            FieldDescription::Polynomial(f.clone())
        }
    }

    fn compositum(k: QuadraticField, f: &IntegerPolynomial) -> Self {
        if f.degree() == 1 {
            FieldDescription::Quadratic(k)
        } else {
            FieldDescription::Compositum {
                field: k,
                base: f.clone(),
            }
        }
    }
}

impl fmt::Display for FieldDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescription::Rationals => write!(f, "Q"),
            FieldDescription::Quadratic(k) => write!(f, "Q(sqrt({}))", k.d()),
            FieldDescription::Polynomial(p) => write!(f, "Q[x]/({p})"),
            FieldDescription::Compositum { field, base } => {
                write!(f, "Q(sqrt({}))[x]/({base})", field.d())
            }
        }
    }
}

/// One independently re-checked fact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotaroReport {
    pub case: Case,
    /// `2^θ · ind_sch`; absent while θ is undetermined.
    pub index: Option<u64>,
    pub ind_sch: u64,
    pub theta: Theta,
    pub field: Option<FieldDescription>,
    /// Both possible fields when θ is undetermined.
    pub candidates: Vec<FieldDescription>,
    pub verification: Vec<Check>,
    pub notes: Vec<String>,
}

impl TotaroReport {
    pub fn all_pass(&self) -> bool {
        self.verification.iter().all(|c| c.pass)
    }
}

/// First trinomial `x^n + c x + e` (by height `max(|c|, |e|)`, then
/// `(c, e)` ascending, `e ≠ 0`) that is certified irreducible and accepted.
/// Degree 1 gives `x`.
pub fn find_trinomial(
    n: usize,
    bound: u64,
    mut accept: impl FnMut(&IntegerPolynomial) -> Result<bool>,
) -> Result<IntegerPolynomial> {
    if n == 1 {
        let x = IntegerPolynomial::linear();
        if accept(&x)? {
            return Ok(x);
        }
        return Err(Error::SearchExhausted {
            what: "splitting polynomial",
            bound,
        });
    }
    let b = i64::try_from(bound).unwrap_or(i64::MAX);
    for h in 1..=b {
        for c in -h..=h {
            for e in -h..=h {
                if e == 0 || c.abs().max(e.abs()) != h {
                    continue;
                }
                let mut coeffs = vec![BigInt::zero(); n + 1];
                coeffs[0] = e.into();
                coeffs[1] += c;
                coeffs[n] += 1;
                let Ok(f) = IntegerPolynomial::new(coeffs) else {
                    continue;
                };
                match accept(&f) {
                    Ok(true) => return Ok(f),
                    Ok(false) | Err(Error::RamifiedPrime { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Err(Error::SearchExhausted {
        what: "splitting polynomial",
        bound,
    })
}

fn local_degree_detail(f: &IntegerPolynomial, places: impl Iterator<Item = Place>) -> String {
    let mut parts = Vec::new();
    for v in places {
        if let Place::Finite(p) = v {
            match local_degrees(f, p) {
                Ok(ds) => parts.push(format!("{p}: {ds:?}")),
                Err(_) => parts.push(format!("{p}: ramified")),
            }
        }
    }
    if parts.is_empty() {
        format!("f = {f}")
    } else {
        format!("f = {f}; local degrees {}", parts.join(", "))
    }
}

/// Quadratic splitting field of an index-2 class over Q, by way of a
/// quaternion symbol for it.
fn quadratic_field_for(
    class: &BrauerClassQ,
    config: &EngineConfig,
    checks: &mut Vec<Check>,
) -> Result<QuadraticField> {
    let (a, b) = find_quaternion_symbol(class, config.search_bound)?;
    let alg = QuaternionAlgebraQ::from_i64(a, b)?;
    checks.push(Check::new(
        "quaternion symbol matches class",
        &alg.class() == class,
        format!("({a}, {b})"),
    ));
    let k = match splitting_quadratic(&alg, config.search_bound)? {
        SplittingQuadratic::Field(k) => k,
        SplittingQuadratic::AlreadySplit => {
            return Err(Error::InvalidClass("index-2 class reported split".into()))
        }
    };
    checks.push(Check::new(
        "splits over quadratic field",
        class.splits_over_quadratic(&k),
        format!("Q(sqrt({}))", k.d()),
    ));
    checks.push(Check::new(
        "splits over minimal polynomial",
        class.splits_over(&k.minimal_polynomial())?,
        format!("f = {}", k.minimal_polynomial()),
    ));
    Ok(k)
}

pub fn case_split_etale(
    c: &BrauerClassQ,
    b: &BrauerClassQ,
    config: &EngineConfig,
) -> Result<TotaroReport> {
    let d = c.tensor(&b.opposite());
    let index = d.schur_index();
    let mut checks = vec![Check::new("class of C ⊗ B^op", true, d.to_string())];
    let field = match index {
        1 => {
            checks.push(Check::new("class is zero", d.is_zero(), d.to_string()));
            FieldDescription::Rationals
        }
        2 => FieldDescription::Quadratic(quadratic_field_for(&d, config, &mut checks)?),
        3 => {
            let f = find_trinomial(3, config.poly_bound, |f| d.splits_over(f))?;
            checks.push(Check::new(
                "splits over cubic",
                d.splits_over(&f)?,
                local_degree_detail(&f, d.support().map(|(v, _)| v)),
            ));
            FieldDescription::Polynomial(f)
        }
        other => return Err(Error::UnsupportedIndex(other)),
    };
    checks.push(Check::new(
        "field degree equals index",
        field.degree() == index,
        format!("{field}"),
    ));
    Ok(TotaroReport {
        case: Case::SplitEtale,
        index: Some(index),
        ind_sch: index,
        theta: Theta::Zero,
        field: Some(field),
        candidates: Vec::new(),
        verification: checks,
        notes: Vec::new(),
    })
}

/// Checks that `σ₀ ⊗ conjugation` is a unitary involution on `A₀ ⊗ K`:
/// involutive, anti-multiplicative on a basis, conjugation on the center.
fn descent_involution_checks(name: &str, alg: &QuaternionAlgebraQ, k: &QuadraticField) -> Check {
    let u = albert_descent(alg, k);
    let quats = [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
    ];
    let mut basis = Vec::new();
    for q in &quats {
        basis.push(DescentElement::from_base(q.clone()));
        basis.push(DescentElement::new(Quaternion::zero(), q.clone()));
    }
    let involutive = basis.iter().all(|x| u.involution(&u.involution(x)) == *x);
    let anti = basis.iter().all(|x| {
        basis.iter().all(|y| {
            u.involution(&u.multiply(x, y)) == u.multiply(&u.involution(y), &u.involution(x))
        })
    });
    let one = KScalar::new(Rational::one(), Rational::zero());
    let root = KScalar::new(Rational::zero(), Rational::one());
    let unitary = u.fixes_central(&one) && !u.fixes_central(&root);
    Check::new(
        &format!("descent of {name} carries a unitary involution"),
        involutive && anti && unitary,
        format!("({}, {}) over Q(sqrt({}))", alg.a(), alg.b(), k.d()),
    )
}

pub fn case_quaternion(
    a0: &QuaternionAlgebraQ,
    b0: &QuaternionAlgebraQ,
    k: &QuadraticField,
    config: &EngineConfig,
) -> Result<TotaroReport> {
    let class = a0.class().tensor(&b0.class());
    let index = class.schur_index();
    let mut checks = vec![
        descent_involution_checks("A0", a0, k),
        descent_involution_checks("B0", b0, k),
        Check::new("class of A0 ⊗ B0", true, class.to_string()),
    ];
    let field = match index {
        1 => FieldDescription::Rationals,
        2 => FieldDescription::Quadratic(quadratic_field_for(&class, config, &mut checks)?),
        other => return Err(Error::UnsupportedIndex(other)),
    };
    checks.push(Check::new(
        "field degree equals index",
        field.degree() == index,
        format!("{field}"),
    ));
    Ok(TotaroReport {
        case: Case::Quaternion,
        index: Some(index),
        ind_sch: index,
        theta: Theta::Zero,
        field: Some(field),
        candidates: Vec::new(),
        verification: checks,
        notes: vec!["index and field depend only on A0 and B0, not on K".into()],
    })
}

/// Isotropic vectors showing each plane of the trace form becomes
/// hyperbolic over K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapCheck {
    pub witnesses: Vec<SwapWitness>,
    pub hyperbolic: bool,
}

pub fn swap_check(h: &HermitianForm) -> SwapCheck {
    let witnesses = h.swap_witnesses();
    let hyperbolic = witnesses.iter().all(|w| {
        let nonzero = !(w.vector.0.re.is_zero() && w.vector.0.im.is_zero());
        nonzero && w.value.re.is_zero() && w.value.im.is_zero()
    });
    SwapCheck {
        witnesses,
        hyperbolic,
    }
}

pub fn case_odd(
    class: &BrauerClassK,
    degree: Option<u64>,
    forms: Option<&(HermitianForm, HermitianForm)>,
    config: &EngineConfig,
) -> Result<TotaroReport> {
    if !class.admits_unitary_involution() {
        return Err(Error::CoresNonzero(
            class.corestrict().support().map(|(v, _)| v).collect(),
        ));
    }
    let ind_sch = class.schur_index();
    if ind_sch.is_multiple_of(2) {
        return Err(Error::EvenIndex(ind_sch));
    }
    if ind_sch > MAX_ODD_INDEX {
        return Err(Error::UnsupportedIndex(ind_sch));
    }
    let k = *class.field();
    let mut checks = Vec::new();
    checks.push(Check::new(
        "corestriction vanishes",
        class.corestrict().is_zero(),
        class.to_string(),
    ));
    checks.push(Check::new(
        "ind_sch is odd",
        ind_sch % 2 == 1,
        ind_sch.to_string(),
    ));
    if let Some(n) = degree {
        if n % 2 == 0 {
            return Err(Error::InvalidInput(format!("degree {n} is even")));
        }
        if (n * n) % ind_sch != 0 {
            return Err(Error::InvalidInput(format!(
                "index {ind_sch} does not divide {n}^2"
            )));
        }
        checks.push(Check::new(
            "ind_sch divides degree^2",
            true,
            format!("{ind_sch} | {}", n * n),
        ));
    }
    let f0 = find_trinomial(ind_sch as usize, config.poly_bound, |f| {
        class.splits_over(f)
    })?;
    let bases: BTreeSet<Place> = class.support().map(|(w, _)| w.base).collect();
    checks.push(Check::new(
        "D splits over K·F0",
        class.splits_over(&f0)?,
        local_degree_detail(&f0, bases.into_iter()),
    ));
    checks.push(Check::new(
        "[F0:Q] = ind_sch",
        f0.degree() as u64 == ind_sch,
        format!("f = {f0}"),
    ));

    let mut report = TotaroReport {
        case: Case::OddDegree,
        index: None,
        ind_sch,
        theta: Theta::Undetermined,
        field: None,
        candidates: Vec::new(),
        verification: checks,
        notes: Vec::new(),
    };
    if !class.is_zero() {
        report.candidates = vec![
            FieldDescription::from_poly(&f0),
            FieldDescription::compositum(k, &f0),
        ];
        report.notes.push(
            "theta undetermined: deciding it needs hermitian forms over the division algebra D"
                .into(),
        );
        if forms.is_some() {
            report
                .notes
                .push("hermitian forms ignored since D is not split".into());
        }
        return Ok(report);
    }
    let (h, h2) = forms
        .ok_or_else(|| Error::InvalidInput("split D requires hermitian forms h and h'".into()))?;
    if h.field() != k || h2.field() != k {
        return Err(Error::BaseMismatch);
    }
    if h.rank() % 2 == 0 || h2.rank() % 2 == 0 {
        return Err(Error::InvalidInput(
            "hermitian forms must have odd rank".into(),
        ));
    }
    let sim = hermitian_similar(h, h2)?;
    if sim.similar {
        let nu = sim
            .multiplier
            .clone()
            .expect("similar forms carry a multiplier");
        let iso = crate::witt::trace_form(&h2.scale(&nu)).isometric(&h.trace_form())?;
        report.verification.push(Check::new(
            "h ≅ ν·h' via trace forms",
            iso,
            format!("ν = {nu}"),
        ));
        report.theta = Theta::Zero;
        report.field = Some(FieldDescription::from_poly(&f0));
    } else {
        report.verification.push(Check::new(
            "h and h' not similar over Q",
            true,
            format!("h = {h}, h' = {h2}"),
        ));
        for (name, form) in [("swap check on h", h), ("swap check on h'", h2)] {
            let s = swap_check(form);
            report.verification.push(Check::new(
                name,
                s.hyperbolic,
                format!("{} hyperbolic planes", s.witnesses.len()),
            ));
        }
        report.theta = Theta::One;
        report.field = Some(FieldDescription::compositum(k, &f0));
    }
    let field = report.field.as_ref().expect("set above");
    let index = if report.theta == Theta::One {
        2 * ind_sch
    } else {
        ind_sch
    };
    report.verification.push(Check::new(
        "field degree equals index",
        field.degree() == index,
        format!("{field}"),
    ));
    report.index = Some(index);
    Ok(report)
}

pub fn run(spec: &TorsorSpec, config: &EngineConfig) -> Result<TotaroReport> {
    match spec {
        TorsorSpec::SplitEtale { c, b } => case_split_etale(c, b, config),
        TorsorSpec::Quaternion { a0, b0, field } => case_quaternion(a0, b0, field, config),
        TorsorSpec::OddDegree {
            class,
            degree,
            forms,
        } => case_odd(class, *degree, forms.as_ref(), config),
    }
}
