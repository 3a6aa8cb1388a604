//! Command-line front end: reads a JSON document `{"command", "spec"}`,
//! dispatches to the library and writes a deterministic report.
//!
//! Rationals are JSON integers or `{"num": …, "den": …}`; integers that do
//! not fit in 64 bits may be given as decimal strings. Floats are rejected.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::brauer::{quaternion_class, BrauerClassK, BrauerClassQ, Fraction01};
use crate::engine::{self, Check, EngineConfig, FieldDescription, Theta, TorsorSpec, TotaroReport};
use crate::error::{Error, Result};
use crate::places::{
    hilbert_symbol, Decomposition, IntegerPolynomial, Place, PlaceOverK, QuadraticField, Slot,
};
use crate::witt::{self, HermitianForm, QuadraticForm, SimpleExtension, WittInvariants};
use crate::{linalg, QuaternionAlgebraQ, RatMatrix, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_SEARCH: i32 = 3;
pub const EXIT_UNDETERMINED: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Symbol,
    Class,
    Index,
    Transfer,
    Totaro,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Symbol => "symbol",
            Command::Class => "class",
            Command::Index => "index",
            Command::Transfer => "transfer",
            Command::Totaro => "totaro",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "totaro",
    version,
    about = "Index of A1 / A2n torsors over Q with verified splitting fields"
)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Input document (JSON)
    #[arg(long)]
    pub input: PathBuf,
    /// Emit the JSON report instead of text
    #[arg(long)]
    pub json: bool,
    /// Height bound for quaternion symbols and quadratic fields
    #[arg(long, default_value_t = 50)]
    pub search_bound: u64,
    /// Coefficient bound for the trinomial search
    #[arg(long, default_value_t = 30)]
    pub poly_bound: u64,
    /// Write the report here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// A finished report and the exit code it carries.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SearchExhausted { .. } => EXIT_SEARCH,
        _ => EXIT_INVALID,
    }
}

fn invalid(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{path}: {msg}"))
}

fn at(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| invalid(path, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(invalid(path, format!("unexpected key \"{k}\"")));
    }
    Ok(obj)
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| invalid(path, format!("missing key \"{key}\"")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| invalid(path, "expected an array"))
}

fn integer(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(invalid(path, "floating-point numbers are not accepted"))
            }
        }
        Value::String(s) => {
            BigInt::from_str(s).map_err(|_| invalid(path, format!("\"{s}\" is not an integer")))
        }
        _ => Err(invalid(path, "expected an integer")),
    }
}

fn small_integer(v: &Value, path: &str) -> Result<i64> {
    integer(v, path)?
        .to_i64()
        .ok_or_else(|| invalid(path, "integer out of range"))
}

fn rational(v: &Value, path: &str) -> Result<Rational> {
    if v.is_object() {
        let obj = object(v, path, &["num", "den"])?;
        let num = integer(required(obj, "num", path)?, &at(path, "num"))?;
        let den = integer(required(obj, "den", path)?, &at(path, "den"))?;
        if den.is_zero() {
            return Err(invalid(&at(path, "den"), "denominator is zero"));
        }
        return Ok(Rational::new(num, den));
    }
    Ok(Rational::from_integer(integer(v, path)?))
}

fn rationals(v: &Value, path: &str) -> Result<Vec<Rational>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational(x, &format!("{path}[{i}]")))
        .collect()
}

fn place(v: &Value, path: &str) -> Result<Place> {
    match v {
        Value::String(s) if s == "inf" => Ok(Place::Infinite),
        _ => {
            let p = integer(v, path)?
                .to_u64()
                .ok_or_else(|| invalid(path, "expected \"inf\" or a prime"))?;
            Place::finite(p).map_err(|e| invalid(path, e))
        }
    }
}

fn field(v: &Value, path: &str) -> Result<QuadraticField> {
    let obj = object(v, path, &["d"])?;
    let p = at(path, "d");
    QuadraticField::new(small_integer(required(obj, "d", path)?, &p)?).map_err(|e| invalid(&p, e))
}

fn polynomial(v: &Value, path: &str) -> Result<IntegerPolynomial> {
    let coeffs = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, c)| integer(c, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    IntegerPolynomial::new(coeffs).map_err(|e| invalid(path, e))
}

fn fraction(obj: &Map<String, Value>, path: &str) -> Result<Fraction01> {
    let num = small_integer(required(obj, "num", path)?, &at(path, "num"))?;
    let den = integer(required(obj, "den", path)?, &at(path, "den"))?
        .to_u64()
        .ok_or_else(|| invalid(&at(path, "den"), "expected a positive integer"))?;
    Fraction01::new(num, den).map_err(|e| invalid(path, e))
}

fn invariant_entries<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    let obj = object(v, path, &["invariants"])?;
    array(required(obj, "invariants", path)?, &at(path, "invariants"))
}

fn class_q(v: &Value, path: &str) -> Result<BrauerClassQ> {
    if v.get("a").is_some() {
        let (a, b) = symbol_pair(v, path)?;
        return quaternion_class(&a, &b).map_err(|e| invalid(path, e));
    }
    let mut entries = Vec::new();
    for (i, e) in invariant_entries(v, path)?.iter().enumerate() {
        let p = format!("{path}.invariants[{i}]");
        let obj = object(e, &p, &["place", "num", "den"])?;
        entries.push((
            place(required(obj, "place", &p)?, &at(&p, "place"))?,
            fraction(obj, &p)?,
        ));
    }
    BrauerClassQ::new(entries).map_err(|e| invalid(path, e))
}

fn class_k(v: &Value, k: QuadraticField, path: &str) -> Result<BrauerClassK> {
    let mut entries = Vec::new();
    for (i, e) in invariant_entries(v, path)?.iter().enumerate() {
        let p = format!("{path}.invariants[{i}]");
        let obj = object(e, &p, &["place", "num", "den", "slot"])?;
        let base = place(required(obj, "place", &p)?, &at(&p, "place"))?;
        let decomposition = k.decomposition(base);
        let slot = match (decomposition, obj.get("slot")) {
            (Decomposition::Split, Some(s)) => match small_integer(s, &at(&p, "slot"))? {
                1 => Slot::First,
                2 => Slot::Second,
                _ => return Err(invalid(&at(&p, "slot"), "expected 1 or 2")),
            },
            (Decomposition::Split, None) => {
                return Err(invalid(
                    &p,
                    format!("{base} splits in K; \"slot\" is required"),
                ))
            }
            (_, Some(_)) => {
                return Err(invalid(
                    &at(&p, "slot"),
                    format!("{base} does not split in K"),
                ))
            }
            (_, None) => Slot::Only,
        };
        entries.push((
            PlaceOverK {
                base,
                slot,
                decomposition,
            },
            fraction(obj, &p)?,
        ));
    }
    BrauerClassK::new(k, entries).map_err(|e| invalid(path, e))
}

fn symbol_pair(v: &Value, path: &str) -> Result<(Rational, Rational)> {
    let obj = object(v, path, &["a", "b"])?;
    let a = rational(required(obj, "a", path)?, &at(path, "a"))?;
    let b = rational(required(obj, "b", path)?, &at(path, "b"))?;
    if a.is_zero() || b.is_zero() {
        return Err(invalid(path, Error::ZeroArgument));
    }
    Ok((a, b))
}

fn algebra(v: &Value, path: &str) -> Result<QuaternionAlgebraQ> {
    let (a, b) = symbol_pair(v, path)?;
    QuaternionAlgebraQ::new(a, b).map_err(|e| invalid(path, e))
}

fn hermitian(v: &Value, k: QuadraticField, path: &str) -> Result<HermitianForm> {
    let obj = object(v, path, &["entries", "d"])?;
    if let Some(d) = obj.get("d") {
        if small_integer(d, &at(path, "d"))? != k.d() {
            return Err(invalid(&at(path, "d"), "does not match the field"));
        }
    }
    let entries = rationals(required(obj, "entries", path)?, &at(path, "entries"))?;
    HermitianForm::new(k, entries).map_err(|e| invalid(path, e))
}

fn quadratic_form(v: &Value, path: &str) -> Result<QuadraticForm> {
    QuadraticForm::new(rationals(v, path)?).map_err(|e| invalid(path, e))
}

// ---- output ----

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(i) => json!(i),
        None => json!(n.to_string()),
    }
}

fn rat_json(r: &Rational) -> Value {
    if r.is_integer() {
        int_json(r.numer())
    } else {
        json!({"num": int_json(r.numer()), "den": int_json(r.denom())})
    }
}

fn place_json(v: Place) -> Value {
    match v {
        Place::Infinite => json!("inf"),
        Place::Finite(p) => json!(p),
    }
}

fn class_q_json(c: &BrauerClassQ) -> Value {
    let inv: Vec<Value> = c
        .support()
        .map(|(v, x)| json!({"place": place_json(v), "num": x.num(), "den": x.den()}))
        .collect();
    json!({"invariants": inv, "schur_index": c.schur_index()})
}

fn class_k_json(c: &BrauerClassK) -> Value {
    let inv: Vec<Value> = c
        .support()
        .map(|(w, x)| {
            let mut e = json!({"place": place_json(w.base), "num": x.num(), "den": x.den()});
            match w.slot {
                Slot::First => e["slot"] = json!(1),
                Slot::Second => e["slot"] = json!(2),
                Slot::Only => {}
            }
            e
        })
        .collect();
    json!({"d": c.field().d(), "invariants": inv, "schur_index": c.schur_index()})
}

fn invariants_json(w: &WittInvariants) -> Value {
    let minus: Vec<Value> = w.hasse_minus.iter().map(|&v| place_json(v)).collect();
    json!({"dim": w.dim, "disc": int_json(&w.disc), "hasse_minus": minus, "signature": w.signature})
}

fn form_json(q: &QuadraticForm) -> Value {
    Value::Array(q.entries().iter().map(rat_json).collect())
}

fn field_json(f: &FieldDescription) -> Value {
    let poly = |p: &IntegerPolynomial| Value::Array(p.coeffs().iter().map(int_json).collect());
    let body = match f {
        FieldDescription::Rationals => json!({"kind": "rationals"}),
        FieldDescription::Quadratic(k) => json!({"kind": "quadratic", "d": k.d()}),
        FieldDescription::Polynomial(p) => json!({"kind": "polynomial", "poly": poly(p)}),
        FieldDescription::Compositum { field, base } => {
            json!({"kind": "compositum", "d": field.d(), "poly": poly(base)})
        }
    };
    let mut body = body;
    body["degree"] = json!(f.degree());
    body["description"] = json!(f.to_string());
    body
}

fn check_json(c: &Check) -> Value {
    json!({"name": c.name, "pass": c.pass, "detail": c.detail})
}

fn totaro_json(r: &TotaroReport) -> Value {
    json!({
        "case": r.case.to_string(),
        "index": r.index,
        "ind_sch": r.ind_sch,
        "theta": r.theta.to_string(),
        "field": r.field.as_ref().map(field_json),
        "candidates": r.candidates.iter().map(field_json).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

// ---- commands ----

struct Produced {
    result: Value,
    verification: Vec<Check>,
    exit_code: i32,
}

impl Produced {
    fn ok(result: Value, verification: Vec<Check>) -> Self {
        Produced {
            result,
            verification,
            exit_code: EXIT_OK,
        }
    }
}

fn cmd_symbol(spec: &Value) -> Result<Produced> {
    let obj = object(spec, "spec", &["a", "b", "place"])?;
    let a = rational(required(obj, "a", "spec")?, "spec.a")?;
    let b = rational(required(obj, "b", "spec")?, "spec.b")?;
    let v = place(required(obj, "place", "spec")?, "spec.place")?;
    let s = hilbert_symbol(&a, &b, v).map_err(|e| invalid("spec", e))?;
    // the symbol is symmetric; recompute with swapped arguments
    let swapped = hilbert_symbol(&b, &a, v)?;
    Ok(Produced::ok(
        json!({"symbol": s, "place": place_json(v)}),
        vec![Check::new(
            "symmetric",
            swapped == s,
            format!("({}, {})", b, a),
        )],
    ))
}

fn cmd_class(spec: &Value) -> Result<Produced> {
    if let Some(f) = spec.get("form") {
        object(spec, "spec", &["form"])?;
        let q = quadratic_form(f, "spec.form")?;
        let inv = q.invariants()?;
        // congruence by the all-ones upper triangular matrix, then diagonalize again
        let n = q.dim();
        let t: RatMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i <= j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let moved = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(&t), &q.gram()), &t);
        let same = n == 0 || witt::diagonalize(&moved)?.invariants()? == inv;
        return Ok(Produced::ok(
            json!({"form": form_json(&q), "invariants": invariants_json(&inv), "isotropic": q.is_isotropic()?}),
            vec![Check::new(
                "invariants stable under congruence",
                same,
                q.to_string(),
            )],
        ));
    }
    let class = class_q(spec, "spec")?;
    let total: Fraction01 = class
        .support()
        .fold(Fraction01::zero(), |acc, (_, x)| acc.add(x));
    Ok(Produced::ok(
        json!({"class": class_q_json(&class)}),
        vec![Check::new(
            "invariants sum to zero",
            total.is_zero(),
            class.to_string(),
        )],
    ))
}

fn cmd_index(spec: &Value) -> Result<Produced> {
    if let Some(d) = spec.get("d") {
        object(spec, "spec", &["d", "invariants"])?;
        let k =
            QuadraticField::new(small_integer(d, "spec.d")?).map_err(|e| invalid("spec.d", e))?;
        let stripped = json!({"invariants": spec["invariants"].clone()});
        let class = class_k(&stripped, k, "spec")?;
        let cores = class.corestrict();
        return Ok(Produced::ok(
            json!({
                "class": class_k_json(&class),
                "schur_index": class.schur_index(),
                "corestriction": class_q_json(&cores),
                "admits_unitary_involution": class.admits_unitary_involution(),
            }),
            vec![Check::new(
                "unitary involution iff corestriction vanishes",
                class.admits_unitary_involution() == cores.is_zero(),
                cores.to_string(),
            )],
        ));
    }
    let class = class_q(spec, "spec")?;
    let index = class.schur_index();
    let total: Fraction01 = class
        .support()
        .fold(Fraction01::zero(), |acc, (_, x)| acc.add(x));
    Ok(Produced::ok(
        json!({"class": class_q_json(&class), "schur_index": index}),
        vec![Check::new(
            "invariants sum to zero",
            total.is_zero(),
            class.to_string(),
        )],
    ))
}

fn cmd_transfer(spec: &Value) -> Result<Produced> {
    let obj = object(spec, "spec", &["poly", "tower", "form", "check"])?;
    let f = polynomial(required(obj, "poly", "spec")?, "spec.poly")?;
    let tower = match obj.get("tower") {
        Some(t) => array(t, "spec.tower")?
            .iter()
            .enumerate()
            .map(|(i, p)| polynomial(p, &format!("spec.tower[{i}]")))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let ext = SimpleExtension::with_tower(f, tower).map_err(|e| invalid("spec.poly", e))?;
    let entries = array(required(obj, "form", "spec")?, "spec.form")?
        .iter()
        .enumerate()
        .map(|(i, e)| Ok(ext.element(&rationals(e, &format!("spec.form[{i}]"))?)))
        .collect::<Result<Vec<_>>>()?;
    let q = witt::transfer(&ext, &entries)?;
    let gram = ext.transfer_gram(&entries)?;
    let again = witt::diagonalize(&gram)?;
    let mut checks = vec![Check::new(
        "re-diagonalized Gram matrix is isometric",
        again.isometric(&q)?,
        q.to_string(),
    )];
    if !ext.tower().is_empty() {
        let stepwise = ext.transfer_gram_stepwise(&entries)?;
        checks.push(Check::new(
            "stepwise transfer equals composite",
            stepwise == gram,
            format!("degree {}", ext.degree()),
        ));
    }
    let mut result = json!({
        "degree": ext.degree(),
        "form": form_json(&q),
        "invariants": invariants_json(&q.invariants()?),
        "anisotropic_dimension": q.anisotropic_dimension()?,
    });
    if let Some(c) = obj.get("check") {
        let cobj = object(c, "spec.check", &["form", "lambda"])?;
        let cq = quadratic_form(required(cobj, "form", "spec.check")?, "spec.check.form")?;
        let lambda = ext.element(&rationals(
            required(cobj, "lambda", "spec.check")?,
            "spec.check.lambda",
        )?);
        let pc = witt::projection_formula_check(&ext, &cq, &lambda)?;
        checks.push(Check::new(
            "projection formula s_*(r*q) = q",
            pc.plain,
            cq.to_string(),
        ));
        checks.push(Check::new(
            "projection formula s_*(λ r*q) = N(λ) q",
            pc.twisted,
            format!("N(λ) = {}", pc.norm),
        ));
        result["projection"] = json!({
            "plain": pc.plain,
            "twisted": pc.twisted,
            "norm": rat_json(&pc.norm),
            "adapted_functional": pc.adapted,
        });
    }
    Ok(Produced::ok(result, checks))
}

fn torsor_spec(spec: &Value) -> Result<TorsorSpec> {
    let case = spec.get("case").and_then(Value::as_str).ok_or_else(|| {
        invalid(
            "spec.case",
            "expected \"split-etale\", \"quaternion\" or \"odd-degree\"",
        )
    })?;
    match case {
        "split-etale" => {
            let obj = object(spec, "spec", &["case", "c", "b"])?;
            Ok(TorsorSpec::SplitEtale {
                c: class_q(required(obj, "c", "spec")?, "spec.c")?,
                b: class_q(required(obj, "b", "spec")?, "spec.b")?,
            })
        }
        "quaternion" => {
            let obj = object(spec, "spec", &["case", "a0", "b0", "field"])?;
            Ok(TorsorSpec::Quaternion {
                a0: algebra(required(obj, "a0", "spec")?, "spec.a0")?,
                b0: algebra(required(obj, "b0", "spec")?, "spec.b0")?,
                field: field(required(obj, "field", "spec")?, "spec.field")?,
            })
        }
        "odd-degree" => {
            let obj = object(
                spec,
                "spec",
                &["case", "field", "class", "degree", "h", "h_prime"],
            )?;
            let k = field(required(obj, "field", "spec")?, "spec.field")?;
            let class = class_k(required(obj, "class", "spec")?, k, "spec.class")?;
            let degree = match obj.get("degree") {
                Some(d) => Some(
                    integer(d, "spec.degree")?
                        .to_u64()
                        .ok_or_else(|| invalid("spec.degree", "expected a positive integer"))?,
                ),
                None => None,
            };
            let forms = match (obj.get("h"), obj.get("h_prime")) {
                (Some(h), Some(h2)) => Some((
                    hermitian(h, k, "spec.h")?,
                    hermitian(h2, k, "spec.h_prime")?,
                )),
                (None, None) => None,
                _ => {
                    return Err(invalid(
                        "spec",
                        "give both \"h\" and \"h_prime\" or neither",
                    ))
                }
            };
            Ok(TorsorSpec::OddDegree {
                class,
                degree,
                forms,
            })
        }
        other => Err(invalid("spec.case", format!("unknown case \"{other}\""))),
    }
}

fn cmd_totaro(spec: &Value, config: &EngineConfig) -> Result<Produced> {
    let torsor = torsor_spec(spec)?;
    let report = engine::run(&torsor, config)?;
    let mut checks = report.verification.clone();
    // re-run the splitting certificate on the emitted field
    if let (Some(field), TorsorSpec::SplitEtale { .. } | TorsorSpec::Quaternion { .. }) =
        (&report.field, &torsor)
    {
        let class = match &torsor {
            TorsorSpec::SplitEtale { c, b } => c.tensor(&b.opposite()),
            TorsorSpec::Quaternion { a0, b0, .. } => a0.class().tensor(&b0.class()),
            TorsorSpec::OddDegree { .. } => unreachable!(),
        };
        let split = match field {
            FieldDescription::Rationals => class.is_zero(),
            FieldDescription::Quadratic(k) => class.splits_over(&k.minimal_polynomial())?,
            FieldDescription::Polynomial(f) => class.splits_over(f)?,
            FieldDescription::Compositum { .. } => false,
        };
        checks.push(Check::new(
            "emitted field splits the class",
            split,
            field.to_string(),
        ));
    }
    let exit_code = if report.theta == Theta::Undetermined {
        EXIT_UNDETERMINED
    } else {
        EXIT_OK
    };
    Ok(Produced {
        result: totaro_json(&report),
        verification: checks,
        exit_code,
    })
}

/// Parse the document text, check it names `command`, and produce the
/// report with its exit code.
pub fn run(command: Command, text: &str, config: &EngineConfig) -> Result<Outcome> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
    let obj = object(&doc, "document", &["command", "spec"])?;
    let named = required(obj, "command", "document")?
        .as_str()
        .ok_or_else(|| invalid("document.command", "expected a string"))?;
    if named != command.name() {
        return Err(invalid(
            "document.command",
            format!("\"{named}\" does not match command \"{}\"", command.name()),
        ));
    }
    let spec = required(obj, "spec", "document")?;
    let produced = match command {
        Command::Symbol => cmd_symbol(spec)?,
        Command::Class => cmd_class(spec)?,
        Command::Index => cmd_index(spec)?,
        Command::Transfer => cmd_transfer(spec)?,
        Command::Totaro => cmd_totaro(spec, config)?,
    };
    let report = json!({
        "input": doc,
        "result": produced.result,
        "verification": produced.verification.iter().map(check_json).collect::<Vec<_>>(),
        "config": {"search_bound": config.search_bound, "poly_bound": config.poly_bound},
        "version": env!("CARGO_PKG_VERSION"),
    });
    Ok(Outcome {
        report,
        exit_code: produced.exit_code,
    })
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Plain-text rendering of a report.
pub fn render_text(command: Command, report: &Value) -> String {
    let mut out = format!("command: {}\n", command.name());
    if let Some(result) = report["result"].as_object() {
        for (k, v) in result {
            let shown = match (k.as_str(), v) {
                ("field", Value::Object(f)) => text_value(&f["description"]),
                ("candidates", Value::Array(c)) if c.is_empty() => "none".to_string(),
                ("candidates", Value::Array(c)) => c
                    .iter()
                    .map(|f| text_value(&f["description"]))
                    .collect::<Vec<_>>()
                    .join(" | "),
                _ => text_value(v),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
    }
    if let Some(checks) = report["verification"].as_array() {
        for c in checks {
            let mark = if c["pass"] == json!(true) {
                "pass"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "[{mark}] {}: {}\n",
                text_value(&c["name"]),
                text_value(&c["detail"])
            ));
        }
    }
    out
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let text = match std::fs::read_to_string(&cli.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.input.display());
            return EXIT_INVALID;
        }
    };
    let config = EngineConfig {
        search_bound: cli.search_bound,
        poly_bound: cli.poly_bound,
    };
    let outcome = match run(cli.command, &text, &config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let rendered = if cli.json {
        let mut s = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        render_text(cli.command, &outcome.report)
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INVALID;
            }
        }
        None => print!("{rendered}"),
    }
    outcome.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(command: Command, doc: Value) -> Result<Outcome> {
        run(command, &doc.to_string(), &EngineConfig::default())
    }

    #[test]
    fn symbol_command() {
        let out = go(
            Command::Symbol,
            json!({"command": "symbol", "spec": {"a": -1, "b": -1, "place": 2}}),
        )
        .unwrap();
        assert_eq!(out.report["result"]["symbol"], json!(-1));
        assert_eq!(out.exit_code, EXIT_OK);
    }

    #[test]
    fn rationals_and_floats() {
        let out = go(
            Command::Symbol,
            json!({"command": "symbol", "spec": {"a": {"num": -3, "den": 4}, "b": "7", "place": "inf"}}),
        )
        .unwrap();
        assert_eq!(out.report["result"]["symbol"], json!(1));
        let err = go(
            Command::Symbol,
            json!({"command": "symbol", "spec": {"a": 1.5, "b": 1, "place": 2}}),
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::InvalidInput("spec.a: floating-point numbers are not accepted".into())
        );
        let err = run(
            Command::Symbol,
            "{\"command\": \"symbol\",\n \"spec\": {",
            &EngineConfig::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn totaro_exit_codes() {
        let q = json!({"command": "totaro", "spec": {"case": "quaternion", "a0": {"a": -1, "b": -1}, "b0": {"a": -1, "b": -1}, "field": {"d": 5}}});
        let out = go(Command::Totaro, q).unwrap();
        assert_eq!(out.report["result"]["index"], json!(1));
        assert_eq!(out.exit_code, EXIT_OK);
        let odd = json!({"command": "totaro", "spec": {"case": "odd-degree", "field": {"d": -1}, "class": {"invariants": [
            {"place": 5, "slot": 1, "num": 1, "den": 3}, {"place": 5, "slot": 2, "num": 2, "den": 3}]}}});
        let out = go(Command::Totaro, odd).unwrap();
        assert_eq!(out.exit_code, EXIT_UNDETERMINED);
        assert_eq!(out.report["result"]["theta"], json!("undetermined"));
        let tight = json!({"command": "totaro", "spec": {"case": "split-etale",
            "c": {"invariants": [{"place": 5, "num": 1, "den": 3}, {"place": 7, "num": 2, "den": 3}]}, "b": {"invariants": []}}});
        let err = run(
            Command::Totaro,
            &tight.to_string(),
            &EngineConfig {
                search_bound: 50,
                poly_bound: 0,
            },
        )
        .unwrap_err();
        assert_eq!(exit_code(&err), EXIT_SEARCH);
    }

    #[test]
    fn command_mismatch_rejected() {
        let err = go(Command::Class, json!({"command": "symbol", "spec": {}})).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INVALID);
    }
}
