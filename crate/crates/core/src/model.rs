//! JSON model files.
//!
//! Every file is an object with a `"kind"` tag. Rationals are strings
//! (`"3"`, `"-1/2"`), basis indices are 1-based, and only nonzero entries are
//! listed. Structure constants are given on canonical tuples: bracket entries
//! need `i < j`, triple entries `i < j` in the first pair. An algebra with
//! `"form": "full"` lists every entry instead, which is how a bracket that is
//! not antisymmetric can be written down at all.
//!
//! [`serialize_model`] writes canonical JSON: sorted keys, sorted entry
//! lists, normalized rationals, two-space indentation and a final newline.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::algebra::{LieYamagutiAlgebra, MorphismLYA};
use crate::cochain::{Cochain, CochainPair, CochainSpace, DiagonalCochain, MorphismCochain23, MorphismShape};
use crate::deformation::FormalDeformation;
use crate::error::{Error, Result};
use crate::extension::{AbelianExtension, Section};
use crate::linalg::{zero_vec, Matrix, Rational};
use crate::representation::{self_morphism_representation, MorphismRepresentation, Representation};

/// What a cochain or isomorphism request is computed over: a morphism with
/// coefficients in itself, or an explicit morphism representation.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Base {
    Morphism(MorphismLYA),
    Representation(MorphismRepresentation),
}

impl Base {
    pub fn morphism_representation(&self) -> MorphismRepresentation {
        match self {
            Base::Morphism(phi) => self_morphism_representation(phi),
            Base::Representation(mr) => mr.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainModel {
    pub base: Base,
    pub cochain: MorphismCochain23,
}

/// Two cochains over the same base and, optionally, a claimed `(ξ, ξ')`
/// with `first - second = d(ξ, ξ')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoModel {
    pub base: Base,
    pub first: MorphismCochain23,
    pub second: MorphismCochain23,
    pub xi: Option<(Matrix, Matrix)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Model {
    Algebra(LieYamagutiAlgebra),
    Morphism(MorphismLYA),
    Representation(Representation),
    MorphismRepresentation(MorphismRepresentation),
    Cochain(CochainModel),
    Deformation(FormalDeformation),
    Extension(AbelianExtension),
    Section(Section),
    Iso(IsoModel),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Algebra(_) => "algebra",
            Model::Morphism(_) => "morphism",
            Model::Representation(_) => "representation",
            Model::MorphismRepresentation(_) => "morphism_representation",
            Model::Cochain(_) => "cochain",
            Model::Deformation(_) => "deformation",
            Model::Extension(_) => "extension",
            Model::Section(_) => "section",
            Model::Iso(_) => "iso",
        }
    }
}

pub fn parse_model(text: &str) -> Result<Model> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    model_from_value(&v)
}

pub fn model_from_value(v: &Value) -> Result<Model> {
    let o = v.as_object().ok_or_else(|| invalid("$", "expected an object"))?;
    let kind = o
        .get("kind")
        .ok_or_else(|| invalid("$", "missing field \"kind\""))?
        .as_str()
        .ok_or_else(|| invalid("$.kind", "expected a string"))?;
    let p = "$";
    Ok(match kind {
        "algebra" => Model::Algebra(algebra(v, p, &["kind"])?),
        "morphism" => Model::Morphism(morphism(v, p, &["kind"])?),
        "representation" => {
            let o = object(v, p, &["kind", "algebra", "module_dim", "rho", "d", "theta"])?;
            let l = algebra(field(o, "algebra", p)?, &path(p, "algebra"), &[])?;
            Model::Representation(representation_body(&l, o, p)?)
        }
        "morphism_representation" => Model::MorphismRepresentation(morphism_representation(v, p, &["kind"])?),
        "cochain" => {
            let o = object(v, p, &["kind", "morphism", "morphism_representation", "source", "target", "map"])?;
            let base = base(o, p)?;
            let cochain = cochain_body(&base.morphism_representation(), o, p)?;
            Model::Cochain(CochainModel { base, cochain })
        }
        "deformation" => Model::Deformation(deformation(v, p)?),
        "extension" => Model::Extension(extension(v, p)?),
        "section" => {
            let o = object(v, p, &["kind", "s", "s_bar"])?;
            Model::Section(Section {
                s: matrix(field(o, "s", p)?, &path(p, "s"), None)?,
                s_bar: matrix(field(o, "s_bar", p)?, &path(p, "s_bar"), None)?,
            })
        }
        "iso" => Model::Iso(iso(v, p)?),
        other => return Err(invalid("$.kind", &format!("unknown kind \"{other}\""))),
    })
}

pub fn serialize_model(m: &Model) -> String {
    let mut s = serde_json::to_string_pretty(&model_to_value(m)).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn model_to_value(m: &Model) -> Value {
    let mut o = match m {
        Model::Algebra(l) => algebra_value(l),
        Model::Morphism(phi) => morphism_value(phi),
        Model::Representation(r) => {
            let mut o = representation_value(r);
            o.insert("algebra".into(), Value::Object(algebra_value(r.algebra())));
            o
        }
        Model::MorphismRepresentation(mr) => morphism_representation_value(mr),
        Model::Cochain(c) => {
            let mut o = cochain_value(&c.cochain);
            insert_base(&mut o, &c.base);
            o
        }
        Model::Deformation(def) => deformation_value(def),
        Model::Extension(e) => extension_value(e),
        Model::Section(s) => {
            let mut o = Map::new();
            o.insert("s".into(), matrix_value(&s.s));
            o.insert("s_bar".into(), matrix_value(&s.s_bar));
            o
        }
        Model::Iso(iso) => {
            let mut o = Map::new();
            insert_base(&mut o, &iso.base);
            o.insert("first".into(), Value::Object(cochain_value(&iso.first)));
            o.insert("second".into(), Value::Object(cochain_value(&iso.second)));
            if let Some((a, b)) = &iso.xi {
                let mut x = Map::new();
                x.insert("source".into(), matrix_value(a));
                x.insert("target".into(), matrix_value(b));
                o.insert("xi".into(), Value::Object(x));
            }
            o
        }
    };
    o.insert("kind".into(), Value::String(m.kind().into()));
    Value::Object(o)
}

// ---- scalars ----

pub fn parse_rational(s: &str) -> Option<Rational> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let body = s.strip_prefix('-').unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return None;
    }
    let mut n: BigInt = num.parse().ok()?;
    if s.starts_with('-') {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn rational_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_value).collect())
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_value(m.row(r))).collect())
}

// ---- parsing helpers ----

fn invalid(at: &str, msg: &str) -> Error {
    Error::Invalid(format!("{at}: {msg}"))
}

fn path(p: &str, key: &str) -> String {
    format!("{p}.{key}")
}

fn object<'a>(v: &'a Value, p: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let o = v.as_object().ok_or_else(|| invalid(p, "expected an object"))?;
    if let Some(k) = o.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(invalid(p, &format!("unknown field \"{k}\"")));
    }
    Ok(o)
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, p: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| invalid(p, &format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, p: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| invalid(p, "expected an array"))
}

fn count(v: &Value, p: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| invalid(p, "expected a nonnegative integer"))
}

fn rational(v: &Value, p: &str) -> Result<Rational> {
    let s = v.as_str().ok_or_else(|| invalid(p, "rationals must be strings"))?;
    parse_rational(s).ok_or_else(|| invalid(p, &format!("bad rational literal \"{s}\"")))
}

/// A 1-based basis index in `1..=d`, returned 0-based.
fn index(v: &Value, d: usize, p: &str) -> Result<usize> {
    let i = v.as_u64().ok_or_else(|| invalid(p, "indices must be positive integers"))?;
    if i == 0 || i > d as u64 {
        return Err(invalid(p, &format!("index {i} out of range 1..{d}")));
    }
    Ok(i as usize - 1)
}

/// `{"k": "r", ...}` with 1-based keys into a dense vector of length `m`.
fn sparse_vector(v: &Value, m: usize, p: &str) -> Result<Vec<Rational>> {
    let o = v.as_object().ok_or_else(|| invalid(p, "expected an object of coordinates"))?;
    let mut out = zero_vec(m);
    for (k, x) in o {
        let q = path(p, k);
        let i: usize = k
            .parse()
            .ok()
            .filter(|i| (1..=m).contains(i) && !k.starts_with('0') && !k.starts_with('+'))
            .ok_or_else(|| invalid(&q, &format!("coordinate key out of range 1..{m}")))?;
        out[i - 1] = rational(x, &q)?;
    }
    Ok(out)
}

/// Rows of rational strings. `shape` pins the expected size, which also
/// settles the column count of an empty matrix.
fn matrix(v: &Value, p: &str, shape: Option<(usize, usize)>) -> Result<Matrix> {
    let rows = array(v, p)?;
    let mut data = Vec::new();
    let mut cols = None;
    for (r, row) in rows.iter().enumerate() {
        let q = format!("{p}[{r}]");
        let row = array(row, &q)?;
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(invalid(&q, "rows have different lengths"));
        }
        for (c, x) in row.iter().enumerate() {
            data.push(rational(x, &format!("{q}[{c}]"))?);
        }
    }
    let got = (rows.len(), cols.unwrap_or(0));
    match shape {
        Some(s) if data.is_empty() && s.0 * s.1 == 0 && (got.0 == s.0 || got.0 == 0) => Ok(Matrix::zeros(s.0, s.1)),
        Some(s) if s != got => Err(invalid(p, &format!("expected a {}x{} matrix, got {}x{}", s.0, s.1, got.0, got.1))),
        _ => Matrix::from_vec(got.0, got.1, data),
    }
}

/// `[{"args": [..], <payload_key>: ..}, ...]`, checking arity, range and
/// that no tuple is listed twice.
fn entries<'a>(v: &'a Value, p: &str, arity: usize, d: usize, payload_key: &str) -> Result<Vec<(Vec<usize>, &'a Value, String)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (n, e) in array(v, p)?.iter().enumerate() {
        let q = format!("{p}[{n}]");
        let o = object(e, &q, &["args", payload_key])?;
        let aq = path(&q, "args");
        let args = array(field(o, "args", &q)?, &aq)?;
        if args.len() != arity {
            return Err(invalid(&aq, &format!("expected {arity} indices, got {}", args.len())));
        }
        let args = args
            .iter()
            .enumerate()
            .map(|(k, a)| index(a, d, &format!("{aq}[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        if !seen.insert(args.clone()) {
            return Err(invalid(&aq, "duplicate entry"));
        }
        out.push((args, field(o, payload_key, &q)?, path(&q, payload_key)));
    }
    Ok(out)
}

fn canonical_pair(args: &[usize], p: &str) -> Result<()> {
    if args[0] >= args[1] {
        return Err(invalid(p, "non-canonical index pair"));
    }
    Ok(())
}

// ---- algebras and morphisms ----

fn algebra(v: &Value, p: &str, extra: &[&str]) -> Result<LieYamagutiAlgebra> {
    let mut allowed = vec!["dim", "bracket", "triple", "form"];
    allowed.extend_from_slice(extra);
    let o = object(v, p, &allowed)?;
    let d = count(field(o, "dim", p)?, &path(p, "dim"))?;
    let full = match o.get("form") {
        None => false,
        Some(Value::String(s)) if s == "full" => true,
        Some(Value::String(s)) if s == "canonical" => false,
        Some(_) => return Err(invalid(&path(p, "form"), "expected \"canonical\" or \"full\"")),
    };
    let mut bin = zero_vec(d * d * d);
    let mut tern = zero_vec(d * d * d * d);
    let bp = path(p, "bracket");
    for (args, val, q) in entries(field(o, "bracket", p)?, &bp, 2, d, "value")? {
        if !full {
            canonical_pair(&args, &q.replace(".value", ".args"))?;
        }
        let x = sparse_vector(val, d, &q)?;
        let (i, j) = (args[0], args[1]);
        for (k, xk) in x.into_iter().enumerate() {
            if !full {
                bin[(j * d + i) * d + k] = -&xk;
            }
            bin[(i * d + j) * d + k] = xk;
        }
    }
    let tp = path(p, "triple");
    for (args, val, q) in entries(field(o, "triple", p)?, &tp, 3, d, "value")? {
        if !full {
            canonical_pair(&args, &q.replace(".value", ".args"))?;
        }
        let x = sparse_vector(val, d, &q)?;
        let (i, j, k) = (args[0], args[1], args[2]);
        for (l, xl) in x.into_iter().enumerate() {
            if !full {
                tern[((j * d + i) * d + k) * d + l] = -&xl;
            }
            tern[((i * d + j) * d + k) * d + l] = xl;
        }
    }
    LieYamagutiAlgebra::new(d, bin, tern)
}

fn morphism(v: &Value, p: &str, extra: &[&str]) -> Result<MorphismLYA> {
    let mut allowed = vec!["source", "target", "matrix"];
    allowed.extend_from_slice(extra);
    let o = object(v, p, &allowed)?;
    let src = algebra(field(o, "source", p)?, &path(p, "source"), &[])?;
    let tgt = algebra(field(o, "target", p)?, &path(p, "target"), &[])?;
    let m = matrix(field(o, "matrix", p)?, &path(p, "matrix"), Some((tgt.dim(), src.dim())))?;
    MorphismLYA::new(src, tgt, m)
}

fn entry_value(args: &[usize], key: &str, payload: Value) -> Value {
    let mut o = Map::new();
    o.insert("args".into(), Value::Array(args.iter().map(|a| Value::from(a + 1)).collect()));
    o.insert(key.into(), payload);
    Value::Object(o)
}

fn sparse_value(v: &[Rational]) -> Value {
    let mut o = Map::new();
    for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        o.insert((i + 1).to_string(), rational_value(x));
    }
    Value::Object(o)
}

fn algebra_value(l: &LieYamagutiAlgebra) -> Map<String, Value> {
    let d = l.dim();
    let neg = |a: &[Rational], b: &[Rational]| a.iter().zip(b).all(|(x, y)| *x == -y);
    let canonical = (0..d).all(|i| (0..d).all(|j| neg(l.bin(i, j), l.bin(j, i))))
        && (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| neg(l.tern(i, j, k), l.tern(j, i, k)))));
    let keep = |i: usize, j: usize| !canonical || i < j;
    let mut bracket = Vec::new();
    let mut triple = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if keep(i, j) && l.bin(i, j).iter().any(|x| !x.is_zero()) {
                bracket.push(entry_value(&[i, j], "value", sparse_value(l.bin(i, j))));
            }
            for k in 0..d {
                if keep(i, j) && l.tern(i, j, k).iter().any(|x| !x.is_zero()) {
                    triple.push(entry_value(&[i, j, k], "value", sparse_value(l.tern(i, j, k))));
                }
            }
        }
    }
    let mut o = Map::new();
    o.insert("dim".into(), Value::from(d));
    o.insert("bracket".into(), Value::Array(bracket));
    o.insert("triple".into(), Value::Array(triple));
    if !canonical {
        o.insert("form".into(), Value::from("full"));
    }
    o
}

fn morphism_value(phi: &MorphismLYA) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("source".into(), Value::Object(algebra_value(phi.source())));
    o.insert("target".into(), Value::Object(algebra_value(phi.target())));
    o.insert("matrix".into(), matrix_value(phi.matrix()));
    o
}

// ---- representations ----

/// `module_dim`, `rho`, `d`, `theta` over an already known algebra.
fn representation_body(l: &LieYamagutiAlgebra, o: &Map<String, Value>, p: &str) -> Result<Representation> {
    let n = l.dim();
    let m = count(field(o, "module_dim", p)?, &path(p, "module_dim"))?;
    let mut rho = vec![Matrix::zeros(m, m); n];
    let mut dm = vec![Matrix::zeros(m, m); n * n];
    let mut theta = vec![Matrix::zeros(m, m); n * n];
    for (args, val, q) in entries(field(o, "rho", p)?, &path(p, "rho"), 1, n, "matrix")? {
        rho[args[0]] = matrix(val, &q, Some((m, m)))?;
    }
    for (args, val, q) in entries(field(o, "d", p)?, &path(p, "d"), 2, n, "matrix")? {
        dm[args[0] * n + args[1]] = matrix(val, &q, Some((m, m)))?;
    }
    for (args, val, q) in entries(field(o, "theta", p)?, &path(p, "theta"), 2, n, "matrix")? {
        theta[args[0] * n + args[1]] = matrix(val, &q, Some((m, m)))?;
    }
    Representation::new(l.clone(), m, rho, dm, theta)
}

fn representation_value(r: &Representation) -> Map<String, Value> {
    let n = r.algebra().dim();
    let list = |items: Vec<(Vec<usize>, &Matrix)>| {
        Value::Array(
            items
                .into_iter()
                .filter(|(_, a)| !a.is_zero())
                .map(|(args, a)| entry_value(&args, "matrix", matrix_value(a)))
                .collect(),
        )
    };
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| vec![i, j]));
    let mut o = Map::new();
    o.insert("module_dim".into(), Value::from(r.module_dim()));
    o.insert("rho".into(), list((0..n).map(|i| (vec![i], r.rho(i))).collect()));
    o.insert("d".into(), list(pairs().map(|a| (a.clone(), r.d(a[0], a[1]))).collect()));
    o.insert("theta".into(), list(pairs().map(|a| (a.clone(), r.theta(a[0], a[1]))).collect()));
    o
}

fn morphism_representation(v: &Value, p: &str, extra: &[&str]) -> Result<MorphismRepresentation> {
    let mut allowed = vec!["morphism", "source_rep", "target_rep", "psi"];
    allowed.extend_from_slice(extra);
    let o = object(v, p, &allowed)?;
    let phi = morphism(field(o, "morphism", p)?, &path(p, "morphism"), &[])?;
    let keys = ["module_dim", "rho", "d", "theta"];
    let sp = path(p, "source_rep");
    let tp = path(p, "target_rep");
    let rv = representation_body(phi.source(), object(field(o, "source_rep", p)?, &sp, &keys)?, &sp)?;
    let rw = representation_body(phi.target(), object(field(o, "target_rep", p)?, &tp, &keys)?, &tp)?;
    let psi = matrix(field(o, "psi", p)?, &path(p, "psi"), Some((rw.module_dim(), rv.module_dim())))?;
    MorphismRepresentation::new(phi, rv, rw, psi)
}

fn morphism_representation_value(mr: &MorphismRepresentation) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("morphism".into(), Value::Object(morphism_value(mr.phi())));
    o.insert("source_rep".into(), Value::Object(representation_value(mr.rep_v())));
    o.insert("target_rep".into(), Value::Object(representation_value(mr.rep_w())));
    o.insert("psi".into(), matrix_value(mr.psi()));
    o
}

// ---- cochains ----

fn base(o: &Map<String, Value>, p: &str) -> Result<Base> {
    match (o.get("morphism"), o.get("morphism_representation")) {
        (Some(v), None) => Ok(Base::Morphism(morphism(v, &path(p, "morphism"), &[])?)),
        (None, Some(v)) => Ok(Base::Representation(morphism_representation(
            v,
            &path(p, "morphism_representation"),
            &[],
        )?)),
        _ => Err(invalid(p, "expected exactly one of \"morphism\" and \"morphism_representation\"")),
    }
}

fn insert_base(o: &mut Map<String, Value>, b: &Base) {
    match b {
        Base::Morphism(phi) => o.insert("morphism".into(), Value::Object(morphism_value(phi))),
        Base::Representation(mr) => o.insert(
            "morphism_representation".into(),
            Value::Object(morphism_representation_value(mr)),
        ),
    };
}

/// `{"f": [...], "g": [...]}`: a degree-(2,3) pair on canonical tuples.
fn pair_body(v: &Value, p: &str, d: usize, m: usize) -> Result<CochainPair> {
    let o = object(v, p, &["f", "g"])?;
    let mut f = Cochain::zero(CochainSpace::even(1, d, m));
    let mut g = Cochain::zero(CochainSpace::odd(1, d, m));
    for (c, key, arity) in [(&mut f, "f", 2), (&mut g, "g", 3)] {
        for (args, val, q) in entries(field(o, key, p)?, &path(p, key), arity, d, "value")? {
            canonical_pair(&args, &q.replace(".value", ".args"))?;
            c.set(&args, &sparse_vector(val, m, &q)?)?;
        }
    }
    CochainPair::new(f, g)
}

fn pair_value(c: &CochainPair) -> Value {
    let list = |c: &Cochain| {
        let s = c.space();
        let m = s.module_dim;
        Value::Array(
            (0..s.bases())
                .map(|b| (s.args_of(b), &c.coeffs()[b * m..(b + 1) * m]))
                .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
                .map(|(args, v)| entry_value(&args, "value", sparse_value(v)))
                .collect(),
        )
    };
    let mut o = Map::new();
    o.insert("f".into(), list(&c.f));
    o.insert("g".into(), list(&c.g));
    Value::Object(o)
}

fn component(o: &Map<String, Value>, p: &str, s: MorphismShape) -> Result<MorphismCochain23> {
    Ok(MorphismCochain23 {
        alpha: pair_body(field(o, "source", p)?, &path(p, "source"), s.d1, s.mv)?,
        beta: pair_body(field(o, "target", p)?, &path(p, "target"), s.d2, s.mw)?,
        gamma: DiagonalCochain::new(matrix(field(o, "map", p)?, &path(p, "map"), Some((s.mw, s.d1)))?),
    })
}

fn cochain_body(mr: &MorphismRepresentation, o: &Map<String, Value>, p: &str) -> Result<MorphismCochain23> {
    component(o, p, MorphismShape::of(mr))
}

/// The `source`/`target`/`map` body of a cochain, without its base.
pub fn cochain_value(c: &MorphismCochain23) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("source".into(), pair_value(&c.alpha));
    o.insert("target".into(), pair_value(&c.beta));
    o.insert("map".into(), matrix_value(&c.gamma.map));
    o
}

// ---- deformations ----

fn deformation(v: &Value, p: &str) -> Result<FormalDeformation> {
    let o = object(v, p, &["kind", "morphism", "order", "terms"])?;
    let phi = morphism(field(o, "morphism", p)?, &path(p, "morphism"), &[])?;
    let n = count(field(o, "order", p)?, &path(p, "order"))?;
    let mut def = FormalDeformation::trivial(&phi, n);
    let (d1, d2) = (phi.source().dim(), phi.target().dim());
    let shape = MorphismShape { d1, d2, mv: d1, mw: d2 };
    let tp = path(p, "terms");
    let mut seen = BTreeSet::new();
    for (k, t) in array(field(o, "terms", p)?, &tp)?.iter().enumerate() {
        let q = format!("{tp}[{k}]");
        let to = object(t, &q, &["order", "source", "target", "map"])?;
        let i = count(field(to, "order", &q)?, &path(&q, "order"))?;
        if i == 0 || i > n {
            return Err(invalid(&path(&q, "order"), &format!("term order must lie in 1..{n}")));
        }
        if !seen.insert(i) {
            return Err(invalid(&path(&q, "order"), "duplicate term"));
        }
        let c = component(to, &q, shape)?;
        def.l1_terms[i - 1] = c.alpha;
        def.l2_terms[i - 1] = c.beta;
        def.phi_terms[i - 1] = c.gamma.map;
    }
    Ok(def)
}

fn deformation_value(def: &FormalDeformation) -> Map<String, Value> {
    let terms = (1..=def.order())
        .map(|i| def.component(i))
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mut o = cochain_value(&c);
            o.insert("order".into(), Value::from(i + 1));
            Value::Object(o)
        })
        .collect();
    let mut o = Map::new();
    o.insert("morphism".into(), Value::Object(morphism_value(&def.phi)));
    o.insert("order".into(), Value::from(def.order()));
    o.insert("terms".into(), Value::Array(terms));
    o
}

// ---- extensions ----

fn extension(v: &Value, p: &str) -> Result<AbelianExtension> {
    let o = object(v, p, &["kind", "phi", "phi_hat", "psi", "i", "p", "i_bar", "p_bar"])?;
    let phi = morphism(field(o, "phi", p)?, &path(p, "phi"), &[])?;
    let phi_hat = morphism(field(o, "phi_hat", p)?, &path(p, "phi_hat"), &[])?;
    let (h1, h2) = (phi_hat.source().dim(), phi_hat.target().dim());
    let (d1, d2) = (phi.source().dim(), phi.target().dim());
    let get = |k: &str, shape: Option<(usize, usize)>| matrix(field(o, k, p)?, &path(p, k), shape);
    let psi = get("psi", None)?;
    let (mw, mv) = psi.shape();
    let e = AbelianExtension {
        i: get("i", Some((h1, mv)))?,
        p: get("p", Some((d1, h1)))?,
        i_bar: get("i_bar", Some((h2, mw)))?,
        p_bar: get("p_bar", Some((d2, h2)))?,
        phi,
        phi_hat,
        psi,
    };
    Ok(e)
}

fn extension_value(e: &AbelianExtension) -> Map<String, Value> {
    let mut o = Map::new();
    o.insert("phi".into(), Value::Object(morphism_value(&e.phi)));
    o.insert("phi_hat".into(), Value::Object(morphism_value(&e.phi_hat)));
    for (k, m) in [("psi", &e.psi), ("i", &e.i), ("p", &e.p), ("i_bar", &e.i_bar), ("p_bar", &e.p_bar)] {
        o.insert(k.into(), matrix_value(m));
    }
    o
}

fn iso(v: &Value, p: &str) -> Result<IsoModel> {
    let o = object(v, p, &["kind", "morphism", "morphism_representation", "first", "second", "xi"])?;
    let base = base(o, p)?;
    let mr = base.morphism_representation();
    let s = MorphismShape::of(&mr);
    let keys = ["source", "target", "map"];
    let fp = path(p, "first");
    let sp = path(p, "second");
    let first = cochain_body(&mr, object(field(o, "first", p)?, &fp, &keys)?, &fp)?;
    let second = cochain_body(&mr, object(field(o, "second", p)?, &sp, &keys)?, &sp)?;
    let xi = match o.get("xi") {
        None => None,
        Some(x) => {
            let xp = path(p, "xi");
            let xo = object(x, &xp, &["source", "target"])?;
            let a = matrix(field(xo, "source", &xp)?, &path(&xp, "source"), Some((s.mv, s.d1)))?;
            let b = matrix(field(xo, "target", &xp)?, &path(&xp, "target"), Some((s.mw, s.d2)))?;
            Some((a, b))
        }
    };
    Ok(IsoModel { base, first, second, xi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::{frac, q};

    fn round_trip(m: &Model) {
        let text = serialize_model(m);
        let back = parse_model(&text).unwrap();
        assert_eq!(&back, m);
        assert_eq!(serialize_model(&back), text);
    }

    #[test]
    fn lie_example_matches_constructor() {
        let text = r#"{"kind":"algebra","dim":2,"bracket":[{"args":[1,2],"value":{"1":"1"}}],"triple":[{"args":[1,2,2],"value":{"1":"1"}}]}"#;
        let Model::Algebra(l) = parse_model(text).unwrap() else { panic!() };
        assert_eq!(l, corpus::affine2());
    }

    #[test]
    fn empty_is_abelian() {
        let Model::Algebra(l) = parse_model(r#"{"kind":"algebra","dim":2,"bracket":[],"triple":[]}"#).unwrap() else {
            panic!()
        };
        assert_eq!(l, LieYamagutiAlgebra::abelian(2));
    }

    #[test]
    fn rejects_descending_pair() {
        let err = parse_model(r#"{"kind":"algebra","dim":2,"bracket":[{"args":[2,1],"value":{"1":"1"}}],"triple":[]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("non-canonical index pair"), "{err}");
        assert!(err.to_string().contains("$.bracket[0].args"), "{err}");
    }

    #[test]
    fn normalizes_rationals() {
        let text = r#"{"kind":"algebra","dim":2,"bracket":[{"args":[1,2],"value":{"1":"2/4"}}],"triple":[]}"#;
        let out = serialize_model(&parse_model(text).unwrap());
        assert!(out.contains("\"1/2\""), "{out}");
        assert!(!out.contains("2/4"));
    }

    #[test]
    fn syntax_errors_are_located() {
        match parse_model("{\n  \"kind\": \"algebra\",\n  \"dim\": 2,,\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_literals_and_ranges() {
        for bad in ["1.5", "1/0", "", "-", "1/-2", "+1", " 1", "0x1"] {
            assert!(parse_rational(bad).is_none(), "{bad}");
        }
        assert_eq!(parse_rational("-6/4"), Some(frac(-3, 2)));
        assert_eq!(parse_rational("007"), Some(q(7)));
        let e = parse_model(r#"{"kind":"algebra","dim":2,"bracket":[{"args":[1,3],"value":{"1":"1"}}],"triple":[]}"#);
        assert!(e.unwrap_err().to_string().contains("out of range"));
        let e = parse_model(r#"{"kind":"algebra","dim":2,"bracket":[{"args":[1,2],"value":{"1":1}}],"triple":[]}"#);
        assert!(e.unwrap_err().to_string().contains("must be strings"));
        let e = parse_model(r#"{"kind":"algebra","dim":2,"bracket":[],"triple":[],"extra":1}"#);
        assert!(e.unwrap_err().to_string().contains("unknown field"));
    }

    #[test]
    fn non_skew_needs_full_form() {
        let text = r#"{"kind":"algebra","dim":2,"form":"full","bracket":[{"args":[1,2],"value":{"1":"1"}}],"triple":[]}"#;
        let m = parse_model(text).unwrap();
        let Model::Algebra(l) = &m else { panic!() };
        assert!(!l.check_axioms().is_pass());
        assert!(serialize_model(&m).contains("\"full\""));
        round_trip(&m);
    }

    #[test]
    fn corpus_round_trips() {
        for (_, l) in corpus::algebras() {
            round_trip(&Model::Algebra(l.clone()));
            round_trip(&Model::Representation(Representation::adjoint(&l)));
        }
        for (_, phi) in corpus::morphisms() {
            round_trip(&Model::Morphism(phi.clone()));
            let mr = self_morphism_representation(&phi);
            round_trip(&Model::MorphismRepresentation(mr.clone()));
            let s = MorphismShape::of(&mr);
            let v: Vec<Rational> = (0..s.degree_dim(1)).map(|k| frac(k as i64 % 5 - 2, 3)).collect();
            let c = MorphismCochain23::from_vec(s, &v).unwrap();
            round_trip(&Model::Cochain(CochainModel {
                base: Base::Morphism(phi.clone()),
                cochain: c.clone(),
            }));
            round_trip(&Model::Cochain(CochainModel {
                base: Base::Representation(mr),
                cochain: c.clone(),
            }));
            let mut def = FormalDeformation::trivial(&phi, 3);
            def.l1_terms[1] = c.alpha.clone();
            def.phi_terms[2] = c.gamma.map.clone();
            round_trip(&Model::Deformation(def));
            round_trip(&Model::Iso(IsoModel {
                base: Base::Morphism(phi.clone()),
                first: c.clone(),
                second: MorphismCochain23::zero(s),
                xi: Some((Matrix::zeros(s.mv, s.d1), Matrix::zeros(s.mw, s.d2))),
            }));
        }
    }
}
