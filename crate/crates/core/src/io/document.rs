use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::de::{self, DeserializeSeed, Deserializer, MapAccess, SeqAccess, Visitor};
use serde_json::{json, Map, Value};

use super::{parse_scalar, IoError};
use crate::algebra::{Algebra, AlgebraError, FusionLaw};
use crate::axet::{AxetKind, C2Axet};
use crate::catalog::CatalogEntry;
use crate::fields::{Field, FieldKind, Scalar};
use crate::linalg::Vector;

/// An algebra together with its designated axes and fusion law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub algebra: Algebra,
    pub axes: Vec<usize>,
    pub law: FusionLaw,
}

impl From<&CatalogEntry> for AlgebraDocument {
    fn from(e: &CatalogEntry) -> Self {
        AlgebraDocument { algebra: e.algebra.clone(), axes: e.axes.clone(), law: e.law.clone() }
    }
}

impl AlgebraDocument {
    /// Substitutes values for every indeterminate of a function-field document.
    /// The result lives in the field of the assigned values.
    pub fn specialize(&self, assignments: &BTreeMap<String, Scalar>) -> Result<AlgebraDocument, AlgebraError> {
        let target = assignments
            .values()
            .next()
            .map(|x| x.field().clone())
            .ok_or_else(|| AlgebraError::InvalidAlgebra("no values to substitute".into()))?;
        let sub = |x: &Scalar| x.specialize(assignments);
        let alg = &self.algebra;
        let mut table = BTreeMap::new();
        for i in 0..alg.dim() {
            for j in i..alg.dim() {
                let v = alg.product(i, j).entries().iter().map(sub).collect::<Result<Vec<_>, _>>()?;
                table.insert((i, j), Vector::new(&target, v)?);
            }
        }
        let algebra = Algebra::from_fn(&target, alg.names().to_vec(), |i, j| table[&(i, j)].clone())?;
        let alpha = sub(self.law.alpha())?;
        let law = match self.law.beta() {
            Some(b) => FusionLaw::monster(alpha, sub(b)?)?,
            None => FusionLaw::jordan(alpha)?,
        };
        Ok(AlgebraDocument { algebra, axes: self.axes.clone(), law })
    }
}

const MAX_DIM: u64 = 256;

fn key_path(path: &str, key: &str) -> String {
    if !key.is_empty() && key.chars().all(|c| c.is_alphanumeric() || c == '_') {
        format!("{path}.{key}")
    } else {
        format!("{path}[{key:?}]")
    }
}

/// Walks a JSON document rejecting duplicate object keys.
struct NoDuplicates(String);

impl<'de> DeserializeSeed<'de> for NoDuplicates {
    type Value = ();
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<(), D::Error> {
        d.deserialize_any(self)
    }
}

impl<'de> Visitor<'de> for NoDuplicates {
    type Value = ();

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("any JSON value")
    }

    fn visit_bool<E>(self, _: bool) -> Result<(), E> {
        Ok(())
    }
    fn visit_i64<E>(self, _: i64) -> Result<(), E> {
        Ok(())
    }
    fn visit_u64<E>(self, _: u64) -> Result<(), E> {
        Ok(())
    }
    fn visit_f64<E>(self, _: f64) -> Result<(), E> {
        Ok(())
    }
    fn visit_str<E>(self, _: &str) -> Result<(), E> {
        Ok(())
    }
    fn visit_unit<E>(self) -> Result<(), E> {
        Ok(())
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<(), A::Error> {
        let mut i = 0;
        while seq.next_element_seed(NoDuplicates(format!("{}[{i}]", self.0)))?.is_some() {
            i += 1;
        }
        Ok(())
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<(), A::Error> {
        let mut seen = HashSet::new();
        while let Some(k) = map.next_key::<String>()? {
            let path = key_path(&self.0, &k);
            if !seen.insert(k) {
                return Err(de::Error::custom(format!("duplicate key at {path}")));
            }
            map.next_value_seed(NoDuplicates(path))?;
        }
        Ok(())
    }
}

fn read_json(text: &str) -> Result<Value, IoError> {
    let json_err = |e: serde_json::Error| IoError::Json { line: e.line(), column: e.column(), message: e.to_string() };
    let mut de = serde_json::Deserializer::from_str(text);
    NoDuplicates("$".into()).deserialize(&mut de).map_err(json_err)?;
    de.end().map_err(json_err)?;
    serde_json::from_str(text).map_err(json_err)
}

fn schema(path: &str, message: impl Into<String>) -> IoError {
    IoError::Schema { path: path.to_string(), message: message.into() }
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>, IoError> {
    let m = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    if let Some(k) = m.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(schema(&key_path(path, k), "unknown key"));
    }
    Ok(m)
}

fn field_of<'a>(m: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, IoError> {
    m.get(key).ok_or_else(|| schema(&key_path(path, key), "missing"))
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str, IoError> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn uint(v: &Value, path: &str) -> Result<u64, IoError> {
    v.as_u64().ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn scalar(v: &Value, path: &str, field: &Field) -> Result<Scalar, IoError> {
    let text = string(v, path)?;
    parse_scalar(text, field).map_err(|e| schema(path, e.to_string()))
}

pub fn field_to_json(f: &Field) -> Value {
    match f.kind() {
        FieldKind::Rationals => json!({"kind": "rationals"}),
        FieldKind::Prime(p) => json!({"kind": "prime", "p": p}),
        FieldKind::Quadratic { base, d } => json!({"kind": "quadratic", "base": field_to_json(base), "d": d.to_string()}),
        FieldKind::Function { base, variables } => {
            json!({"kind": "function", "base": field_to_json(base), "variables": variables})
        }
    }
}

pub fn field_from_json(v: &Value, path: &str) -> Result<Field, IoError> {
    let kind = v
        .as_object()
        .and_then(|m| m.get("kind"))
        .ok_or_else(|| schema(path, "expected an object with a kind"))?;
    let kind_path = key_path(path, "kind");
    let bad = |e: crate::fields::FieldError| schema(path, e.to_string());
    match string(kind, &kind_path)? {
        "rationals" => {
            object(v, path, &["kind"])?;
            Ok(Field::rationals())
        }
        "prime" => {
            let m = object(v, path, &["kind", "p"])?;
            let p_path = key_path(path, "p");
            Field::prime(uint(field_of(m, path, "p")?, &p_path)?).map_err(|e| schema(&p_path, e.to_string()))
        }
        "quadratic" => {
            let m = object(v, path, &["kind", "base", "d"])?;
            let base_path = key_path(path, "base");
            let base = field_from_json(field_of(m, path, "base")?, &base_path)?;
            let d_path = key_path(path, "d");
            let d = scalar(field_of(m, path, "d")?, &d_path, &base)?;
            Field::quadratic(&base, &d).map_err(|e| schema(&d_path, e.to_string()))
        }
        "function" => {
            let m = object(v, path, &["kind", "base", "variables"])?;
            let base = field_from_json(field_of(m, path, "base")?, &key_path(path, "base"))?;
            let vars_path = key_path(path, "variables");
            let vars = array(field_of(m, path, "variables")?, &vars_path)?
                .iter()
                .enumerate()
                .map(|(i, x)| string(x, &format!("{vars_path}[{i}]")).map(str::to_string))
                .collect::<Result<Vec<_>, _>>()?;
            Field::function(&base, &vars).map_err(bad)
        }
        other => Err(schema(&kind_path, format!("unknown field kind {other:?}"))),
    }
}

fn pair_key(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

/// Pretty-printed JSON for an algebra document.
pub fn serialize_algebra(doc: &AlgebraDocument) -> String {
    let alg = &doc.algebra;
    let n = alg.dim();
    let mut products = Map::new();
    for i in 0..n {
        for j in i..n {
            let v: Vec<String> = alg.product(i, j).entries().iter().map(|s| s.to_string()).collect();
            products.insert(pair_key(i, j), json!(v));
        }
    }
    let mut fusion = Map::new();
    fusion.insert("alpha".into(), json!(doc.law.alpha().to_string()));
    if let Some(b) = doc.law.beta() {
        fusion.insert("beta".into(), json!(b.to_string()));
    }
    let v = json!({
        "field": field_to_json(alg.field()),
        "dim": n,
        "basis": alg.names(),
        "products": products,
        "axes": doc.axes,
        "fusion": fusion,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

/// Parses an algebra document, reporting schema problems with a JSON path.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument, IoError> {
    let v = read_json(text)?;
    let root = "$";
    let m = object(&v, root, &["field", "dim", "basis", "products", "axes", "fusion"])?;
    let field = field_from_json(field_of(m, root, "field")?, "$.field")?;

    let n = uint(field_of(m, root, "dim")?, "$.dim")?;
    if n == 0 || n > MAX_DIM {
        return Err(schema("$.dim", format!("dimension must be in 1..={MAX_DIM}")));
    }
    let n = n as usize;

    let basis_v = array(field_of(m, root, "basis")?, "$.basis")?;
    if basis_v.len() != n {
        return Err(schema("$.basis", format!("expected {n} names, found {}", basis_v.len())));
    }
    let mut names = Vec::with_capacity(n);
    for (i, x) in basis_v.iter().enumerate() {
        let path = format!("$.basis[{i}]");
        let s = string(x, &path)?;
        if s.is_empty() || names.iter().any(|y: &String| y == s) {
            return Err(schema(&path, "basis names must be non-empty and distinct"));
        }
        names.push(s.to_string());
    }

    let axes_v = array(field_of(m, root, "axes")?, "$.axes")?;
    let mut axes = Vec::with_capacity(axes_v.len());
    for (i, x) in axes_v.iter().enumerate() {
        let path = format!("$.axes[{i}]");
        let a = uint(x, &path)? as usize;
        if a >= n {
            return Err(schema(&path, format!("index {a} out of range for dimension {n}")));
        }
        if axes.contains(&a) {
            return Err(schema(&path, format!("axis {a} listed twice")));
        }
        axes.push(a);
    }

    let fm = object(field_of(m, root, "fusion")?, "$.fusion", &["alpha", "beta"])?;
    let alpha = scalar(field_of(fm, "$.fusion", "alpha")?, "$.fusion.alpha", &field)?;
    let law = match fm.get("beta") {
        Some(b) => FusionLaw::monster(alpha, scalar(b, "$.fusion.beta", &field)?),
        None => FusionLaw::jordan(alpha),
    }
    .map_err(|e| schema("$.fusion", e.to_string()))?;

    let pm = field_of(m, root, "products")?
        .as_object()
        .ok_or_else(|| schema("$.products", "expected an object"))?;
    let mut table: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for (key, val) in pm {
        let path = key_path("$.products", key);
        let (i, j) = key
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| schema(&path, "key must have the form \"i,j\""))?;
        if i >= n || j >= n {
            return Err(schema(&path, format!("index out of range for dimension {n}")));
        }
        if i > j {
            return Err(schema(&path, format!("key must satisfy i <= j; write \"{j},{i}\"")));
        }
        if key != &pair_key(i, j) {
            return Err(schema(&path, format!("key must be written \"{i},{j}\"")));
        }
        let entries = array(val, &path)?;
        if entries.len() != n {
            return Err(schema(&path, format!("expected {n} coefficients, found {}", entries.len())));
        }
        let coeffs = entries
            .iter()
            .enumerate()
            .map(|(k, x)| scalar(x, &format!("{path}[{k}]"), &field))
            .collect::<Result<Vec<_>, _>>()?;
        table.insert((i, j), Vector::new(&field, coeffs).expect("same field"));
    }
    for i in 0..n {
        for j in i..n {
            if table.contains_key(&(i, j)) {
                continue;
            }
            if i == j && axes.contains(&i) {
                table.insert((i, i), Vector::unit(&field, n, i));
            } else {
                return Err(schema("$.products", format!("missing product \"{}\"", pair_key(i, j))));
            }
        }
    }
    let algebra = Algebra::from_fn(&field, names, |i, j| table[&(i, j)].clone())
        .map_err(|e| schema("$.products", e.to_string()))?;
    Ok(AlgebraDocument { algebra, axes, law })
}

/// JSON for an axet: kind, size, optional labels and the full tau table.
pub fn serialize_axet(x: &C2Axet) -> String {
    let (kind, parameter) = match x.kind() {
        AxetKind::Regular(n) => ("regular", Some(n)),
        AxetKind::Skew(k) => ("skew", Some(k)),
        AxetKind::Abstract => ("abstract", None),
    };
    let mut m = Map::new();
    m.insert("kind".into(), json!(kind));
    if let Some(p) = parameter {
        m.insert("parameter".into(), json!(p));
    }
    m.insert("size".into(), json!(x.size()));
    if let Some(l) = x.labels() {
        m.insert("labels".into(), json!(l));
    }
    m.insert("tau".into(), json!(x.tau_table()));
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_axet(text: &str) -> Result<C2Axet, IoError> {
    let v = read_json(text)?;
    let m = object(&v, "$", &["kind", "parameter", "size", "labels", "tau"])?;
    let size = uint(field_of(m, "$", "size")?, "$.size")? as usize;
    let kind = match string(field_of(m, "$", "kind")?, "$.kind")? {
        "regular" => AxetKind::Regular(uint(field_of(m, "$", "parameter")?, "$.parameter")? as usize),
        "skew" => AxetKind::Skew(uint(field_of(m, "$", "parameter")?, "$.parameter")? as usize),
        "abstract" => AxetKind::Abstract,
        other => return Err(schema("$.kind", format!("unknown axet kind {other:?}"))),
    };
    let rows = array(field_of(m, "$", "tau")?, "$.tau")?;
    if rows.len() != size {
        return Err(schema("$.tau", format!("expected {size} rows, found {}", rows.len())));
    }
    let mut tau = Vec::with_capacity(size);
    for (x, row) in rows.iter().enumerate() {
        let path = format!("$.tau[{x}]");
        let r = array(row, &path)?;
        if r.len() != size {
            return Err(schema(&path, format!("expected {size} entries, found {}", r.len())));
        }
        let r = r
            .iter()
            .enumerate()
            .map(|(y, e)| {
                let p = format!("{path}[{y}]");
                let t = uint(e, &p)? as usize;
                if t >= size {
                    return Err(schema(&p, format!("point {t} out of range")));
                }
                Ok(t)
            })
            .collect::<Result<Vec<_>, _>>()?;
        tau.push(r);
    }
    let labels = match m.get("labels") {
        None => None,
        Some(l) => Some(
            array(l, "$.labels")?
                .iter()
                .enumerate()
                .map(|(i, x)| x.as_i64().ok_or_else(|| schema(&format!("$.labels[{i}]"), "expected an integer")))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let axet = C2Axet::from_table(tau, labels, kind).map_err(|e| schema("$.tau", e.to_string()))?;
    let expected = match kind {
        AxetKind::Regular(n) => Some(C2Axet::regular(n)),
        AxetKind::Skew(k) => Some(C2Axet::skew(k)),
        AxetKind::Abstract => None,
    };
    if let Some(expected) = expected {
        let expected = expected.map_err(|e| schema("$.parameter", e.to_string()))?;
        if expected.tau_table() != axet.tau_table() {
            return Err(schema("$.tau", format!("table does not match {kind}")));
        }
    }
    if let Some(problem) = axet.check_axioms().into_iter().next() {
        return Err(schema("$.tau", problem));
    }
    Ok(axet)
}
