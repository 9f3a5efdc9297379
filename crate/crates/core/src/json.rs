//! JSON encodings shared by the library and the command line.
//!
//! Matrices are arrays of rows of element strings; a matrix without rows
//! or columns is written `{"rows": m, "cols": n}`. Integers are accepted
//! in place of element strings on input.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fpmod::{FpModule, ModuleMorphism, Side};
use crate::matrix::Matrix;
use crate::ring::Ring;

pub fn matrix_to_json(m: &Matrix) -> Value {
    if m.is_empty() {
        return json!({"rows": m.rows(), "cols": m.cols()});
    }
    Value::Array(
        m.to_strings()
            .into_iter()
            .map(|r| Value::Array(r.into_iter().map(Value::String).collect()))
            .collect(),
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn dim(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| bad(format!("empty matrix needs an integer `{key}`")))
}

pub fn matrix_from_json(ring: &Ring, v: &Value) -> Result<Matrix> {
    match v {
        Value::Object(_) => {
            let (r, c) = (dim(v, "rows")?, dim(v, "cols")?);
            if r != 0 && c != 0 {
                return Err(bad("the object form is only for matrices with no rows or no columns"));
            }
            Ok(Matrix::zero(ring, r, c))
        }
        Value::Array(rows) => {
            let mut parsed = Vec::with_capacity(rows.len());
            for row in rows {
                let Value::Array(entries) = row else {
                    return Err(bad("matrix rows must be arrays"));
                };
                let mut out = Vec::with_capacity(entries.len());
                for e in entries {
                    let text = match e {
                        Value::String(s) => s.clone(),
                        Value::Number(n) => n.to_string(),
                        _ => return Err(bad("matrix entries must be strings or integers")),
                    };
                    out.push(ring.parse_elem(&text)?);
                }
                parsed.push(out);
            }
            let cols = parsed.first().map_or(0, Vec::len);
            Matrix::from_rows(ring, parsed, cols)
        }
        _ => Err(bad("a matrix must be an array of rows")),
    }
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    let s = v
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing `ring`"))?;
    Ring::parse(s)
}

pub fn module_to_json(m: &FpModule) -> Value {
    json!({
        "ring": m.ring().to_string(),
        "side": m.side(),
        "presentation": matrix_to_json(&m.presentation()),
    })
}

pub fn module_from_json(v: &Value) -> Result<FpModule> {
    let ring = ring_from_json(v)?;
    let side = match v.get("side").and_then(Value::as_str) {
        None | Some("left") => Side::Left,
        Some("right") => Side::Right,
        Some(other) => return Err(bad(format!("unknown side `{other}`"))),
    };
    let p = v.get("presentation").ok_or_else(|| bad("missing `presentation`"))?;
    let a = matrix_from_json(&ring, p)?;
    Ok(match side {
        Side::Left => FpModule::left(a),
        Side::Right => FpModule::right(a),
    })
}

pub fn morphism_to_json(f: &ModuleMorphism) -> Value {
    let mut o = Map::new();
    o.insert("source".into(), module_to_json(f.source()));
    o.insert("target".into(), module_to_json(f.target()));
    o.insert("matrix".into(), matrix_to_json(f.matrix()));
    o.insert("certificate".into(), matrix_to_json(f.certificate()));
    Value::Object(o)
}

pub fn morphism_from_json(v: &Value) -> Result<ModuleMorphism> {
    let source = module_from_json(v.get("source").ok_or_else(|| bad("missing `source`"))?)?;
    let target = module_from_json(v.get("target").ok_or_else(|| bad("missing `target`"))?)?;
    let ring = source.ring().clone();
    let v_m = matrix_from_json(&ring, v.get("matrix").ok_or_else(|| bad("missing `matrix`"))?)?;
    let v_m = if v_m.is_empty() {
        Matrix::zero(&ring, source.generators(), target.generators())
    } else {
        v_m
    };
    match v.get("certificate") {
        Some(w) => {
            let w = matrix_from_json(&ring, w)?;
            let w = if w.is_empty() {
                Matrix::zero(&ring, source.relations().rows(), target.relations().rows())
            } else {
                w
            };
            ModuleMorphism::with_certificate(&source, &target, v_m, w)
        }
        None => ModuleMorphism::new(&source, &target, v_m),
    }
}
