//! Report format and certificate replay.

use std::collections::BTreeMap;

use fpbeh::json::{matrix_from_json, matrix_to_json};
use fpbeh::{Matrix, Ring};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

pub const NO_CERTIFICATE: &str = "none (evaluation-based)";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Value,
    pub oracle_checked: bool,
}

/// Named matrices over one ring and the equations `Σ ±P·Q·… = 0` they satisfy.
#[derive(Clone, Debug)]
pub struct Certificates {
    ring: Ring,
    matrices: BTreeMap<String, Matrix>,
    equations: Vec<String>,
}

impl Certificates {
    pub fn new(ring: &Ring) -> Self {
        Certificates { ring: ring.clone(), matrices: BTreeMap::new(), equations: Vec::new() }
    }

    pub fn matrix(mut self, name: &str, m: &Matrix) -> Self {
        self.matrices.insert(name.to_string(), m.clone());
        self
    }

    pub fn equation(mut self, eq: &str) -> Self {
        self.equations.push(eq.to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        let mats: serde_json::Map<String, Value> =
            self.matrices.iter().map(|(k, m)| (k.clone(), matrix_to_json(m))).collect();
        json!({
            "ring": self.ring.to_string(),
            "matrices": mats,
            "equations": self.equations,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CliError> {
        let ring = fpbeh::json::ring_from_json(v)?;
        let mut out = Certificates::new(&ring);
        if let Some(mats) = v.get("matrices").and_then(Value::as_object) {
            for (k, m) in mats {
                out.matrices.insert(k.clone(), matrix_from_json(&ring, m)?);
            }
        }
        for e in v.get("equations").and_then(Value::as_array).into_iter().flatten() {
            let e = e.as_str().ok_or_else(|| CliError::Input("equations must be strings".into()))?;
            out.equations.push(e.to_string());
        }
        Ok(out)
    }

    /// The equations that fail, with a reason.
    pub fn failures(&self) -> Vec<String> {
        self.equations
            .iter()
            .filter_map(|e| match self.holds(e) {
                Ok(true) => None,
                Ok(false) => Some(format!("{e}: does not hold")),
                Err(msg) => Some(format!("{e}: {msg}")),
            })
            .collect()
    }

    fn holds(&self, eq: &str) -> Result<bool, String> {
        let (lhs, rhs) = eq.split_once('=').ok_or("missing `=`")?;
        if rhs.trim() != "0" {
            return Err("right-hand side must be 0".into());
        }
        let mut total: Option<Matrix> = None;
        for (sign, term) in split_terms(lhs)? {
            let mut acc: Option<Matrix> = None;
            for factor in term.split('*') {
                let factor = factor.trim();
                let (name, t) = match factor.strip_suffix("^T") {
                    Some(n) => (n.trim(), true),
                    None => (factor, false),
                };
                let m = self.matrices.get(name).ok_or_else(|| format!("unknown matrix `{name}`"))?;
                let m = if t { m.transpose() } else { m.clone() };
                acc = Some(match acc {
                    None => m,
                    Some(a) if a.cols() == m.rows() => a.mul(&m),
                    Some(_) => return Err(format!("shape mismatch at `{name}`")),
                });
            }
            let mut m = acc.ok_or("empty term")?;
            if sign < 0 {
                m = m.neg();
            }
            total = Some(match total {
                None => m,
                Some(t) if t.shape() == m.shape() => t.add(&m),
                Some(_) => return Err("terms have different shapes".into()),
            });
        }
        Ok(total.ok_or("empty expression")?.is_zero())
    }
}

fn split_terms(expr: &str) -> Result<Vec<(i32, String)>, String> {
    let mut out = Vec::new();
    let mut sign = 1;
    let mut cur = String::new();
    for c in expr.chars() {
        match c {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    out.push((sign, cur.trim().to_string()));
                } else if !out.is_empty() || c == '+' {
                    return Err("dangling operator".into());
                }
                cur.clear();
                sign = if c == '-' { -1 } else { 1 };
            }
            _ => cur.push(c),
        }
    }
    if cur.trim().is_empty() {
        return Err("dangling operator".into());
    }
    out.push((sign, cur.trim().to_string()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replays_equations() {
        let r = Ring::IntegersMod(4);
        let a = Matrix::from_ints(&r, 1, 1, &[2]);
        let b = Matrix::from_ints(&r, 1, 1, &[2]);
        let c = Certificates::new(&r).matrix("A", &a).matrix("B", &b).equation("A*B = 0").equation("A - B^T = 0");
        assert!(c.failures().is_empty());
        let c = c.equation("A + B*A*B - A = 0").equation("A*C = 0");
        assert_eq!(c.failures().len(), 1);
        let back = Certificates::from_json(&c.to_json()).unwrap();
        assert_eq!(back.failures().len(), 1);
    }

    #[test]
    fn rejects_malformed() {
        let r = Ring::Integers;
        let c = Certificates::new(&r).matrix("A", &Matrix::identity(&r, 2)).equation("A = A").equation("A - = 0");
        assert_eq!(c.failures().len(), 2);
    }
}
