//! Positive primitive formulas `∃x′: B·x + B′·x′ = 0` and what is computed
//! from them: behaviors, presentations, defects, elimination, inclusion and
//! restriction along ring maps.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fpmod::{FpModule, ModuleMorphism, Side};
use crate::json::{matrix_from_json, matrix_to_json, ring_from_json};
use crate::linalg;
use crate::matrix::Matrix;
use crate::oracle::{self, FiniteModule, Tuple};
use crate::poly::{MPoly, Monomial};
use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpFormula {
    b: Matrix,
    bp: Matrix,
    free: Vec<String>,
    bound: Vec<String>,
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl PpFormula {
    pub fn new(b: Matrix, bp: Matrix) -> Result<Self> {
        let (k, l) = (b.cols(), bp.cols());
        Self::with_names(b, bp, default_names("x", k), default_names("y", l))
    }

    pub fn with_names(b: Matrix, bp: Matrix, free: Vec<String>, bound: Vec<String>) -> Result<Self> {
        if b.rows() != bp.rows() {
            return Err(Error::Arity(format!(
                "B has {} rows but B′ has {}",
                b.rows(),
                bp.rows()
            )));
        }
        if b.ring() != bp.ring() {
            return Err(Error::RingMismatch(b.ring().to_string(), bp.ring().to_string()));
        }
        if free.len() != b.cols() || bound.len() != bp.cols() {
            return Err(Error::Arity("variable names do not match the matrix widths".into()));
        }
        Ok(PpFormula { b, bp, free, bound })
    }

    /// The quantifier-free formula `A·x = 0`.
    pub fn quantifier_free(a: Matrix) -> Self {
        let bp = Matrix::zero(a.ring(), a.rows(), 0);
        Self::new(a, bp).expect("consistent shapes")
    }

    pub fn ring(&self) -> &Ring {
        self.b.ring()
    }

    /// Number of free variables `k`.
    pub fn free_count(&self) -> usize {
        self.b.cols()
    }

    pub fn bound_count(&self) -> usize {
        self.bp.cols()
    }

    pub fn equations(&self) -> usize {
        self.b.rows()
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn bp(&self) -> &Matrix {
        &self.bp
    }

    /// `A = (B | B′)`.
    pub fn matrix(&self) -> Matrix {
        self.b.hstack(&self.bp)
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.bp.cols() == 0
    }

    pub fn free_names(&self) -> &[String] {
        &self.free
    }

    pub fn bound_names(&self) -> &[String] {
        &self.bound
    }

    fn require_quantifier_free(&self, op: &str) -> Result<()> {
        if !self.is_quantifier_free() {
            return Err(Error::Input(format!("{op} needs a quantifier-free formula")));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring().to_string(),
            "free": self.free_count(),
            "B": matrix_to_json(&self.b),
            "Bp": matrix_to_json(&self.bp),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = ring_from_json(v)?;
        let k = v
            .get("free")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input("missing integer `free`".into()))? as usize;
        let b = matrix_from_json(&ring, v.get("B").ok_or_else(|| Error::Input("missing `B`".into()))?)?;
        let b = if b.is_empty() && b.cols() != k { Matrix::zero(&ring, b.rows(), k) } else { b };
        if b.cols() != k {
            return Err(Error::Arity(format!("B has {} columns but free = {k}", b.cols())));
        }
        let bp = match v.get("Bp") {
            Some(x) => matrix_from_json(&ring, x)?,
            None => Matrix::zero(&ring, b.rows(), 0),
        };
        let bp = if bp.is_empty() && bp.rows() != b.rows() && bp.cols() == 0 {
            Matrix::zero(&ring, b.rows(), 0)
        } else {
            bp
        };
        Self::new(b, bp)
    }
}

// ---------------------------------------------------------------------------
// text format

fn syntax(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn split_names(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Split a linear expression over formula variables into coefficients.
fn linear_coefficients(ring: &Ring, expr: &MPoly, nring: usize, nvars: usize) -> std::result::Result<Vec<Elem>, String> {
    let mut coeffs: Vec<MPoly> = vec![MPoly::zero(); nvars];
    for (m, c) in expr.terms() {
        let var_part: Vec<(usize, u32)> = m.0[nring..]
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| (i, *e))
            .collect();
        match var_part.as_slice() {
            [] => return Err("equations must be homogeneous in the formula variables".into()),
            [(i, 1)] => {
                let mono = Monomial(m.0[..nring].to_vec());
                coeffs[*i] = coeffs[*i].add(&MPoly::term(c.clone(), mono));
            }
            _ => return Err("equations must be linear in the formula variables".into()),
        }
    }
    coeffs
        .iter()
        .map(|p| {
            ring.from_qpoly(p)
                .ok_or_else(|| format!("coefficient is not an element of {ring}"))
        })
        .collect()
}

/// Parse `ring <r>; free <vars>; [bound <vars>;] <eq>; ...`.
pub fn parse_formula(text: &str) -> Result<PpFormula> {
    // statements with their byte offsets
    let mut stmts: Vec<(usize, &str)> = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ';' {
            stmts.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    stmts.push((start, &text[start..]));
    let stmts: Vec<(usize, &str)> = stmts
        .into_iter()
        .filter_map(|(off, s)| {
            let trimmed = s.trim_start();
            let off = off + (s.len() - trimmed.len());
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some((off, trimmed))
        })
        .collect();
    let mut it = stmts.into_iter().peekable();
    let (off, s) = it.next().ok_or_else(|| syntax(text, 0, "empty formula"))?;
    let ring_text = s
        .strip_prefix("ring")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| syntax(text, off, "expected `ring <ring>`"))?;
    let ring = Ring::parse(ring_text.trim())?;
    let (off, s) = it.next().ok_or_else(|| syntax(text, text.len(), "expected `free <variables>`"))?;
    let free = match s.strip_prefix("free") {
        Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => split_names(rest),
        _ => return Err(syntax(text, off, "expected `free <variables>`")),
    };
    let mut bound = Vec::new();
    if let Some((_, s)) = it.peek() {
        if let Some(rest) = s.strip_prefix("bound") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                bound = split_names(rest);
                it.next();
            }
        }
    }
    let ring_vars = ring.variables();
    let mut all: Vec<String> = ring_vars.clone();
    for v in free.iter().chain(&bound) {
        if !valid_name(v) {
            return Err(syntax(text, off, format!("invalid variable name `{v}`")));
        }
        if all.contains(v) {
            return Err(syntax(text, off, format!("variable `{v}` is declared twice or clashes with the ring")));
        }
        all.push(v.clone());
    }
    let nvars = free.len() + bound.len();
    let mut rows = Vec::new();
    for (off, s) in it {
        let Some((lhs, rhs)) = s.split_once('=') else {
            return Err(syntax(text, off, "expected an equation `... = ...`"));
        };
        let parse_side = |side: &str| {
            crate::expr::parse_polynomial(side, &all).map_err(|e| syntax(text, off, e.to_string()))
        };
        let l = parse_side(lhs)?;
        let r = parse_side(rhs)?;
        let row = linear_coefficients(&ring, &l.sub(&r), ring_vars.len(), nvars)
            .map_err(|msg| syntax(text, off, msg))?;
        rows.push(row);
    }
    let a = Matrix::from_rows(&ring, rows, nvars)?;
    let k = free.len();
    PpFormula::with_names(a.select_cols(0..k), a.select_cols(k..nvars), free, bound)
}

fn format_term(ring: &Ring, c: &Elem, var: &str) -> Option<(bool, String)> {
    if ring.is_zero(c) {
        return None;
    }
    let text = ring.format(c);
    let compound = text.contains(' ');
    let (neg, mag) = match text.strip_prefix('-') {
        Some(m) if !compound => (true, m.to_string()),
        _ => (false, text),
    };
    let body = if mag == "1" {
        var.to_string()
    } else if compound {
        format!("({mag})*{var}")
    } else {
        format!("{mag}*{var}")
    };
    Some((neg, body))
}

/// Canonical text form, one statement per line.
pub fn print_formula(phi: &PpFormula) -> String {
    let ring = phi.ring();
    let mut out = format!("ring {};\nfree {};\n", ring, phi.free.join(", "));
    if !phi.bound.is_empty() {
        out.push_str(&format!("bound {};\n", phi.bound.join(", ")));
    }
    let a = phi.matrix();
    let names: Vec<&String> = phi.free.iter().chain(&phi.bound).collect();
    for i in 0..a.rows() {
        let terms: Vec<(bool, String)> = a
            .row(i)
            .iter()
            .zip(&names)
            .filter_map(|(c, v)| format_term(ring, c, v))
            .collect();
        let mut line = String::new();
        if terms.is_empty() {
            line.push('0');
        }
        for (j, (neg, body)) in terms.into_iter().enumerate() {
            match (j, neg) {
                (0, true) => line.push('-'),
                (0, false) => {}
                (_, true) => line.push_str(" - "),
                (_, false) => line.push_str(" + "),
            }
            line.push_str(&body);
        }
        out.push_str(&line);
        out.push_str(" = 0;\n");
    }
    out
}

impl fmt::Display for PpFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

// ---------------------------------------------------------------------------
// behaviors over finite modules

/// An explicitly enumerated behavior `B(φ, M) ⊆ M^k`.
#[derive(Clone, Debug)]
pub struct BehaviorSet {
    pub ambient: FiniteModule,
    pub k: usize,
    /// Sorted tuples of element ids of the ambient module.
    pub elements: Vec<Tuple>,
}

impl BehaviorSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements as tuples of canonical coordinate vectors.
    pub fn vectors(&self) -> Vec<Vec<Vec<u64>>> {
        self.elements
            .iter()
            .map(|t| t.iter().map(|&i| self.ambient.elements()[i].clone()).collect())
            .collect()
    }
}

/// `B(φ, M)` by enumeration; `M` must live over a finite ring.
pub fn evaluate_behavior(phi: &PpFormula, m: &FpModule, budget: u128) -> Result<BehaviorSet> {
    if phi.ring() != m.ring() {
        return Err(Error::RingMismatch(phi.ring().to_string(), m.ring().to_string()));
    }
    let ambient = FiniteModule::enumerate(m, budget)?;
    evaluate_behavior_in(phi, &ambient, budget)
}

/// `B(φ, M)` for an already enumerated module.
pub fn evaluate_behavior_in(phi: &PpFormula, m: &FiniteModule, budget: u128) -> Result<BehaviorSet> {
    let elements = oracle::enumerate_behavior(&phi.b, &phi.bp, m, budget)?;
    Ok(BehaviorSet {
        ambient: m.clone(),
        k: phi.free_count(),
        elements,
    })
}

// ---------------------------------------------------------------------------
// presentations and defects

/// `coker(A)` for a quantifier-free formula `A·x = 0`.
pub fn malgrange_representative(phi: &PpFormula) -> Result<FpModule> {
    phi.require_quantifier_free("the representing module")?;
    Ok(FpModule::left(phi.b.clone()))
}

/// `α: coker(B | B′) → coker(B′)`, `(x, x′) ↦ x′` on generators.
pub fn malgrange_presentation(phi: &PpFormula) -> ModuleMorphism {
    let ring = phi.ring();
    let (k, l) = (phi.free_count(), phi.bound_count());
    let source = FpModule::left(phi.matrix());
    let target = FpModule::left(phi.bp.clone());
    let v = Matrix::zero(ring, k, l).vstack(&Matrix::identity(ring, l));
    let w = Matrix::identity(ring, phi.equations());
    ModuleMorphism::with_certificate(&source, &target, v, w).expect("projection onto the bound variables")
}

/// `R^{k×1} → coker(B′: R^{(n−k)×1} → R^{m×1})`, `e_j ↦ column j of B`, as
/// right modules; its kernel is the solution set of `φ` in `R` itself.
pub fn copresent_formula(phi: &PpFormula) -> ModuleMorphism {
    let ring = phi.ring();
    let source = FpModule::free(ring, phi.free_count()).with_side(Side::Right);
    let target = FpModule::right(phi.bp.clone());
    ModuleMorphism::new(&source, &target, phi.b.transpose()).expect("free source")
}

/// `R^{1×k} / { y·B | y·B′ = 0 }`.
pub fn defect_of_formula(phi: &PpFormula) -> FpModule {
    FpModule::left(eliminated_matrix(phi))
}

fn eliminated_matrix(phi: &PpFormula) -> Matrix {
    linalg::left_kernel(&phi.bp).mul(&phi.b)
}

/// `{ x ∈ R^{k×1} | ∃x′: B·x + B′·x′ = 0 }` as a right module, together
/// with the columns generating it inside `R^{k×1}`.
pub fn covdefect_of_formula(phi: &PpFormula) -> (FpModule, Matrix) {
    let k = phi.free_count();
    let p = linalg::right_kernel(&phi.matrix()).select_rows(0..k);
    let rel = linalg::left_kernel(&p.transpose());
    (FpModule::from_relations(Side::Right, rel), p)
}

/// The quantifier-free formula with rows `left_kernel(B′)·B`; with
/// `reduce` the rows are replaced by the canonical row form.
pub fn eliminate_latents(phi: &PpFormula, reduce: bool) -> PpFormula {
    let mut a = eliminated_matrix(phi);
    if reduce {
        a = linalg::row_basis(&a);
    }
    let bp = Matrix::zero(phi.ring(), a.rows(), 0);
    PpFormula::with_names(a, bp, phi.free.clone(), Vec::new()).expect("consistent shapes")
}

/// `Some(X)` with `X·A₁ = A₂` when `B(ψ₁, −) ⊆ B(ψ₂, −)` on fp-injective
/// cogenerators; `None` otherwise.
pub fn behavior_included(psi1: &PpFormula, psi2: &PpFormula) -> Result<Option<Matrix>> {
    psi1.require_quantifier_free("inclusion")?;
    psi2.require_quantifier_free("inclusion")?;
    if psi1.free_count() != psi2.free_count() {
        return Err(Error::Arity(format!(
            "formulas have {} and {} free variables",
            psi1.free_count(),
            psi2.free_count()
        )));
    }
    linalg::solve_left(&psi1.b, &psi2.b)
}

// ---------------------------------------------------------------------------
// change of rings

/// A surjective ring map between shipped rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingMap {
    Identity(Ring),
    /// `ZZ → ZZ/n`, `ZZ → GF(p)`, `ZZ/n → ZZ/m` (`m | n`), `ZZ/n → GF(p)`.
    Reduction { from: Ring, to: Ring },
    /// `K[x] → K[x]/(x − a) ≅ K`.
    Evaluation { from: Ring, at: Elem },
}

impl RingMap {
    /// The canonical surjection between two rings, if there is one.
    pub fn canonical(from: &Ring, to: &Ring) -> Result<RingMap> {
        if from == to {
            return Ok(RingMap::Identity(from.clone()));
        }
        let modulus = |r: &Ring| r.modulus();
        let ok = match (from, to) {
            (Ring::Integers, Ring::IntegersMod(_) | Ring::PrimeField(_)) => true,
            (Ring::IntegersMod(n), Ring::IntegersMod(_) | Ring::PrimeField(_)) => n % modulus(to).unwrap() == 0,
            (Ring::PrimeField(p), Ring::IntegersMod(q)) => p == q,
            _ => false,
        };
        if ok {
            Ok(RingMap::Reduction {
                from: from.clone(),
                to: to.clone(),
            })
        } else {
            Err(Error::Unsupported {
                op: "canonical ring map to the requested target",
                ring: from.to_string(),
            })
        }
    }

    /// `K[x] → K`, `x ↦ a`.
    pub fn evaluation(from: &Ring, at: Elem) -> Result<RingMap> {
        match from {
            Ring::Univariate { .. } => Ok(RingMap::Evaluation { from: from.clone(), at }),
            _ => Err(Error::Unsupported {
                op: "evaluation map (univariate rings only)",
                ring: from.to_string(),
            }),
        }
    }

    pub fn source(&self) -> &Ring {
        match self {
            RingMap::Identity(r) => r,
            RingMap::Reduction { from, .. } | RingMap::Evaluation { from, .. } => from,
        }
    }

    pub fn target(&self) -> Ring {
        match self {
            RingMap::Identity(r) => r.clone(),
            RingMap::Reduction { to, .. } => to.clone(),
            RingMap::Evaluation { from: Ring::Univariate { base, .. }, .. } => base.ring(),
            RingMap::Evaluation { .. } => unreachable!(),
        }
    }

    pub fn apply(&self, e: &Elem) -> Elem {
        match self {
            RingMap::Identity(_) => e.clone(),
            RingMap::Reduction { to, .. } => match e {
                Elem::Int(x) => to.from_int(x),
                _ => unreachable!(),
            },
            RingMap::Evaluation { from: Ring::Univariate { base, .. }, at } => match e {
                Elem::Poly(p) => p.eval(at, &base.ring()),
                _ => unreachable!(),
            },
            RingMap::Evaluation { .. } => unreachable!(),
        }
    }

    pub fn apply_matrix(&self, m: &Matrix) -> Matrix {
        m.map_into(&self.target(), |e| self.apply(e))
    }
}

/// Entrywise image of a formula along a ring map.
pub fn restrict_formula(sigma: &RingMap, phi: &PpFormula) -> Result<PpFormula> {
    if phi.ring() != sigma.source() {
        return Err(Error::RingMismatch(phi.ring().to_string(), sigma.source().to_string()));
    }
    PpFormula::with_names(
        sigma.apply_matrix(&phi.b),
        sigma.apply_matrix(&phi.bp),
        phi.free.clone(),
        phi.bound.clone(),
    )
}
