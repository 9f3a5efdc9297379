//! Subcommand implementations. Each one maps parsed inputs to a result
//! payload, certificates and a verdict.

use std::collections::HashSet;

use fpbeh::beh::{self, to_behavior, AbstractBehavior, Backend, SignalSpace, Verdict};
use fpbeh::fpfun::{agj_dual, tensor_morphism, FpFunctor};
use fpbeh::fpmod::{auslander_transpose, controllable_part_module, ext_against_ring, FpModule};
use fpbeh::json::{matrix_to_json, module_from_json, module_to_json, morphism_to_json};
use fpbeh::linalg;
use fpbeh::oracle::{enumerate_behavior, enumerate_homs, module_order, FiniteModule, DEFAULT_BUDGET};
use fpbeh::ppform::{
    copresent_formula, covdefect_of_formula, defect_of_formula, eliminate_latents, evaluate_behavior,
    evaluate_behavior_in, malgrange_presentation, malgrange_representative, print_formula, restrict_formula,
    PpFormula, RingMap,
};
use fpbeh::{Matrix, Ring};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{Certificates, Report, NO_CERTIFICATE};

pub const COMMANDS: &[&str] = &[
    "eval",
    "eliminate",
    "defect",
    "covdefect",
    "malgrange",
    "agj-dual",
    "include",
    "controllable",
    "observable",
    "transport",
    "check",
];

type Res<T> = Result<T, CliError>;

#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub formulas: Vec<PpFormula>,
    pub module: Option<FpModule>,
    pub signal: Option<SignalSpace>,
    pub functor: Option<FpFunctor>,
    pub ring: Option<Ring>,
    pub reduce: bool,
    pub oracle: bool,
    pub budget: Option<u128>,
}

impl Inputs {
    pub fn to_json(&self) -> Value {
        let mut v = json!({});
        if !self.formulas.is_empty() {
            v["formulas"] = Value::Array(self.formulas.iter().map(PpFormula::to_json).collect());
        }
        if let Some(m) = &self.module {
            v["module"] = module_to_json(m);
        }
        if let Some(s) = &self.signal {
            v["signal"] = s.to_json();
        }
        if let Some(f) = &self.functor {
            v["functor"] = f.to_json();
        }
        if let Some(r) = &self.ring {
            v["ring"] = json!(r.to_string());
        }
        if let Some(b) = self.budget {
            v["budget"] = json!(u64::try_from(b).unwrap_or(u64::MAX));
        }
        v["reduce"] = json!(self.reduce);
        v["oracle"] = json!(self.oracle);
        v
    }

    pub fn from_json(v: &Value) -> Res<Self> {
        let formulas = match v.get("formulas") {
            Some(Value::Array(a)) => a.iter().map(PpFormula::from_json).collect::<Result<_, _>>()?,
            _ => Vec::new(),
        };
        Ok(Inputs {
            formulas,
            module: v.get("module").map(module_from_json).transpose()?,
            signal: v.get("signal").map(SignalSpace::from_json).transpose()?,
            functor: v.get("functor").map(FpFunctor::from_json).transpose()?,
            ring: v.get("ring").and_then(Value::as_str).map(Ring::parse).transpose()?,
            budget: v.get("budget").and_then(Value::as_u64).map(u128::from),
            reduce: v.get("reduce").and_then(Value::as_bool).unwrap_or(false),
            oracle: v.get("oracle").and_then(Value::as_bool).unwrap_or(false),
        })
    }

    fn budget(&self) -> u128 {
        self.budget
            .or_else(|| self.signal.as_ref().map(SignalSpace::budget))
            .unwrap_or(DEFAULT_BUDGET)
    }

    fn formula(&self) -> Res<&PpFormula> {
        self.formulas
            .first()
            .ok_or_else(|| CliError::Input("this command needs --formula".into()))
    }

    fn functor(&self) -> Res<FpFunctor> {
        match (&self.functor, self.formulas.first()) {
            (Some(f), _) => Ok(f.clone()),
            (None, Some(phi)) => Ok(FpFunctor::behavior_functor(phi)),
            _ => Err(CliError::Input("this command needs --formula or --functor".into())),
        }
    }

    fn space(&self, ring: &Ring) -> Res<SignalSpace> {
        let s = match &self.signal {
            Some(s) => s.clone(),
            None if ring.is_finite() => SignalSpace::self_injective(ring, self.budget())?,
            None => SignalSpace::injective_cogenerator(ring, None),
        };
        if s.ring() != ring {
            return Err(CliError::Input(format!("signal space is over {}, data over {ring}", s.ring())));
        }
        Ok(s)
    }

    fn behavior(&self) -> Res<AbstractBehavior> {
        let g = self.functor()?;
        let space = self.space(g.ring())?;
        Ok(to_behavior(&g, &space)?)
    }
}

/// What a command produced, before it is wrapped into a report.
pub struct Outcome {
    pub result: Value,
    pub certificates: Value,
    pub oracle_checked: bool,
    pub negative: bool,
}

impl Outcome {
    fn new(result: Value, certs: Option<Certificates>) -> Self {
        Outcome {
            result,
            certificates: certs.map_or_else(|| json!(NO_CERTIFICATE), |c| c.to_json()),
            oracle_checked: false,
            negative: false,
        }
    }

    /// Records a brute-force cross-check; a disagreement is a negative verdict.
    fn oracle(mut self, agrees: Option<bool>) -> Self {
        if let Some(ok) = agrees {
            self.oracle_checked = true;
            self.result["oracle_agrees"] = json!(ok);
            self.negative |= !ok;
        }
        self
    }

    fn negative(mut self, neg: bool) -> Self {
        self.negative |= neg;
        self
    }
}

pub fn run(command: &str, inp: &Inputs, verify: Option<&Report>) -> Res<Outcome> {
    match command {
        "eval" => eval(inp),
        "eliminate" => eliminate(inp),
        "defect" => defect(inp),
        "covdefect" => covdefect(inp),
        "malgrange" => malgrange(inp),
        "agj-dual" => dual(inp),
        "include" => include(inp),
        "controllable" => controllable(inp),
        "observable" => observable(inp),
        "transport" => transport(inp),
        "check" => match verify {
            Some(r) => verify_report(r),
            None => crate::suite::run(inp),
        },
        other => Err(CliError::Input(format!("unknown command `{other}`"))),
    }
}

pub fn report(command: &str, inp: &Inputs, out: &Outcome) -> Report {
    Report {
        command: command.to_string(),
        inputs: inp.to_json(),
        result: out.result.clone(),
        certificates: out.certificates.clone(),
        oracle_checked: out.oracle_checked,
    }
}

// ---------------------------------------------------------------------------
// oracle helpers

fn ring_table(ring: &Ring, budget: u128) -> Option<FiniteModule> {
    if !ring.is_finite() {
        return None;
    }
    FiniteModule::enumerate(&FpModule::free(ring, 1), budget).ok()
}

fn solutions(phi: &PpFormula, m: &FiniteModule, budget: u128) -> Res<HashSet<Vec<usize>>> {
    Ok(enumerate_behavior(phi.b(), phi.bp(), m, budget)?.into_iter().collect())
}

fn when_oracle<T>(inp: &Inputs, ring: &Ring, f: impl FnOnce(&FiniteModule) -> Res<T>) -> Res<Option<T>> {
    if !inp.oracle {
        return Ok(None);
    }
    match ring_table(ring, inp.budget()) {
        Some(t) => f(&t).map(Some),
        None => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// formula commands

fn eval(inp: &Inputs) -> Res<Outcome> {
    let phi = inp.formula()?;
    let set = match &inp.signal {
        Some(s) => {
            let t = s
                .table()
                .ok_or_else(|| CliError::Input("eval needs a finite signal space".into()))?;
            evaluate_behavior_in(phi, t, inp.budget())?
        }
        None => {
            let m = inp.module.clone().unwrap_or_else(|| FpModule::free(phi.ring(), 1));
            evaluate_behavior(phi, &m, inp.budget())?
        }
    };
    let mut out = Outcome::new(json!({"count": set.len(), "solutions": set.vectors()}), None);
    out.oracle_checked = true;
    Ok(out)
}

fn elimination_certificates(phi: &PpFormula, name: &str, result: &Matrix) -> Certificates {
    let y = linalg::left_kernel(phi.bp());
    Certificates::new(phi.ring())
        .matrix("B", phi.b())
        .matrix("Bp", phi.bp())
        .matrix("Y", &y)
        .matrix(name, result)
        .equation("Y*Bp = 0")
        .equation(&format!("Y*B - {name} = 0"))
}

fn eliminate(inp: &Inputs) -> Res<Outcome> {
    let phi = inp.formula()?;
    let raw = eliminate_latents(phi, false);
    let out = if inp.reduce { eliminate_latents(phi, true) } else { raw.clone() };
    let mut certs = elimination_certificates(phi, "E", raw.b());
    if inp.reduce {
        let (e, r) = (raw.b(), out.b());
        let x = linalg::solve_left(e, r)?.expect("reduced rows lie in the row module");
        let z = linalg::solve_left(r, e)?.expect("reduction keeps the row module");
        certs = certs
            .matrix("R", r)
            .matrix("X", &x)
            .matrix("Z", &z)
            .equation("X*E - R = 0")
            .equation("Z*R - E = 0");
    }
    let agrees = when_oracle(inp, phi.ring(), |t| {
        Ok(solutions(phi, t, inp.budget())? == solutions(&out, t, inp.budget())?)
    })?;
    let result = json!({
        "matrix": matrix_to_json(out.b()),
        "formula": out.to_json(),
        "text": print_formula(&out),
    });
    Ok(Outcome::new(result, Some(certs)).oracle(agrees))
}

fn defect(inp: &Inputs) -> Res<Outcome> {
    let phi = inp.formula()?;
    let d = defect_of_formula(phi);
    let certs = elimination_certificates(phi, "D", d.relations());
    let agrees = when_oracle(inp, phi.ring(), |t| {
        Ok(enumerate_homs(&d, t, inp.budget())?.len() == solutions(phi, t, inp.budget())?.len())
    })?;
    let result = json!({"module": module_to_json(&d), "invariant_factors": invariants(&d)});
    Ok(Outcome::new(result, Some(certs)).oracle(agrees))
}

fn covdefect(inp: &Inputs) -> Res<Outcome> {
    let phi = inp.formula()?;
    let ring = phi.ring();
    let (c, p) = covdefect_of_formula(phi);
    let a = phi.matrix();
    let s = linalg::right_kernel(&a);
    let k = phi.free_count();
    let proj = Matrix::identity(ring, k).hstack(&Matrix::zero(ring, k, a.cols() - k));
    let certs = Certificates::new(ring)
        .matrix("A", &a)
        .matrix("S", &s)
        .matrix("Proj", &proj)
        .matrix("P", &p)
        .matrix("Rel", c.relations())
        .equation("A*S = 0")
        .equation("Proj*S - P = 0")
        .equation("Rel*P^T = 0");
    let agrees = when_oracle(inp, ring, |t| {
        Ok(module_order(&c, inp.budget())? == solutions(phi, t, inp.budget())?.len())
    })?;
    let result = json!({
        "module": module_to_json(&c),
        "generators": matrix_to_json(&p),
        "copresentation": morphism_to_json(&copresent_formula(phi)),
    });
    Ok(Outcome::new(result, Some(certs)).oracle(agrees))
}

fn malgrange(inp: &Inputs) -> Res<Outcome> {
    let phi = inp.formula()?;
    let alpha = malgrange_presentation(phi);
    let certs = Certificates::new(phi.ring())
        .matrix("A", &phi.matrix())
        .matrix("Bp", phi.bp())
        .matrix("V", alpha.matrix())
        .matrix("W", alpha.certificate())
        .equation("A*V - W*Bp = 0");
    let mut result = json!({"presentation": morphism_to_json(&alpha)});
    if phi.is_quantifier_free() {
        result["module"] = module_to_json(&malgrange_representative(phi)?);
    }
    let agrees = when_oracle(inp, phi.ring(), |t| {
        let g = FpFunctor::behavior_functor(phi).evaluate_finite(t, inp.budget())?;
        Ok(g.order() == solutions(phi, t, inp.budget())?.len())
    })?;
    Ok(Outcome::new(result, Some(certs)).oracle(agrees))
}

fn include(inp: &Inputs) -> Res<Outcome> {
    if inp.formulas.len() != 2 {
        return Err(CliError::Input("include needs --formula twice".into()));
    }
    let latents = inp.formulas.iter().any(|p| !p.is_quantifier_free());
    let p1 = eliminate_latents(&inp.formulas[0], inp.reduce);
    let p2 = eliminate_latents(&inp.formulas[1], inp.reduce);
    let x = fpbeh::ppform::behavior_included(&p1, &p2)?;
    let mut result = json!({"included": x.is_some()});
    if latents {
        result["scope"] = json!("valid for fp-injective signal spaces");
    }
    let certs = x.as_ref().map(|x| {
        Certificates::new(p1.ring())
            .matrix("A1", p1.b())
            .matrix("A2", p2.b())
            .matrix("X", x)
            .equation("X*A1 - A2 = 0")
    });
    let agrees = when_oracle(inp, p1.ring(), |t| {
        let (s1, s2) = (solutions(&p1, t, inp.budget())?, solutions(&p2, t, inp.budget())?);
        Ok(s1.is_subset(&s2) == x.is_some())
    })?;
    Ok(Outcome::new(result, certs).negative(x.is_none()).oracle(agrees))
}

// ---------------------------------------------------------------------------
// functors and behaviors

fn dual(inp: &Inputs) -> Res<Outcome> {
    let g = inp.functor()?;
    let ring = g.ring().clone();
    let (d, incl) = tensor_morphism(g.presentation()).kernel();
    let t = incl.target();
    let diff = incl.u().mul(d.v()).sub(&t.v().mul(incl.w()));
    let h = linalg::solve_left(d.ap(), &diff)?.expect("inclusion is natural");
    let x = linalg::solve_left(d.a(), &t.a().mul(incl.u()))?.expect("inclusion is well defined");
    let y = linalg::solve_left(d.ap(), &t.ap().mul(incl.w()))?.expect("witness is well defined");
    let certs = Certificates::new(&ring)
        .matrix("DA", d.a())
        .matrix("DAp", d.ap())
        .matrix("DV", d.v())
        .matrix("DC", d.presentation().certificate())
        .matrix("TA", t.a())
        .matrix("TAp", t.ap())
        .matrix("TV", t.v())
        .matrix("U", incl.u())
        .matrix("W", incl.w())
        .matrix("H", &h)
        .matrix("X", &x)
        .matrix("Y", &y)
        .equation("DA*DV - DC*DAp = 0")
        .equation("TA*U - X*DA = 0")
        .equation("TAp*W - Y*DAp = 0")
        .equation("U*DV - TV*W - H*DAp = 0");
    let agrees = when_oracle(inp, &ring, |t| {
        let dd = agj_dual(&d);
        Ok(g.evaluate_finite(t, inp.budget())?.order() == dd.evaluate_finite(t, inp.budget())?.order())
    })?;
    let result = json!({"functor": d.to_json(), "inclusion": incl.to_json()});
    Ok(Outcome::new(result, Some(certs)).oracle(agrees))
}

fn verdict_json(v: Verdict) -> Value {
    serde_json::to_value(v).expect("plain enum")
}

fn controllable(inp: &Inputs) -> Res<Outcome> {
    if inp.functor.is_none() && inp.formulas.is_empty() {
        return controllable_module(inp);
    }
    let b = inp.behavior()?;
    let verdict = beh::is_controllable(&b)?;
    let finite = beh::is_finitely_controllable(&b)?;
    let (part, _) = beh::controllable_part(&b)?;
    let mut result = json!({
        "controllable": verdict_json(verdict),
        "finitely_controllable": verdict_json(finite),
        "controllable_part": part.functor().to_json(),
        "backend": b.space().backend(),
    });
    if b.space().backend() == Backend::Finite && !b.space().is_injective_cogenerator() && !b.space().is_flat() {
        result["caveat"] = json!("subgroup of the controllable part");
    }
    Ok(Outcome::new(result, None).negative(verdict == Verdict::Fails))
}

fn invariants(m: &FpModule) -> Value {
    match m.invariant_factors() {
        Ok(f) => json!(f
            .iter()
            .filter(|e| !m.ring().is_unit(e))
            .map(|e| m.ring().format(e))
            .collect::<Vec<_>>()),
        Err(_) => Value::Null,
    }
}

fn controllable_module(inp: &Inputs) -> Res<Outcome> {
    let n = inp
        .module
        .as_ref()
        .ok_or_else(|| CliError::Input("controllable needs --module, --formula or --functor".into()))?;
    let ext = ext_against_ring(&auslander_transpose(n), 1)?;
    let ok = ext.is_zero();
    let (part, pi) = controllable_part_module(n);
    let certs = Certificates::new(n.ring())
        .matrix("A", n.relations())
        .matrix("Pi", pi.matrix())
        .matrix("C", pi.certificate())
        .matrix("Ac", part.relations())
        .equation("A*Pi - C*Ac = 0");
    let result = json!({
        "controllable": ok,
        "ext1_invariants": invariants(&ext),
        "controllable_part": module_to_json(&part),
    });
    Ok(Outcome::new(result, Some(certs)).negative(!ok))
}

fn observable(inp: &Inputs) -> Res<Outcome> {
    let b = inp.behavior()?;
    let verdict = beh::is_observable(&b)?;
    let finite = beh::is_finitely_observable(&b)?;
    let (quot, _) = beh::observable_quotient(&b)?;
    let result = json!({
        "observable": verdict_json(verdict),
        "finitely_observable": verdict_json(finite),
        "observable_quotient": quot.functor().to_json(),
        "backend": b.space().backend(),
    });
    Ok(Outcome::new(result, None).negative(verdict == Verdict::Fails))
}

fn transport(inp: &Inputs) -> Res<Outcome> {
    match &inp.ring {
        Some(target) => change_rings(inp, target),
        None => {
            let b = inp.behavior()?;
            let result = match b.space().backend() {
                Backend::Finite => json!({"backend": "finite", "order": b.underlying_group()?.order()}),
                Backend::InjectiveCogenerator => {
                    json!({"backend": "injective-cogenerator", "module": module_to_json(&beh::duality_transport(&b)?)})
                }
                Backend::Flat => json!({"backend": "flat", "module": module_to_json(&beh::flat_transport(&b)?)}),
            };
            Ok(Outcome::new(result, None))
        }
    }
}

/// `target` viewed as a module over the source ring, when both are finite
/// quotients of `ZZ`.
fn restricted_table(source: &Ring, target: &Ring, budget: u128) -> Res<Option<FiniteModule>> {
    let Some(m) = target.modulus() else { return Ok(None) };
    let cyc = FpModule::left(Matrix::from_ints(source, 1, 1, &[m as i64]));
    Ok(match source {
        Ring::Integers => Some(FiniteModule::enumerate_with_exponent(&cyc, m, budget)?),
        Ring::IntegersMod(_) | Ring::PrimeField(_) => Some(FiniteModule::enumerate(&cyc, budget)?),
        _ => None,
    })
}

fn change_rings(inp: &Inputs, target: &Ring) -> Res<Outcome> {
    let phi = inp.formula()?;
    let sigma = RingMap::canonical(phi.ring(), target)?;
    let psi = restrict_formula(&sigma, phi)?;
    let mut agrees = None;
    if inp.oracle {
        if let (Some(tr), Some(ts)) = (ring_table(target, inp.budget()), restricted_table(phi.ring(), target, inp.budget())?) {
            let vals = |t: &FiniteModule, p: &PpFormula| -> Res<Vec<Vec<Vec<u64>>>> {
                Ok(enumerate_behavior(p.b(), p.bp(), t, inp.budget())?
                    .iter()
                    .map(|x| x.iter().map(|&e| t.elements()[e].clone()).collect())
                    .collect())
            };
            agrees = Some(vals(&ts, phi)? == vals(&tr, &psi)?);
        }
    }
    let result = json!({"formula": psi.to_json(), "text": print_formula(&psi)});
    Ok(Outcome::new(result, None).oracle(agrees))
}

// ---------------------------------------------------------------------------
// replay

/// Variable names are not part of the echoed inputs.
fn strip_names(v: &Value) -> Value {
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        m.remove("text");
    }
    v
}

fn verify_report(r: &Report) -> Res<Outcome> {
    if !COMMANDS.contains(&r.command.as_str()) || r.command == "check" {
        return Err(CliError::Input(format!("cannot verify a `{}` report", r.command)));
    }
    let mut failures = Vec::new();
    let mut equations = 0;
    if r.certificates.is_object() {
        let c = Certificates::from_json(&r.certificates)?;
        equations = r.certificates["equations"].as_array().map_or(0, Vec::len);
        failures.extend(c.failures());
    } else if r.certificates != json!(NO_CERTIFICATE) {
        failures.push("unrecognized certificate field".to_string());
    }
    let inp = Inputs::from_json(&r.inputs)?;
    let again = run(&r.command, &inp, None)?;
    if strip_names(&again.result) != strip_names(&r.result) {
        failures.push("result differs when recomputed from the echoed inputs".to_string());
    }
    let ok = failures.is_empty();
    let result = json!({"verified": ok, "command": r.command, "equations": equations, "failures": failures});
    Ok(Outcome::new(result, None).negative(!ok))
}
