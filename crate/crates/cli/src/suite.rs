//! `check` without a report: quick invariant sweeps on random instances.

use fpbeh::fpfun::agj_dual;
use fpbeh::oracle::{enumerate_behavior, enumerate_homs, DEFAULT_BUDGET};
use fpbeh::ppform::eliminate_latents;
use fpbeh::{random, Ring};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::commands::{run as run_command, Inputs, Outcome};
use crate::error::CliError;
use crate::report::Certificates;

const CASES: usize = 40;

struct Suite {
    name: &'static str,
    cases: usize,
    failures: usize,
}

impl Suite {
    fn json(&self) -> Value {
        json!({"name": self.name, "cases": self.cases, "failures": self.failures})
    }
}

fn sweep(name: &'static str, mut case: impl FnMut(usize) -> Result<bool, CliError>) -> Result<Suite, CliError> {
    let mut failures = 0;
    for i in 0..CASES {
        if !case(i)? {
            failures += 1;
        }
    }
    Ok(Suite { name, cases: CASES, failures })
}

fn replays(command: &str, inp: &Inputs) -> Result<bool, CliError> {
    let out = run_command(command, inp, None)?;
    Ok(Certificates::from_json(&out.certificates)?.failures().is_empty())
}

pub fn run(inp: &Inputs) -> Result<Outcome, CliError> {
    let ring = inp.ring.clone().unwrap_or(Ring::IntegersMod(4));
    let budget = inp.budget.unwrap_or(DEFAULT_BUDGET);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut suites = Vec::new();
    suites.push(sweep("elimination certificates replay", |_| {
        let k = rng.gen_range(1..=3);
        let phi = random::formula(&ring, rng.gen_range(1..=3), k, rng.gen_range(0..=2), &mut rng);
        replays("eliminate", &Inputs { formulas: vec![phi], ..Inputs::default() })
    })?);
    suites.push(sweep("duality witness replays", |_| {
        let g = random::functor(&ring, 2, &mut rng);
        replays("agj-dual", &Inputs { functor: Some(g), ..Inputs::default() })
    })?);
    if let Some(table) = fpbeh::oracle::FiniteModule::enumerate(&fpbeh::fpmod::FpModule::free(&ring, 1), budget).ok() {
        suites.push(sweep("hom enumeration matches solution sets", |_| {
            let phi = random::formula(&ring, rng.gen_range(1..=3), rng.gen_range(1..=3), 0, &mut rng);
            let n = fpbeh::ppform::malgrange_representative(&phi)?;
            let homs = enumerate_homs(&n, &table, budget)?;
            let sols = enumerate_behavior(phi.b(), phi.bp(), &table, budget)?;
            Ok(homs == sols)
        })?);
        suites.push(sweep("elimination preserves solution sets", |_| {
            let phi = random::formula(&ring, rng.gen_range(1..=3), rng.gen_range(1..=2), rng.gen_range(1..=2), &mut rng);
            let psi = eliminate_latents(&phi, false);
            Ok(enumerate_behavior(phi.b(), phi.bp(), &table, budget)?
                == enumerate_behavior(psi.b(), psi.bp(), &table, budget)?)
        })?);
        suites.push(sweep("double dual has the same values", |_| {
            let g = random::functor(&ring, 2, &mut rng);
            let dd = agj_dual(&agj_dual(&g));
            Ok(g.evaluate_finite(&table, budget)?.order() == dd.evaluate_finite(&table, budget)?.order())
        })?);
    }
    let failed = suites.iter().any(|s| s.failures > 0);
    let result = json!({
        "ring": ring.to_string(),
        "passed": !failed,
        "suites": suites.iter().map(Suite::json).collect::<Vec<_>>(),
    });
    Ok(Outcome { result, certificates: json!(crate::report::NO_CERTIFICATE), oracle_checked: true, negative: failed })
}
