mod commands;
mod error;
mod report;
mod suite;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fpbeh::beh::SignalSpace;
use fpbeh::fpfun::FpFunctor;
use fpbeh::json::module_from_json;
use fpbeh::ppform::{parse_formula, PpFormula};
use fpbeh::Ring;
use serde_json::Value;

use commands::Inputs;
use error::CliError;
use report::Report;

/// Pp formulas, finitely presented functors and abstract behaviors.
///
/// Every run prints one JSON report on standard output. Exit codes: 0
/// success, 1 negative verdict, 2 input error, 3 budget exceeded.
#[derive(Parser, Debug)]
#[command(name = "fpbeh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ring string, e.g. ZZ/4; the target ring for `transport`, the test ring for `check`.
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Formula file, JSON or text; `include` takes it twice.
    #[arg(long, global = true)]
    formula: Vec<PathBuf>,

    /// Module file (JSON).
    #[arg(long, global = true)]
    module: Option<PathBuf>,

    /// Signal space file (JSON).
    #[arg(long, global = true)]
    signal: Option<PathBuf>,

    /// Functor file (JSON).
    #[arg(long, global = true)]
    functor: Option<PathBuf>,

    /// Maximum number of tuples an enumeration may visit.
    #[arg(long, global = true)]
    budget: Option<u128>,

    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Cross-check against brute-force enumeration over the ring.
    #[arg(long, global = true)]
    oracle: bool,

    /// Row-reduce eliminated formulas.
    #[arg(long, global = true)]
    reduce: bool,

    /// Print a readable summary before the JSON report.
    #[arg(long, global = true)]
    human: bool,

    /// Report to re-check (`check` only).
    #[arg(long, global = true)]
    verify: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Enumerate the solution set of a formula in a finite module.
    Eval,
    /// Eliminate the bound variables of a formula.
    Eliminate,
    /// Contravariant defect of a formula.
    Defect,
    /// Covariant defect of a formula.
    Covdefect,
    /// Module presentation of a formula.
    Malgrange,
    /// Dual of a functor.
    AgjDual,
    /// Inclusion of solution sets between two formulas.
    Include,
    /// Controllability of a module or a behavior.
    Controllable,
    /// Observability of a behavior.
    Observable,
    /// Change of rings, or transport of a behavior to its module.
    Transport,
    /// Run invariant sweeps, or re-check a report with --verify.
    Check,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Eliminate => "eliminate",
            Command::Defect => "defect",
            Command::Covdefect => "covdefect",
            Command::Malgrange => "malgrange",
            Command::AgjDual => "agj-dual",
            Command::Include => "include",
            Command::Controllable => "controllable",
            Command::Observable => "observable",
            Command::Transport => "transport",
            Command::Check => "check",
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_formula(path: &Path) -> Result<PpFormula, CliError> {
    let text = read(path)?;
    let phi = if text.trim_start().starts_with('{') {
        PpFormula::from_json(&serde_json::from_str(&text)?)?
    } else {
        parse_formula(&text)?
    };
    Ok(phi)
}

fn inputs(cli: &Cli) -> Result<Inputs, CliError> {
    Ok(Inputs {
        formulas: cli.formula.iter().map(|p| load_formula(p)).collect::<Result<_, _>>()?,
        module: cli.module.as_deref().map(read_json).transpose()?.map(|v| module_from_json(&v)).transpose()?,
        signal: cli.signal.as_deref().map(read_json).transpose()?.map(|v| SignalSpace::from_json(&v)).transpose()?,
        functor: cli.functor.as_deref().map(read_json).transpose()?.map(|v| FpFunctor::from_json(&v)).transpose()?,
        ring: cli.ring.as_deref().map(Ring::parse).transpose()?,
        reduce: cli.reduce,
        oracle: cli.oracle,
        budget: cli.budget,
    })
}

fn summary(r: &Report) -> String {
    let mut s = format!("command: {}\n", r.command);
    if let Value::Object(m) = &r.result {
        for (k, v) in m {
            let shown = match v {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("  {k}: {shown}\n"));
        }
    }
    s.push_str(&format!("  oracle checked: {}\n", r.oracle_checked));
    s
}

fn execute(cli: &Cli) -> Result<(Report, bool), CliError> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    }
    let name = cli.command.name();
    let inp = inputs(cli)?;
    let verify = match (&cli.verify, cli.command) {
        (Some(p), Command::Check) => Some(serde_json::from_value::<Report>(read_json(p)?)?),
        (Some(_), _) => return Err(CliError::Input("--verify only applies to `check`".into())),
        (None, _) => None,
    };
    let out = commands::run(name, &inp, verify.as_ref())?;
    let mut report = commands::report(name, &inp, &out);
    if let Some(v) = verify {
        report.inputs = serde_json::json!({"report": v});
    }
    Ok((report, out.negative))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((report, negative)) => {
            if cli.human {
                print!("{}", summary(&report));
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            }
            ExitCode::from(if negative { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("fpbeh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
