//! Command-line interface.
//!
//! Exit statuses: 0 pass, 1 verification failure, 2 invalid input,
//! 3 internal error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use yukawa_cli::report::{ErrorReport, SPEC_VERSION};
use yukawa_cli::{
    cmd_higgs, cmd_hodge_numbers, cmd_jacobian_dims, cmd_oracle, cmd_sweep, cmd_verify,
    parse_rational_list, CliError, Scenario, ScenarioFile, DEFAULT_BOUND, DEFAULT_SEED,
    DEFAULT_TRIALS,
};

#[derive(Parser)]
#[command(
    name = "yukawa",
    version,
    about = "Exact coupling-length computations for cyclic-cover Calabi-Yau families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hodge-number tables of the weight-one and weight-n structures
    HodgeNumbers(Common),
    /// Graded-piece dimensions, bases and the relation-matrix rank
    JacobianDims(Common),
    /// Higgs matrix for an explicit lambda, or a seeded surjectivity sweep
    Higgs(Common),
    /// Full verification pipeline with a coupling-length certificate
    Verify(Common),
    /// Recompute one graded-piece dimension two independent ways
    Oracle(OracleArgs),
    /// Run `verify` over the default parameter sweep
    Sweep(Common),
}

#[derive(Args)]
struct Common {
    /// Number of branch points
    #[arg(long)]
    m: Option<usize>,
    /// Cover degree
    #[arg(long)]
    r: Option<usize>,
    /// Moduli point as comma-separated exact rationals, e.g. "2,3,4"
    #[arg(long)]
    point: Option<String>,
    /// Multiplication coefficients as comma-separated exact rationals
    #[arg(long)]
    lambda: Option<String>,
    /// Seed for the sampled lambdas and certificate directions
    #[arg(long)]
    seed: Option<u64>,
    /// Number of sampled trials
    #[arg(long)]
    trials: Option<usize>,
    /// Magnitude bound for sampled integer entries
    #[arg(long)]
    bound: Option<i64>,
    /// JSON scenario file; explicit flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the rendered report to this path
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    /// mu-degree of the piece
    #[arg(long)]
    p: usize,
    /// y-degree of the piece
    #[arg(long)]
    q: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn build_scenario(common: &Common) -> Result<Scenario, CliError> {
    let file = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::InvalidInput {
                kind: "invalid-config".into(),
                detail: format!("{}: {e}", path.display()),
            })?;
            ScenarioFile::parse(&text)?
        }
        None => ScenarioFile::default(),
    };
    let m = common.m.or(file.m).ok_or_else(|| CliError::InvalidInput {
        kind: "invalid-params".into(),
        detail: "missing --m (or config field m)".into(),
    })?;
    let r = common.r.or(file.r).ok_or_else(|| CliError::InvalidInput {
        kind: "invalid-params".into(),
        detail: "missing --r (or config field r)".into(),
    })?;
    let point = match &common.point {
        Some(s) => Some(parse_rational_list(s)?),
        None => file.point_rationals()?,
    };
    let lambda = match &common.lambda {
        Some(s) => Some(parse_rational_list(s)?),
        None => file.lambda_rationals()?,
    };
    Ok(Scenario {
        m,
        r,
        point,
        lambda,
        seed: common.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        trials: common.trials.or(file.trials).unwrap_or(DEFAULT_TRIALS),
        bound: common.bound.or(file.bound).unwrap_or(DEFAULT_BOUND),
    })
}

/// Sweep needs only the sampling knobs; m and r are fixed by the sweep set.
fn build_sweep_knobs(common: &Common) -> Result<(u64, usize, i64), CliError> {
    let file = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::InvalidInput {
                kind: "invalid-config".into(),
                detail: format!("{}: {e}", path.display()),
            })?;
            ScenarioFile::parse(&text)?
        }
        None => ScenarioFile::default(),
    };
    Ok((
        common.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        common.trials.or(file.trials).unwrap_or(DEFAULT_TRIALS),
        common.bound.or(file.bound).unwrap_or(DEFAULT_BOUND),
    ))
}

/// Plain-text rendering of a report object.
fn render_table(value: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                match v {
                    serde_json::Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_table(v, indent + 1, out);
                    }
                    serde_json::Value::Array(items)
                        if items.iter().any(|i| i.is_object() || i.is_array()) =>
                    {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for (idx, item) in items.iter().enumerate() {
                            if item.is_object() {
                                out.push_str(&format!("{pad}  [{idx}]\n"));
                                render_table(item, indent + 2, out);
                            } else {
                                out.push_str(&format!("{pad}  {}\n", inline(item)));
                            }
                        }
                    }
                    other => out.push_str(&format!("{pad}{k}: {}\n", inline(other))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit<T: Serialize>(
    report: &T,
    pass: bool,
    timings: Option<&[(String, u128)]>,
    format: Format,
    out_path: Option<&PathBuf>,
) -> ExitCode {
    let value = serde_json::to_value(report).expect("reports serialize");
    let rendered = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = String::new();
            render_table(&value, 0, &mut s);
            if let Some(timings) = timings {
                s.push_str("timings_ms:\n");
                for (label, ms) in timings {
                    s.push_str(&format!("  {label}: {ms}\n"));
                }
            }
            s
        }
    };
    print!("{rendered}");
    if let Some(path) = out_path {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail(err: CliError) -> ExitCode {
    let (code, kind, detail) = match &err {
        CliError::InvalidInput { kind, detail } => (2, kind.clone(), detail.clone()),
        CliError::Internal(detail) => (3, "internal".to_string(), detail.clone()),
    };
    let report = ErrorReport {
        spec_version: SPEC_VERSION.into(),
        error: kind,
        detail,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("error reports serialize");
    s.push('\n');
    print!("{s}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::HodgeNumbers(common) => {
            match build_scenario(&common).and_then(|sc| cmd_hodge_numbers(&sc)) {
                Ok(rep) => emit(&rep, rep.pass, None, common.format, common.out.as_ref()),
                Err(e) => fail(e),
            }
        }
        Command::JacobianDims(common) => {
            match build_scenario(&common).and_then(|sc| cmd_jacobian_dims(&sc)) {
                Ok(rep) => emit(&rep, rep.pass, None, common.format, common.out.as_ref()),
                Err(e) => fail(e),
            }
        }
        Command::Higgs(common) => match build_scenario(&common).and_then(|sc| cmd_higgs(&sc)) {
            Ok(rep) => emit(&rep, rep.pass, None, common.format, common.out.as_ref()),
            Err(e) => fail(e),
        },
        Command::Verify(common) => match build_scenario(&common).and_then(|sc| cmd_verify(&sc)) {
            Ok(rep) => emit(
                &rep,
                rep.overall_pass,
                Some(&rep.timings_ms),
                common.format,
                common.out.as_ref(),
            ),
            Err(e) => fail(e),
        },
        Command::Oracle(args) => {
            match build_scenario(&args.common).and_then(|sc| cmd_oracle(&sc, args.p, args.q)) {
                Ok(rep) => emit(
                    &rep,
                    rep.pass,
                    None,
                    args.common.format,
                    args.common.out.as_ref(),
                ),
                Err(e) => fail(e),
            }
        }
        Command::Sweep(common) => {
            match build_sweep_knobs(&common)
                .and_then(|(seed, trials, bound)| cmd_sweep(seed, trials, bound))
            {
                Ok(rep) => emit(
                    &rep,
                    rep.overall_pass,
                    None,
                    common.format,
                    common.out.as_ref(),
                ),
                Err(e) => fail(e),
            }
        }
    }
}
