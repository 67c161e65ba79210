//! Scenario handling, reporting, seeded sampling and the independent
//! verification harness behind the `yukawa` command-line tool.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;
use yukawa::Rational;

pub mod commands;
pub mod oracle;
pub mod report;
pub mod sampling;

pub use commands::{
    cmd_higgs, cmd_hodge_numbers, cmd_jacobian_dims, cmd_oracle, cmd_sweep, cmd_verify, SWEEP,
};
pub use sampling::sample_directions;

/// A fully resolved invocation: parameters, optional explicit point and
/// lambda, and the sampling knobs.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub m: usize,
    pub r: usize,
    pub point: Option<Vec<Rational>>,
    pub lambda: Option<Vec<Rational>>,
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
}

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_BOUND: i64 = 100;

impl Scenario {
    pub fn new(m: usize, r: usize) -> Self {
        Scenario {
            m,
            r,
            point: None,
            lambda: None,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_BOUND,
        }
    }
}

/// Command failures, mapped to exit statuses by the binary:
/// invalid input exits 2, internal errors exit 3 (verification failures are
/// encoded in the report and exit 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    InvalidInput { kind: String, detail: String },
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::InvalidInput { kind, detail } => write!(f, "{kind}: {detail}"),
            CliError::Internal(detail) => write!(f, "internal error: {detail}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Parse a comma-separated list of exact rationals ("2,3,-1/2").
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|part| {
            Rational::from_str(part.trim()).map_err(|e| CliError::InvalidInput {
                kind: "invalid-rational".into(),
                detail: format!("cannot parse {part:?}: {e}"),
            })
        })
        .collect()
}

/// On-disk scenario file; every field optional, flags take precedence.
#[derive(Deserialize, Default, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub m: Option<usize>,
    pub r: Option<usize>,
    pub point: Option<Vec<String>>,
    pub lambda: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub bound: Option<i64>,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::InvalidInput {
            kind: "invalid-config".into(),
            detail: e.to_string(),
        })
    }

    fn rationals(list: &[String]) -> Result<Vec<Rational>, CliError> {
        list.iter()
            .map(|s| {
                Rational::from_str(s).map_err(|e| CliError::InvalidInput {
                    kind: "invalid-rational".into(),
                    detail: format!("cannot parse {s:?}: {e}"),
                })
            })
            .collect()
    }

    pub fn point_rationals(&self) -> Result<Option<Vec<Rational>>, CliError> {
        self.point.as_deref().map(Self::rationals).transpose()
    }

    pub fn lambda_rationals(&self) -> Result<Option<Vec<Rational>>, CliError> {
        self.lambda.as_deref().map(Self::rationals).transpose()
    }
}
