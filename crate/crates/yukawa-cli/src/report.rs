//! Structured reports emitted by the commands.
//!
//! Every report is a single JSON object with `spec_version` "1". All
//! rational values are rendered as strings in lowest terms ("2", "-1/3") so
//! the output is exact and byte-stable across runs. Wall-clock timings are
//! collected for the table rendering but deliberately excluded from the
//! JSON, which must be byte-identical for identical scenarios.

use serde::{Deserialize, Serialize};
use yukawa::Rational;

pub const SPEC_VERSION: &str = "1";

pub fn fmt_rat(x: &Rational) -> String {
    x.to_string()
}

pub fn fmt_rats(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(fmt_rat).collect()
}

/// Matrix entries as strings, row-major.
pub fn fmt_matrix(m: &yukawa::Matrix) -> Vec<Vec<String>> {
    (0..m.n_rows())
        .map(|i| m.dense_row(i).iter().map(fmt_rat).collect())
        .collect()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ParamsEcho {
    pub m: usize,
    pub r: usize,
    pub n: usize,
    pub moduli_dim: usize,
    pub point: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScenarioEcho {
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct HodgeReport {
    pub spec_version: String,
    pub command: String,
    pub params: ParamsEcho,
    /// `(h^{1,0}, h^{0,1})` of the weight-one structure.
    pub w1: (usize, usize),
    /// `h^{n-q,q}` of the weight-n structure, `q = 0..=n`.
    pub v1: Vec<usize>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PieceReport {
    pub bidegree: (usize, usize),
    pub ambient_dim: usize,
    pub ideal_rows: usize,
    pub ideal_rank: usize,
    pub dim: usize,
    pub expected_dim: usize,
    pub quotient_basis: Vec<String>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub expected_rank: usize,
    /// `(m - 3) - rank`, which must equal the target dimension.
    pub quotient_dim: usize,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct JacobianDimsReport {
    pub spec_version: String,
    pub command: String,
    pub params: ParamsEcho,
    pub source: PieceReport,
    pub target: PieceReport,
    pub vandermonde_basis: Vec<String>,
    pub vandermonde_independent: bool,
    pub relation: RelationReport,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TrialReport {
    pub lambda: Vec<String>,
    pub rank: usize,
    pub surjective: bool,
    pub cross_check: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct HiggsReport {
    pub spec_version: String,
    pub command: String,
    pub params: ParamsEcho,
    pub scenario: ScenarioEcho,
    pub target_dim: usize,
    /// Present when an explicit lambda was supplied.
    pub explicit: Option<TrialWithMatrix>,
    /// Present in sampled mode.
    pub trials: Option<Vec<TrialReport>>,
    pub trials_all_surjective: Option<bool>,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TrialWithMatrix {
    pub lambda: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub rank: usize,
    pub surjective: bool,
    pub cross_check: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub spec_version: String,
    pub command: String,
    pub params: ParamsEcho,
    pub bidegree: (usize, usize),
    pub dim_pipeline: usize,
    pub dim_reversed: usize,
    /// `(m - 3) - rank(relation matrix)`, reported when the bidegree is the
    /// target bidegree.
    pub relation_route_dim: Option<usize>,
    pub agree: bool,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub length: usize,
    pub expected_length: usize,
    pub complete: bool,
    pub witness_direction: Option<Vec<String>>,
    pub upper_reason: String,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OracleAgreement {
    pub source_dim_reversed: usize,
    pub target_dim_reversed: usize,
    pub source_agree: bool,
    pub target_agree: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec_version: String,
    pub command: String,
    pub params: ParamsEcho,
    pub scenario: ScenarioEcho,
    pub hodge_w1: (usize, usize),
    pub hodge_v1: Vec<usize>,
    pub source: PieceReport,
    pub target: PieceReport,
    pub vandermonde_basis: Vec<String>,
    pub vandermonde_independent: bool,
    pub relation: RelationReport,
    pub wedge_dims: Vec<usize>,
    pub wedge_dims_match: bool,
    /// Rank of the Higgs matrix along each coordinate direction.
    pub pencil_ranks: Vec<usize>,
    pub lambda_zero_rank: usize,
    pub trials: Vec<TrialReport>,
    pub trials_all_surjective: bool,
    pub cross_checks_all: bool,
    pub oracle: OracleAgreement,
    pub certificate: CertificateReport,
    pub overall_pass: bool,
    /// Stage timings for the table rendering; excluded from the JSON so
    /// reports stay byte-identical across runs.
    #[serde(skip)]
    pub timings_ms: Vec<(String, u128)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub spec_version: String,
    pub command: String,
    pub entries: Vec<VerificationReport>,
    pub overall_pass: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ErrorReport {
    pub spec_version: String,
    pub error: String,
    pub detail: String,
}
