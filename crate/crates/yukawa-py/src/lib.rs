//! Python bindings: the main types and operations of the yukawa crate as a
//! small extension module. Exact rationals cross the boundary as strings in
//! lowest terms ("2", "-1/3").

use std::str::FromStr;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use yukawa::higgs::vanishing_grade;
use yukawa::jacobian::{cross_check_in, HiggsContext};
use yukawa::{ArrangementParams, ModuliPoint, Rational, UpperReason};
use yukawa_cli::sampling::SplitMix64;

fn to_value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_params(m: usize, r: usize) -> PyResult<ArrangementParams> {
    yukawa::validate_params(m, r).map_err(to_value_err)
}

fn parse_point(
    params: &ArrangementParams,
    point: Option<Vec<String>>,
) -> PyResult<ModuliPoint> {
    match point {
        None => Ok(yukawa::default_point(params)),
        Some(coords) => {
            let parsed: Result<Vec<Rational>, _> = coords
                .iter()
                .map(|s| Rational::from_str(s).map_err(|e| format!("cannot parse {s:?}: {e}")))
                .collect();
            yukawa::validate_point(params, parsed.map_err(to_value_err)?).map_err(to_value_err)
        }
    }
}

fn parse_rationals(values: Vec<String>) -> PyResult<Vec<Rational>> {
    values
        .iter()
        .map(|s| {
            Rational::from_str(s).map_err(|e| to_value_err(format!("cannot parse {s:?}: {e}")))
        })
        .collect()
}

fn fmt_rats(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn fmt_matrix(m: &yukawa::Matrix) -> Vec<Vec<String>> {
    (0..m.n_rows())
        .map(|i| m.dense_row(i).iter().map(|x| x.to_string()).collect())
        .collect()
}

/// Validated parameters `(m, r, n)` with `n = m - m/r - 1`.
#[pyfunction]
fn validate(m: usize, r: usize) -> PyResult<(usize, usize, usize)> {
    let p = parse_params(m, r)?;
    Ok((p.m(), p.r(), p.n()))
}

/// The default moduli point `(2, 3, ..., m-2)` as rational strings.
#[pyfunction]
fn default_point(m: usize, r: usize) -> PyResult<Vec<String>> {
    let p = parse_params(m, r)?;
    Ok(fmt_rats(yukawa::default_point(&p).coords()))
}

/// Hodge numbers `(h^{1,0}, h^{0,1})` of the weight-one structure.
#[pyfunction]
fn hodge_numbers_w1(m: usize, r: usize) -> PyResult<(usize, usize)> {
    Ok(yukawa::hodge_numbers_w1(&parse_params(m, r)?))
}

/// Hodge numbers `h^{n-q,q}` of the weight-n structure, `q = 0..=n`.
#[pyfunction]
fn hodge_numbers_v1(m: usize, r: usize) -> PyResult<Vec<usize>> {
    Ok(yukawa::hodge_numbers_v1(&parse_params(m, r)?).h)
}

/// The structural upper bound `m/r - 1` for the coupling length.
#[pyfunction]
fn structural_upper_bound(m: usize, r: usize) -> PyResult<usize> {
    Ok(yukawa::structural_upper_bound(&parse_params(m, r)?))
}

/// Graded-piece dimensions and bases at a point.
#[pyclass(frozen, get_all)]
struct JacobianDims {
    source_bidegree: (usize, usize),
    source_dim: usize,
    source_expected: usize,
    target_bidegree: (usize, usize),
    target_dim: usize,
    target_expected: usize,
    relation_rank: usize,
    vandermonde_basis: Vec<String>,
    target_quotient_basis: Vec<String>,
}

#[pyfunction]
#[pyo3(signature = (m, r, point=None))]
fn jacobian_dims(m: usize, r: usize, point: Option<Vec<String>>) -> PyResult<JacobianDims> {
    let params = parse_params(m, r)?;
    let point = parse_point(&params, point)?;
    let ctx = HiggsContext::new(&params, &point).map_err(to_value_err)?;
    let relation_rank = yukawa::relation_matrix(&params, &point).rank();
    Ok(JacobianDims {
        source_bidegree: params.source_bidegree(),
        source_dim: ctx.source.dim,
        source_expected: params.n(),
        target_bidegree: params.target_bidegree(),
        target_dim: ctx.target.dim,
        target_expected: params.target_dim(),
        relation_rank,
        vandermonde_basis: ctx.source_basis.iter().map(|x| x.to_string()).collect(),
        target_quotient_basis: ctx
            .target
            .quotient_basis
            .iter()
            .map(|x| x.to_string())
            .collect(),
    })
}

/// The multiplication (Higgs) matrix for an explicit lambda.
#[pyclass(frozen, get_all)]
struct HiggsResult {
    matrix: Vec<Vec<String>>,
    rank: usize,
    target_dim: usize,
    surjective: bool,
    cross_check: bool,
}

#[pyfunction]
#[pyo3(signature = (m, r, lambda_, point=None))]
fn higgs_matrix(
    m: usize,
    r: usize,
    lambda_: Vec<String>,
    point: Option<Vec<String>>,
) -> PyResult<HiggsResult> {
    let params = parse_params(m, r)?;
    let point = parse_point(&params, point)?;
    let lambda = parse_rationals(lambda_)?;
    let ctx = HiggsContext::new(&params, &point).map_err(to_value_err)?;
    let rep = ctx.higgs_matrix(&lambda).map_err(to_value_err)?;
    let cross = cross_check_in(&ctx, &lambda).map_err(to_value_err)?;
    Ok(HiggsResult {
        matrix: fmt_matrix(&rep.matrix),
        rank: rep.rank,
        target_dim: ctx.target.dim,
        surjective: rep.surjective,
        cross_check: cross,
    })
}

/// The relation matrix with entries `a_i^e - a_i`, as rational strings.
#[pyfunction]
#[pyo3(signature = (m, r, point=None))]
fn relation_matrix(m: usize, r: usize, point: Option<Vec<String>>) -> PyResult<Vec<Vec<String>>> {
    let params = parse_params(m, r)?;
    let point = parse_point(&params, point)?;
    Ok(fmt_matrix(&yukawa::relation_matrix(&params, &point)))
}

/// A coupling-length certificate.
#[pyclass(frozen, get_all)]
struct Certificate {
    length: usize,
    expected_length: usize,
    complete: bool,
    witness_direction: Option<Vec<String>>,
    upper_reason: String,
}

#[pyfunction]
#[pyo3(signature = (m, r, point=None, seed=0, trials=20, bound=100))]
fn coupling_length(
    m: usize,
    r: usize,
    point: Option<Vec<String>>,
    seed: u64,
    trials: usize,
    bound: i64,
) -> PyResult<Certificate> {
    if bound < 1 {
        return Err(PyValueError::new_err("bound must be at least 1"));
    }
    let params = parse_params(m, r)?;
    let point = parse_point(&params, point)?;
    let mut rng = SplitMix64::new(seed);
    let dirs: Vec<Vec<Rational>> = (0..trials)
        .map(|_| rng.next_vector(bound, params.moduli_dim()))
        .collect();
    let cert = yukawa::coupling_length(&params, &point, dirs).map_err(to_value_err)?;
    let upper_reason = match cert.upper {
        UpperReason::ZeroGrade { q } if q == vanishing_grade(&params) && q > params.n() => {
            format!("grade dim 0 at q = {q} (past the weight {})", params.n())
        }
        ref other => other.to_string(),
    };
    Ok(Certificate {
        length: cert.length,
        expected_length: yukawa::structural_upper_bound(&params),
        complete: cert.complete,
        witness_direction: cert.witness.as_ref().map(|(v, _)| fmt_rats(v)),
        upper_reason,
    })
}

/// The full verification report for one scenario, as canonical JSON.
#[pyfunction]
#[pyo3(signature = (m, r, point=None, seed=0, trials=20, bound=100))]
fn verify_json(
    m: usize,
    r: usize,
    point: Option<Vec<String>>,
    seed: u64,
    trials: usize,
    bound: i64,
) -> PyResult<String> {
    let point = match point {
        None => None,
        Some(coords) => Some(parse_rationals(coords)?),
    };
    let scenario = yukawa_cli::Scenario {
        m,
        r,
        point,
        lambda: None,
        seed,
        trials,
        bound,
    };
    let report = yukawa_cli::cmd_verify(&scenario).map_err(|e| match e {
        yukawa_cli::CliError::InvalidInput { .. } => to_value_err(e),
        yukawa_cli::CliError::Internal(detail) => PyRuntimeError::new_err(detail),
    })?;
    let value = serde_json::to_value(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    serde_json::to_string_pretty(&value).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
fn yukawa_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(default_point, m)?)?;
    m.add_function(wrap_pyfunction!(hodge_numbers_w1, m)?)?;
    m.add_function(wrap_pyfunction!(hodge_numbers_v1, m)?)?;
    m.add_function(wrap_pyfunction!(structural_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian_dims, m)?)?;
    m.add_function(wrap_pyfunction!(higgs_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(relation_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(coupling_length, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    m.add_class::<JacobianDims>()?;
    m.add_class::<HiggsResult>()?;
    m.add_class::<Certificate>()?;
    Ok(())
}
