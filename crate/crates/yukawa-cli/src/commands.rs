//! Command pipelines behind the CLI verbs.

use std::time::Instant;

use num_traits::Zero;
use yukawa::higgs::{certify_from_wedge, vanishing_grade, HiggsPencil};
use yukawa::jacobian::{cross_check_in, vandermonde_basis_in, HiggsContext};
use yukawa::{
    hodge_numbers_v1, hodge_numbers_w1, relation_matrix, structural_upper_bound,
    ArrangementParams, GradedPieceBasis, ModuliPoint, Rational, UpperReason,
};

use crate::oracle;
use crate::report::*;
use crate::sampling::SplitMix64;
use crate::{CliError, Scenario};

/// Validated scenario: parameters plus the resolved moduli point.
pub struct Resolved {
    pub params: ArrangementParams,
    pub point: ModuliPoint,
    pub scenario: Scenario,
}

pub fn resolve(scenario: &Scenario) -> Result<Resolved, CliError> {
    let params = yukawa::validate_params(scenario.m, scenario.r).map_err(|e| {
        CliError::InvalidInput {
            kind: "invalid-params".into(),
            detail: e.to_string(),
        }
    })?;
    let point = match &scenario.point {
        Some(coords) => {
            yukawa::validate_point(&params, coords.clone()).map_err(|e| CliError::InvalidInput {
                kind: "invalid-point".into(),
                detail: e.to_string(),
            })?
        }
        None => yukawa::default_point(&params),
    };
    Ok(Resolved {
        params,
        point,
        scenario: scenario.clone(),
    })
}

fn params_echo(r: &Resolved) -> ParamsEcho {
    ParamsEcho {
        m: r.params.m(),
        r: r.params.r(),
        n: r.params.n(),
        moduli_dim: r.params.moduli_dim(),
        point: fmt_rats(r.point.coords()),
    }
}

fn scenario_echo(r: &Resolved) -> ScenarioEcho {
    ScenarioEcho {
        seed: r.scenario.seed,
        trials: r.scenario.trials,
        bound: r.scenario.bound,
    }
}

fn piece_report(piece: &GradedPieceBasis, expected_dim: usize) -> PieceReport {
    PieceReport {
        bidegree: piece.bidegree,
        ambient_dim: piece.ambient.len(),
        ideal_rows: piece.ideal_rows.n_rows(),
        ideal_rank: piece.ideal_rank(),
        dim: piece.dim,
        expected_dim,
        quotient_basis: piece.quotient_basis.iter().map(|m| m.to_string()).collect(),
        pass: piece.dim == expected_dim,
    }
}

fn relation_report(r: &Resolved) -> RelationReport {
    let rel = relation_matrix(&r.params, &r.point);
    let rank = rel.rank();
    let expected_rank = r.params.n() - 1;
    let quotient_dim = r.params.moduli_dim() - rank;
    RelationReport {
        rows: rel.n_rows(),
        cols: rel.n_cols(),
        rank,
        expected_rank,
        quotient_dim,
        pass: rank == expected_rank && quotient_dim == r.params.target_dim(),
    }
}

/// Sampled lambda vectors for the trial stage; one stream per scenario,
/// drawn before the certificate directions.
fn sample_lambdas(r: &Resolved, rng: &mut SplitMix64) -> Vec<Vec<Rational>> {
    (0..r.scenario.trials)
        .map(|_| rng.next_vector(r.scenario.bound, r.params.moduli_dim()))
        .collect()
}

pub fn cmd_hodge_numbers(scenario: &Scenario) -> Result<HodgeReport, CliError> {
    let r = resolve(scenario)?;
    Ok(HodgeReport {
        spec_version: SPEC_VERSION.into(),
        command: "hodge-numbers".into(),
        params: params_echo(&r),
        w1: hodge_numbers_w1(&r.params),
        v1: hodge_numbers_v1(&r.params).h,
        pass: true,
    })
}

pub fn cmd_jacobian_dims(scenario: &Scenario) -> Result<JacobianDimsReport, CliError> {
    let r = resolve(scenario)?;
    let ctx = HiggsContext::new(&r.params, &r.point).map_err(internal)?;
    let vandermonde = vandermonde_basis_in(&r.params, &ctx.source);
    let source = piece_report(&ctx.source, r.params.n());
    let target = piece_report(&ctx.target, r.params.target_dim());
    let relation = relation_report(&r);
    let vandermonde_independent = vandermonde.is_ok();
    let pass = source.pass && target.pass && relation.pass && vandermonde_independent;
    Ok(JacobianDimsReport {
        spec_version: SPEC_VERSION.into(),
        command: "jacobian-dims".into(),
        params: params_echo(&r),
        source,
        target,
        vandermonde_basis: ctx.source_basis.iter().map(|m| m.to_string()).collect(),
        vandermonde_independent,
        relation,
        pass,
    })
}

pub fn cmd_higgs(scenario: &Scenario) -> Result<HiggsReport, CliError> {
    let r = resolve(scenario)?;
    let ctx = HiggsContext::new(&r.params, &r.point).map_err(internal)?;
    let check_lambda = |lambda: &[Rational]| -> Result<(usize, bool, bool), CliError> {
        let rep = ctx.higgs_matrix(lambda).map_err(invalid_lambda)?;
        let cross = cross_check_in(&ctx, lambda).map_err(invalid_lambda)?;
        Ok((rep.rank, rep.surjective, cross))
    };
    match &r.scenario.lambda {
        Some(lambda) => {
            let rep = ctx.higgs_matrix(lambda).map_err(invalid_lambda)?;
            let cross = cross_check_in(&ctx, lambda).map_err(invalid_lambda)?;
            Ok(HiggsReport {
                spec_version: SPEC_VERSION.into(),
                command: "higgs".into(),
                params: params_echo(&r),
                scenario: scenario_echo(&r),
                target_dim: ctx.target.dim,
                explicit: Some(TrialWithMatrix {
                    lambda: fmt_rats(lambda),
                    matrix: fmt_matrix(&rep.matrix),
                    rank: rep.rank,
                    surjective: rep.surjective,
                    cross_check: cross,
                }),
                trials: None,
                trials_all_surjective: None,
                pass: cross,
            })
        }
        None => {
            let mut rng = SplitMix64::new(r.scenario.seed);
            let lambdas = sample_lambdas(&r, &mut rng);
            let mut trials = Vec::with_capacity(lambdas.len());
            for lambda in &lambdas {
                let (rank, surjective, cross_check) = check_lambda(lambda)?;
                trials.push(TrialReport {
                    lambda: fmt_rats(lambda),
                    rank,
                    surjective,
                    cross_check,
                });
            }
            let all_surjective = trials.iter().all(|t| t.surjective);
            let all_cross = trials.iter().all(|t| t.cross_check);
            Ok(HiggsReport {
                spec_version: SPEC_VERSION.into(),
                command: "higgs".into(),
                params: params_echo(&r),
                scenario: scenario_echo(&r),
                target_dim: ctx.target.dim,
                explicit: None,
                trials: Some(trials),
                trials_all_surjective: Some(all_surjective),
                pass: all_surjective && all_cross,
            })
        }
    }
}

pub fn cmd_oracle(scenario: &Scenario, p: usize, q: usize) -> Result<OracleReport, CliError> {
    let r = resolve(scenario)?;
    let piece = yukawa::graded_piece(&r.params, &r.point, p, q);
    let dim_reversed = oracle::graded_dim_reversed(&r.params, &r.point, p, q);
    let relation_route_dim = if (p, q) == r.params.target_bidegree() {
        let rel = relation_matrix(&r.params, &r.point);
        let rel_rows: Vec<Vec<Rational>> = (0..rel.n_rows()).map(|i| rel.dense_row(i)).collect();
        Some(r.params.moduli_dim() - oracle::dense_rank(&rel_rows))
    } else {
        None
    };
    let agree =
        piece.dim == dim_reversed && relation_route_dim.is_none_or(|d| d == piece.dim);
    Ok(OracleReport {
        spec_version: SPEC_VERSION.into(),
        command: "oracle".into(),
        params: params_echo(&r),
        bidegree: (p, q),
        dim_pipeline: piece.dim,
        dim_reversed,
        relation_route_dim,
        agree,
        pass: agree,
    })
}

pub fn cmd_verify(scenario: &Scenario) -> Result<VerificationReport, CliError> {
    let r = resolve(scenario)?;
    let mut timings: Vec<(String, u128)> = Vec::new();
    let stamp = |label: &str, t0: Instant, timings: &mut Vec<(String, u128)>| {
        timings.push((label.to_string(), t0.elapsed().as_millis()));
    };

    let t0 = Instant::now();
    let ctx = HiggsContext::new(&r.params, &r.point).map_err(internal)?;
    stamp("graded-pieces", t0, &mut timings);

    let hodge_w1 = hodge_numbers_w1(&r.params);
    let hodge_v1 = hodge_numbers_v1(&r.params).h;
    let source = piece_report(&ctx.source, r.params.n());
    let target = piece_report(&ctx.target, r.params.target_dim());
    let vandermonde_independent = vandermonde_basis_in(&r.params, &ctx.source).is_ok();
    let relation = relation_report(&r);

    // pencil and wedge structure
    let t0 = Instant::now();
    let pencil = HiggsPencil::from_context(&ctx).map_err(internal)?;
    let pencil_ranks: Vec<usize> = pencil.eta_basis.iter().map(|m| m.rank()).collect();
    let wedge = yukawa::wedge_power_higgs(&pencil).map_err(|e| CliError::Internal(e.to_string()))?;
    let wedge_dims: Vec<usize> = (0..=wedge.weight()).map(|q| wedge.grade_dim(q)).collect();
    let wedge_dims_match = wedge_dims == hodge_v1;
    stamp("wedge", t0, &mut timings);

    // lambda trials and cross-checks
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(r.scenario.seed);
    let lambdas = sample_lambdas(&r, &mut rng);
    let mut trials = Vec::with_capacity(lambdas.len());
    for lambda in &lambdas {
        let rep = ctx.higgs_matrix(lambda).map_err(internal)?;
        let cross = cross_check_in(&ctx, lambda).map_err(internal)?;
        trials.push(TrialReport {
            lambda: fmt_rats(lambda),
            rank: rep.rank,
            surjective: rep.surjective,
            cross_check: cross,
        });
    }
    let trials_all_surjective = trials.iter().all(|t| t.surjective);
    let cross_checks_all = trials.iter().all(|t| t.cross_check);
    let lambda_zero_rank = ctx
        .higgs_matrix(&vec![Rational::zero(); r.params.moduli_dim()])
        .map_err(internal)?
        .rank;
    stamp("trials", t0, &mut timings);

    // independent reversed-order recomputation
    let t0 = Instant::now();
    let (sp, sq) = r.params.source_bidegree();
    let (tp, tq) = r.params.target_bidegree();
    let source_dim_reversed = oracle::graded_dim_reversed(&r.params, &r.point, sp, sq);
    let target_dim_reversed = oracle::graded_dim_reversed(&r.params, &r.point, tp, tq);
    let oracle_agreement = OracleAgreement {
        source_dim_reversed,
        target_dim_reversed,
        source_agree: source_dim_reversed == ctx.source.dim,
        target_agree: target_dim_reversed == ctx.target.dim,
    };
    stamp("oracle", t0, &mut timings);

    // coupling-length certificate over sampled directions
    let t0 = Instant::now();
    let directions =
        (0..r.scenario.trials).map(|_| rng.next_vector(r.scenario.bound, r.params.moduli_dim()));
    let cert = certify_from_wedge(&wedge, directions);
    let expected_length = structural_upper_bound(&r.params);
    let upper_reason = match cert.upper {
        UpperReason::ZeroGrade { q } if q == vanishing_grade(&r.params) && q > r.params.n() => {
            format!("grade dim 0 at q = {q} (past the weight {})", r.params.n())
        }
        ref other => other.to_string(),
    };
    let certificate = CertificateReport {
        length: cert.length,
        expected_length,
        complete: cert.complete,
        witness_direction: cert.witness.as_ref().map(|(v, _)| fmt_rats(v)),
        upper_reason,
        pass: cert.complete && cert.length == expected_length,
    };
    stamp("certificate", t0, &mut timings);

    let overall_pass = source.pass
        && target.pass
        && vandermonde_independent
        && relation.pass
        && wedge_dims_match
        && trials_all_surjective
        && cross_checks_all
        && oracle_agreement.source_agree
        && oracle_agreement.target_agree
        && certificate.pass;

    Ok(VerificationReport {
        spec_version: SPEC_VERSION.into(),
        command: "verify".into(),
        params: params_echo(&r),
        scenario: scenario_echo(&r),
        hodge_w1,
        hodge_v1,
        source,
        target,
        vandermonde_basis: ctx.source_basis.iter().map(|m| m.to_string()).collect(),
        vandermonde_independent,
        relation,
        wedge_dims,
        wedge_dims_match,
        pencil_ranks,
        lambda_zero_rank,
        trials,
        trials_all_surjective,
        cross_checks_all,
        oracle: oracle_agreement,
        certificate,
        overall_pass,
        timings_ms: timings,
    })
}

/// The default verification sweep.
pub const SWEEP: [(usize, usize); 6] = [(4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3)];

pub fn cmd_sweep(seed: u64, trials: usize, bound: i64) -> Result<SweepReport, CliError> {
    let scenarios: Vec<Scenario> = SWEEP
        .iter()
        .map(|&(m, r)| Scenario {
            m,
            r,
            point: None,
            lambda: None,
            seed,
            trials,
            bound,
        })
        .collect();
    // entries are independent; run them on worker threads and assemble in
    // sweep order
    let entries: Vec<Result<VerificationReport, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = scenarios
            .iter()
            .map(|sc| scope.spawn(move || cmd_verify(sc)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });
    let entries = entries.into_iter().collect::<Result<Vec<_>, _>>()?;
    let overall_pass = entries.iter().all(|e| e.overall_pass);
    Ok(SweepReport {
        spec_version: SPEC_VERSION.into(),
        command: "sweep".into(),
        entries,
        overall_pass,
    })
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn invalid_lambda(e: yukawa::JacobianError) -> CliError {
    match e {
        yukawa::JacobianError::WrongLength { .. } => CliError::InvalidInput {
            kind: "invalid-lambda".into(),
            detail: e.to_string(),
        },
        other => CliError::Internal(other.to_string()),
    }
}
