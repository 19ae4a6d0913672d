use crate::error::{CliError, ErrorCode};
use crate::report::{Check, PointEntry, Report, SigmaCheck, StratumEntry};
use crate::spec::ProblemSpec;
use logfol_core::chern::{closed_form_sigma, lhs_integral, positive_argument_sigma, ChernInput};
use logfol_core::indices::{
    chern_side, complement_milnor_sum, point_record, rational_singular_points, stratum_totals, total_milnor,
    RationalPoint,
};

/// Note attached whenever the closed form is evaluated.
pub fn sigma_note(input: &ChernInput, check: &SigmaCheck) -> String {
    let mut note = String::from(
        "closed form evaluated as sum_i C(n+1,i) h_{n-i}(-d_1,...,-d_k,d-1); \
         the divisor degrees enter with negative sign",
    );
    if check.positive_arguments != check.closed_form {
        note.push_str(&format!(
            "; with all arguments positive the sum is {} instead of {} for n={}, degrees={:?}, d={}",
            check.positive_arguments,
            check.closed_form,
            input.dim(),
            input.degrees(),
            input.foliation_degree()
        ));
    }
    note
}

pub fn sigma_check(input: &ChernInput) -> Result<SigmaCheck, CliError> {
    let closed_form = closed_form_sigma(input)?;
    Ok(SigmaCheck {
        closed_form,
        positive_arguments: positive_argument_sigma(input)?,
        agrees: closed_form == lhs_integral(input)?,
    })
}

pub fn chern_input(spec: &ProblemSpec) -> Result<ChernInput, CliError> {
    Ok(ChernInput::new(spec.dim(), vec![1; spec.arrangement.len()], spec.foliation.degree())?)
}

/// The points for per-point tables: those listed, or else every rational
/// singular point. The flag is `false` when the rational points miss some
/// of the singular scheme.
fn report_points(spec: &ProblemSpec, extra: &[RationalPoint]) -> Result<(Vec<RationalPoint>, bool), CliError> {
    let mut listed: Vec<RationalPoint> = spec.points.iter().chain(extra).cloned().collect();
    if !listed.is_empty() {
        listed.dedup();
        return Ok((listed, true));
    }
    let found = match rational_singular_points(&spec.foliation) {
        Ok(points) => points,
        Err(_) => return Ok((Vec::new(), false)),
    };
    let mut covered = 0;
    for p in &found {
        covered += point_record(&spec.foliation, &spec.arrangement, p)?.indices.milnor;
    }
    Ok((found, covered == total_milnor(&spec.foliation)?))
}

pub fn cmd_indices(spec: &ProblemSpec, extra: &[RationalPoint]) -> Result<Vec<PointEntry>, CliError> {
    let (points, _) = report_points(spec, extra)?;
    points
        .iter()
        .map(|p| Ok(PointEntry::from(&point_record(&spec.foliation, &spec.arrangement, p)?)))
        .collect()
}

pub fn cmd_chern(spec: &ProblemSpec) -> Result<i64, CliError> {
    Ok(chern_side(&spec.foliation, &spec.arrangement)?)
}

pub fn cmd_count_complement(spec: &ProblemSpec) -> Result<usize, CliError> {
    Ok(complement_milnor_sum(&spec.foliation, &spec.arrangement)?)
}

pub fn cmd_verify(spec: &ProblemSpec, check_sigma: bool) -> Result<Report, CliError> {
    let f = &spec.foliation;
    let a = &spec.arrangement;
    let strata = stratum_totals(f, a)?;
    let rhs_total: i64 = strata.iter().map(|s| s.sign() * s.milnor_total as i64).sum();
    let input = chern_input(spec)?;
    let lhs_chern = lhs_integral(&input)?;
    let complement = complement_milnor_sum(f, a)?;

    let (points, complete) = report_points(spec, &[])?;
    let points = points
        .iter()
        .map(|p| Ok(PointEntry::from(&point_record(f, a, p)?)))
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut validation = vec![
        Check { name: "isolated singularities".into(), passed: true },
        Check { name: "normal crossings".into(), passed: true },
        Check { name: "logarithmic".into(), passed: true },
    ];
    validation.push(Check {
        name: "classical strata counts".into(),
        passed: strata.iter().all(|s| s.classical.is_none_or(|c| c == s.milnor_total as u64)),
    });
    let mut notes = Vec::new();
    if spec.points.is_empty() && !complete {
        notes.push("some singular points are not rational; the point table is partial".into());
    }
    if complete && spec.points.is_empty() {
        let pointwise: i64 = points.iter().map(|p| p.log).sum();
        validation.push(Check { name: "pointwise sum".into(), passed: pointwise == rhs_total });
    }
    let sigma = if check_sigma {
        let check = sigma_check(&input)?;
        notes.push(sigma_note(&input, &check));
        Some(check)
    } else {
        None
    };
    Ok(Report {
        n: spec.dim(),
        degree: f.degree(),
        hyperplanes: a.len(),
        validation,
        lhs_chern,
        rhs_total,
        verified: lhs_chern == rhs_total,
        complement_milnor_sum: complement,
        divisor_log_sum: rhs_total - complement as i64,
        strata: strata.iter().map(StratumEntry::from).collect(),
        points,
        sigma,
        notes,
    })
}

/// Maps a finished report to the process outcome.
pub fn verification_outcome(report: &Report) -> Result<(), CliError> {
    if report.verified {
        Ok(())
    } else {
        let msg = format!("lhs {} differs from rhs {}", report.lhs_chern, report.rhs_total);
        Err(CliError::new(ErrorCode::VerificationFailed, None, msg))
    }
}
