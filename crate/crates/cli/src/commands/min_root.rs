use std::cmp::Ordering;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use plrs_core::analytic::{compare_roots, lambda_threshold, principal_root, smallest_root};
use plrs_core::brown::decide;
use plrs_core::enumerate::of_length;
use plrs_core::explore::oracle_check;
use plrs_core::{Coefficients, VerdictKind};

use super::RootRecord;
use crate::args::{Format, MinRootArgs};
use crate::error::CliError;
use crate::output::{self, RunConfig};
use crate::Context;

/// Refuse searches larger than this many candidate vectors.
const MAX_CANDIDATES: u128 = 50_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct Frontier {
    pub coefficients: Vec<u64>,
    #[serde(flatten)]
    pub root: RootRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lambda {
    pub n_l: u64,
    pub coefficients: Vec<u64>,
    #[serde(flatten)]
    pub root: RootRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinRootReport {
    pub len: usize,
    pub sum_cap: u64,
    pub candidates: usize,
    /// Incomplete according to the subset-sum oracle.
    pub incomplete: usize,
    /// Engine says incomplete but the oracle could not confirm.
    pub unverified: usize,
    pub frontier: Option<Frontier>,
    pub lambda: Option<Lambda>,
    /// Frontier root relative to `λ_L`: `below`, `equal` or `above`.
    pub against_lambda: Option<&'static str>,
    /// Frontier root minus `λ_L`.
    pub margin: Option<f64>,
}

#[derive(Serialize)]
struct Output<'a> {
    #[serde(flatten)]
    report: &'a MinRootReport,
    config: &'a RunConfig,
}

pub fn search(ctx: &Context, a: &MinRootArgs) -> Result<MinRootReport, CliError> {
    if a.len == 0 {
        return Err(CliError::Input("--L must be at least 1".into()));
    }
    let space = (a.sum_cap as u128 + 1).saturating_pow(a.len as u32);
    if space > MAX_CANDIDATES {
        return Err(CliError::Input(format!(
            "search space of about {space} vectors is too large"
        )));
    }
    let tol = ctx.global.tolerance;
    let engine = ctx.engine(false);
    let candidates: Vec<Coefficients> = of_length(a.len, a.sum_cap)
        .filter(|c| c.sum() <= a.sum_cap as u128)
        .collect();
    let judged: Vec<(bool, bool)> = ctx.install(|| {
        candidates
            .par_iter()
            .map(|c| {
                let oracle = oracle_check(c).is_some_and(|v| v.kind == VerdictKind::Incomplete);
                let engine_only = !oracle && decide(c, &engine).kind == VerdictKind::Incomplete;
                (oracle, engine_only)
            })
            .collect()
    });
    let incomplete: Vec<Coefficients> = candidates
        .iter()
        .zip(&judged)
        .filter(|(_, j)| j.0)
        .map(|(c, _)| c.clone())
        .collect();
    let unverified = judged.iter().filter(|j| j.1).count();

    let frontier = smallest_root(incomplete.iter().cloned());
    let lambda = lambda_threshold(a.len, tol).ok();
    let against = match (&frontier, &lambda) {
        (Some(f), Some(l)) => Some(match compare_roots(f, &l.coefficients) {
            Ordering::Less => "below",
            Ordering::Equal => "equal",
            Ordering::Greater => "above",
        }),
        _ => None,
    };
    let frontier = frontier.map(|c| Frontier {
        root: RootRecord::from(&principal_root(&c, tol)),
        coefficients: c.into_vec(),
    });
    let lambda = lambda.map(|l| Lambda {
        n_l: l.n_l,
        coefficients: l.coefficients.as_slice().to_vec(),
        root: RootRecord::from(&l.lambda),
    });
    let margin = match (&frontier, &lambda) {
        (Some(f), Some(l)) => Some(f.root.root - l.root.root),
        _ => None,
    };
    Ok(MinRootReport {
        len: a.len,
        sum_cap: a.sum_cap,
        candidates: candidates.len(),
        incomplete: incomplete.len(),
        unverified,
        frontier,
        lambda,
        against_lambda: against,
        margin,
    })
}

pub fn run(ctx: &Context, a: &MinRootArgs) -> Result<(), CliError> {
    let mut cfg = ctx.config("min-root", Format::Json);
    cfg.arg("L", a.len).arg("sum_cap", a.sum_cap);
    let report = search(ctx, a)?;

    let mut w = ctx.writer()?;
    let coeffs = |v: &[u64]| {
        format!(
            "[{}]",
            v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        )
    };
    match cfg.format {
        Format::Json => output::json(
            &mut w,
            &Output {
                report: &report,
                config: &cfg,
            },
        )?,
        Format::Csv => {
            let mut out = output::csv_writer(&mut w, &cfg)?;
            out.write_record([
                "L",
                "sum_cap",
                "frontier",
                "root",
                "lambda",
                "against_lambda",
                "margin",
            ])?;
            out.write_record([
                report.len.to_string(),
                report.sum_cap.to_string(),
                report
                    .frontier
                    .as_ref()
                    .map(|f| coeffs(&f.coefficients))
                    .unwrap_or_default(),
                report
                    .frontier
                    .as_ref()
                    .map(|f| f.root.root.to_string())
                    .unwrap_or_default(),
                report
                    .lambda
                    .as_ref()
                    .map(|l| l.root.root.to_string())
                    .unwrap_or_default(),
                report.against_lambda.unwrap_or_default().to_string(),
                report.margin.map(|m| m.to_string()).unwrap_or_default(),
            ])?;
            out.flush()?;
        }
        Format::Plain => {
            output::plain_header(&cfg);
            writeln!(
                w,
                "L={} sum_cap={} candidates={} incomplete={} unverified={}",
                report.len, report.sum_cap, report.candidates, report.incomplete, report.unverified
            )?;
            match &report.frontier {
                Some(f) => writeln!(
                    w,
                    "frontier {} root {}",
                    coeffs(&f.coefficients),
                    f.root.root
                )?,
                None => writeln!(w, "frontier none")?,
            }
            if let Some(l) = &report.lambda {
                writeln!(
                    w,
                    "lambda_{} = {} (N_L = {})",
                    report.len, l.root.root, l.n_l
                )?;
            }
            if let (Some(s), Some(m)) = (report.against_lambda, report.margin) {
                writeln!(w, "frontier is {s} lambda, margin {m:e}")?;
            }
        }
    }
    w.flush()?;
    if report.against_lambda == Some("below") {
        // an incomplete sequence below λ_L refutes the threshold conjecture
        return Err(CliError::Counterexamples(1));
    }
    Ok(())
}
