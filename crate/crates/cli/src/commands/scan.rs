use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use plrs_core::enumerate::of_length;
use plrs_core::explore::{scan_2l1, ScanOutcome};

use crate::args::{Format, ScanArgs};
use crate::error::CliError;
use crate::output::{self, RunConfig};
use crate::Context;

#[derive(Clone, Debug, Serialize)]
pub struct Hit {
    pub coefficients: Vec<u64>,
    pub failure_index: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LengthReport {
    pub len: usize,
    pub threshold: usize,
    pub candidates: usize,
    /// Brown's criterion fails at or before the threshold.
    pub fails_early: usize,
    pub complete: usize,
    pub undecided: usize,
    pub counterexamples: Vec<Hit>,
}

#[derive(Serialize)]
struct ScanOutput<'a> {
    config: &'a RunConfig,
    threshold: String,
    lengths: &'a [LengthReport],
    total_counterexamples: usize,
}

pub fn scan(ctx: &Context, a: &ScanArgs) -> Vec<LengthReport> {
    let engine = ctx.engine(false);
    a.len
        .clone()
        .filter(|&len| len >= 1)
        .map(|len| {
            let threshold = a.threshold.at(len);
            let candidates: Vec<_> = of_length(len, a.coeff_cap).collect();
            let outcomes: Vec<ScanOutcome> = ctx.install(|| {
                candidates
                    .par_iter()
                    .map(|c| scan_2l1(c, threshold, &engine))
                    .collect()
            });
            let mut r = LengthReport {
                len,
                threshold,
                candidates: candidates.len(),
                ..Default::default()
            };
            for o in outcomes {
                match o {
                    ScanOutcome::FailsEarly => r.fails_early += 1,
                    ScanOutcome::Complete => r.complete += 1,
                    ScanOutcome::Undecided => r.undecided += 1,
                    ScanOutcome::Counterexample(h) => r.counterexamples.push(Hit {
                        coefficients: h.coefficients.into_vec(),
                        failure_index: h.failure_index,
                    }),
                }
            }
            r
        })
        .collect()
}

pub fn run(ctx: &Context, a: &ScanArgs) -> Result<(), CliError> {
    if a.coeff_cap == 0 {
        return Err(CliError::Input("--coeff-cap must be at least 1".into()));
    }
    let mut cfg = ctx.config("scan-2l1", Format::Json);
    cfg.arg("L", format!("{}..={}", a.len.start(), a.len.end()))
        .arg("coeff_cap", a.coeff_cap)
        .arg("threshold", a.threshold);
    let reports = scan(ctx, a);
    let total: usize = reports.iter().map(|r| r.counterexamples.len()).sum();

    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Json => output::json(
            &mut w,
            &ScanOutput {
                config: &cfg,
                threshold: a.threshold.to_string(),
                lengths: &reports,
                total_counterexamples: total,
            },
        )?,
        Format::Csv => {
            let mut out = output::csv_writer(&mut w, &cfg)?;
            out.write_record(["L", "threshold", "coefficients", "failure_index"])?;
            for r in &reports {
                for h in &r.counterexamples {
                    let c = format!(
                        "[{}]",
                        h.coefficients
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    out.write_record([
                        r.len.to_string(),
                        r.threshold.to_string(),
                        c,
                        h.failure_index.to_string(),
                    ])?;
                }
            }
            out.flush()?;
        }
        Format::Plain => {
            output::plain_header(&cfg);
            for r in &reports {
                writeln!(
                    w,
                    "L={} threshold={} candidates={} fails_early={} complete={} undecided={} counterexamples={}",
                    r.len,
                    r.threshold,
                    r.candidates,
                    r.fails_early,
                    r.complete,
                    r.undecided,
                    r.counterexamples.len()
                )?;
                for h in &r.counterexamples {
                    writeln!(
                        w,
                        "  COUNTEREXAMPLE {:?} first fails at n={}",
                        h.coefficients, h.failure_index
                    )?;
                }
            }
        }
    }
    w.flush()?;
    if total > 0 {
        return Err(CliError::Counterexamples(total));
    }
    Ok(())
}
