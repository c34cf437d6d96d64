use std::io::Write;

use serde::Serialize;

use plrs_core::analytic::{denseness_scan, DensenessReport};

use super::RootRecord;
use crate::args::{DenseArgs, Format};
use crate::error::CliError;
use crate::output::{self, RunConfig};
use crate::Context;

#[derive(Serialize)]
struct Row {
    k: u64,
    #[serde(flatten)]
    root: RootRecord,
}

#[derive(Serialize)]
struct Output<'a> {
    config: &'a RunConfig,
    len: usize,
    epsilon: f64,
    max_gap: f64,
    within_epsilon: bool,
    covered: Option<(f64, f64)>,
    strictly_increasing: bool,
    gaps_decreasing: bool,
    ends_at_two: bool,
    roots: Vec<Row>,
}

pub fn run(ctx: &Context, a: &DenseArgs) -> Result<(), CliError> {
    if a.epsilon.is_nan() || a.epsilon <= 0.0 {
        return Err(CliError::Input("--epsilon must be positive".into()));
    }
    let mut cfg = ctx.config("dense", Format::Csv);
    cfg.arg("L", a.len)
        .arg("epsilon", a.epsilon)
        .arg("cap", a.cap);
    let r = denseness_scan(a.len, a.epsilon, a.cap).map_err(|e| CliError::Input(e.to_string()))?;

    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Csv => {
            writeln!(w, "# {}", cfg.summary())?;
            writeln!(w, "# {}", summary(&r))?;
            let mut out = csv::Writer::from_writer(&mut w);
            out.write_record(["k", "root", "lo", "hi", "exact"])?;
            for (k, b) in &r.roots {
                let rec = RootRecord::from(b);
                out.write_record([
                    k.to_string(),
                    rec.root.to_string(),
                    rec.lo.to_string(),
                    rec.hi.to_string(),
                    rec.exact.map(|e| e.to_string()).unwrap_or_default(),
                ])?;
            }
            out.flush()?;
        }
        Format::Json => output::json(
            &mut w,
            &Output {
                config: &cfg,
                len: r.len,
                epsilon: r.epsilon,
                max_gap: r.max_gap,
                within_epsilon: r.within_epsilon(),
                covered: r.covered,
                strictly_increasing: r.strictly_increasing,
                gaps_decreasing: r.gaps_decreasing,
                ends_at_two: r.ends_at_two,
                roots: r
                    .roots
                    .iter()
                    .map(|(k, b)| Row {
                        k: *k,
                        root: RootRecord::from(b),
                    })
                    .collect(),
            },
        )?,
        Format::Plain => {
            output::plain_header(&cfg);
            writeln!(w, "{}", summary(&r))?;
        }
    }
    w.flush()?;
    let certified =
        r.roots.is_empty() || (r.strictly_increasing && r.gaps_decreasing && r.ends_at_two);
    if !certified {
        return Err(CliError::Failed(
            "root ordering could not be certified".into(),
        ));
    }
    Ok(())
}

fn summary(r: &DensenessReport) -> String {
    let covered = r
        .covered
        .map_or("none".to_string(), |(lo, hi)| format!("[{lo}, {hi}]"));
    format!(
        "L={} roots={} covered={} max_gap={:e} within_epsilon={} strictly_increasing={} gaps_decreasing={} ends_at_two={}",
        r.len,
        r.roots.len(),
        covered,
        r.max_gap,
        r.within_epsilon(),
        r.strictly_increasing,
        r.gaps_decreasing,
        r.ends_at_two
    )
}
