use std::io::Write;

use serde::Serialize;

use plrs_core::brown::{default_horizon, min_horizon};
use plrs_core::oracle::{affordable_prefix, oracle_verdict, OracleError, RepresentabilityReport};

use crate::args::{Format, OracleArgs};
use crate::error::CliError;
use crate::json::VerdictRecord;
use crate::output::{self, RunConfig};
use crate::Context;

#[derive(Serialize)]
struct Witness {
    prefix_length: usize,
    reachable_bound: u64,
    smallest_missing: Option<u64>,
    permanently_missing: Option<u64>,
}

impl From<&RepresentabilityReport> for Witness {
    fn from(r: &RepresentabilityReport) -> Self {
        Witness {
            prefix_length: r.prefix_length,
            reachable_bound: r.reachable_bound,
            smallest_missing: r.smallest_missing,
            permanently_missing: r.permanently_missing,
        }
    }
}

#[derive(Serialize)]
struct Output<'a> {
    #[serde(flatten)]
    verdict: VerdictRecord,
    prefix: usize,
    witness: Option<Witness>,
    config: &'a RunConfig,
}

pub fn run(ctx: &Context, a: &OracleArgs) -> Result<(), CliError> {
    let c = ctx.coefficients(&a.coeffs)?;
    let budget = ctx.global.budget_bits;
    let prefix = a
        .prefix
        .unwrap_or_else(|| affordable_prefix(&c, default_horizon(&c), budget));
    let mut cfg = ctx.config("oracle-check", Format::Json);
    cfg.arg("coeffs", &c).arg("prefix", prefix);
    let o = oracle_verdict(&c, prefix, budget).map_err(|e| match e {
        OracleError::PrefixTooShort { .. } if a.prefix.is_some() => CliError::Input(e.to_string()),
        _ => CliError::Failed(format!(
            "{e}; at most {} terms fit in {budget} bits, {} are required",
            affordable_prefix(&c, prefix, budget),
            min_horizon(&c)
        )),
    })?;

    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Json => output::json(
            &mut w,
            &Output {
                verdict: VerdictRecord::from(&o.verdict),
                prefix,
                witness: o.witness.as_ref().map(Witness::from),
                config: &cfg,
            },
        )?,
        Format::Plain | Format::Csv => {
            output::plain_header(&cfg);
            write!(w, "{}", super::check::describe(&o.verdict))?;
            if let Some(m) = o.witness.as_ref().and_then(|r| r.permanently_missing) {
                write!(w, " missing={m}")?;
            }
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}
