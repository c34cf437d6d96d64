use std::io::Write;

use serde::Serialize;

use plrs_core::generate_terms;

use crate::args::{Format, GenArgs};
use crate::error::CliError;
use crate::output::{self, RunConfig};
use crate::Context;

#[derive(Serialize)]
struct GenOutput<'a> {
    config: &'a RunConfig,
    coefficients: &'a [u64],
    /// Decimal strings; terms outgrow JSON numbers quickly.
    terms: Vec<String>,
}

pub fn run(ctx: &Context, a: &GenArgs) -> Result<(), CliError> {
    let c = ctx.coefficients(&a.coeffs)?;
    if a.n == 0 {
        return Err(CliError::Input("--n must be at least 1".into()));
    }
    let mut cfg = ctx.config("gen", Format::Plain);
    cfg.arg("coeffs", &c).arg("n", a.n);
    let terms: Vec<String> = generate_terms(&c, a.n)
        .terms()
        .iter()
        .map(ToString::to_string)
        .collect();

    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Plain => {
            output::plain_header(&cfg);
            writeln!(w, "{}", terms.join(" "))?;
        }
        Format::Json => output::json(
            &mut w,
            &GenOutput {
                config: &cfg,
                coefficients: c.as_slice(),
                terms,
            },
        )?,
        Format::Csv => {
            let mut out = output::csv_writer(&mut w, &cfg)?;
            out.write_record(["n", "term"])?;
            for (i, t) in terms.iter().enumerate() {
                out.write_record([(i + 1).to_string(), t.clone()])?;
            }
            out.flush()?;
        }
    }
    w.flush()?;
    Ok(())
}
