use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use serde::Serialize;

use plrs_core::analytic::triage;
use plrs_core::brown::{check_completeness, decide};
use plrs_core::certify::verify;
use plrs_core::{Certificate, Verdict};

use crate::args::{CheckArgs, Format};
use crate::error::CliError;
use crate::json::{self, VerdictRecord};
use crate::output::{self, RunConfig};
use crate::Context;

#[derive(Serialize)]
struct CheckOutput<'a> {
    #[serde(flatten)]
    verdict: VerdictRecord,
    /// `engine`, `triage`, or `triage+engine`.
    path: &'static str,
    /// Failure gap as a decimal string.
    gap: Option<String>,
    note: Option<&'static str>,
    config: &'a RunConfig,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    valid: bool,
    verdict: VerdictRecord,
    config: &'a RunConfig,
}

pub fn run(ctx: &Context, a: &CheckArgs) -> Result<(), CliError> {
    if let Some(path) = &a.verify {
        return run_verify(ctx, path);
    }
    let c = ctx.coefficients(a.coeffs.as_deref().unwrap_or_default())?;
    let mut cfg = ctx.config("check", Format::Json);
    cfg.arg("coeffs", &c)
        .arg(
            "horizon",
            a.horizon.map_or("adaptive".to_string(), |h| h.to_string()),
        )
        .arg("assume_2l1", a.assume_2l1)
        .arg("triage_first", a.triage_first)
        .arg("require_definite", a.require_definite);

    let engine = |c| -> Result<Verdict, CliError> {
        match a.horizon {
            Some(h) => {
                check_completeness(c, h, a.assume_2l1).map_err(|e| CliError::Input(e.to_string()))
            }
            None => Ok(decide(c, &ctx.engine(a.assume_2l1))),
        }
    };
    let (verdict, path) = if a.triage_first {
        let t = triage(&c);
        if t.is_definite() {
            (t, "triage")
        } else {
            (engine(&c)?, "triage+engine")
        }
    } else {
        (engine(&c)?, "engine")
    };

    let gap = match &verdict.certificate {
        Certificate::Failure { gap, .. } => Some(gap.to_string()),
        _ => None,
    };
    let note = match verdict.certificate {
        Certificate::RootTriage(p) => Some(p.note()),
        _ => None,
    };
    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Json => {
            let out = CheckOutput {
                verdict: VerdictRecord::from(&verdict),
                path,
                gap,
                note,
                config: &cfg,
            };
            output::json(&mut w, &out)?;
        }
        Format::Plain => {
            output::plain_header(&cfg);
            writeln!(w, "{}", describe(&verdict))?;
        }
        Format::Csv => {
            let mut out = output::csv_writer(&mut w, &cfg)?;
            out.write_record([
                "coefficients",
                "kind",
                "certificate",
                "index",
                "conjectural",
                "horizon_used",
                "path",
            ])?;
            out.write_record([
                verdict.coefficients.to_string(),
                verdict.kind.to_string(),
                verdict.certificate.to_string(),
                verdict
                    .certificate
                    .index()
                    .map(|i| i.to_string())
                    .unwrap_or_default(),
                verdict.conjectural.to_string(),
                verdict.horizon_used.to_string(),
                path.to_string(),
            ])?;
            out.flush()?;
        }
    }
    w.flush()?;
    if a.require_definite && !verdict.is_definite() {
        return Err(CliError::Indefinite(Box::new(verdict)));
    }
    Ok(())
}

/// One line such as `[1,3] incomplete failure n=3 gap=-1`.
pub fn describe(v: &Verdict) -> String {
    let mut s = format!("{} {} {}", v.coefficients, v.kind, v.certificate);
    match &v.certificate {
        Certificate::Failure { index, gap } => s.push_str(&format!(" n={index} gap={gap}")),
        other => {
            if let Some(i) = other.index() {
                s.push_str(&format!(" m={i}"));
            }
        }
    }
    if v.conjectural {
        s.push_str(" (conjectural)");
    }
    s
}

fn read_input(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn run_verify(ctx: &Context, path: &Path) -> Result<(), CliError> {
    let text = read_input(path)?;
    let verdict =
        json::decode(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut cfg = ctx.config("check", Format::Json);
    cfg.arg("verify", path.display());
    let result = verify(&verdict);

    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Json => {
            let out = VerifyOutput {
                valid: result.is_ok(),
                verdict: VerdictRecord::from(&verdict),
                config: &cfg,
            };
            output::json(&mut w, &out)?;
        }
        Format::Plain | Format::Csv => {
            output::plain_header(&cfg);
            let status = if result.is_ok() { "valid" } else { "INVALID" };
            writeln!(w, "{status} {}", describe(&verdict))?;
        }
    }
    w.flush()?;
    result.map_err(|e| CliError::Failed(format!("certificate rejected: {e}")))
}
