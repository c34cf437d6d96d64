use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use plrs_core::explore::{max_n_search, SearchError};
use plrs_core::families::FamilyShape;

use crate::args::{Family, FamilyTableArgs, Format};
use crate::error::CliError;
use crate::output::{self, RunConfig};
use crate::Context;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub family: Family,
    /// Total number of coefficients, `N` included.
    pub len: usize,
    pub g: usize,
    pub k: usize,
    pub max_n_theorem: Option<u64>,
    pub max_n_search: Option<u64>,
    /// `theorem`, `conjecture`, or `none` when no formula applies.
    pub basis: &'static str,
    /// `match`, `mismatch`, `unchecked` (no formula) or `search-failed`.
    pub status: &'static str,
}

#[derive(Serialize)]
struct TableOutput<'a> {
    config: &'a RunConfig,
    rows: &'a [Row],
}

fn cells(a: &FamilyTableArgs) -> Vec<(usize, usize, FamilyShape)> {
    let mut out = Vec::new();
    for k in a.k.clone() {
        match a.family {
            Family::OneZeros => out.push((1, k, FamilyShape::OneZerosN { k })),
            Family::TwoOnesZeros => out.push((2, k, FamilyShape::TwoOnesZerosN { k })),
            Family::OnesZeros => {
                for g in a.g.clone().filter(|&g| g >= 1 && k >= 1) {
                    out.push((g, k, FamilyShape::OnesZerosN { g, k }));
                }
            }
            Family::OneZerosOnes => {
                for m in a.g.clone().filter(|_| k >= 1) {
                    out.push((m, k, FamilyShape::OneZerosOnesN { len: k + m + 2, m }));
                }
            }
        }
    }
    out.sort_by_key(|&(g, k, _)| (g, k));
    out
}

pub fn table(ctx: &Context, a: &FamilyTableArgs) -> Vec<Row> {
    let engine = ctx.engine(false);
    ctx.install(|| {
        cells(a)
            .into_par_iter()
            .map(|(g, k, shape)| {
                let bound = shape.bound().ok();
                let searched = max_n_search(&shape, a.n_limit, &engine);
                let status = match (&bound, &searched) {
                    (
                        _,
                        Err(
                            SearchError::Undecided(_)
                            | SearchError::LimitReached(_)
                            | SearchError::Shape(_),
                        ),
                    ) => "search-failed",
                    (None, Ok(_)) => "unchecked",
                    (Some(b), Ok(n)) if b.max_n == *n => "match",
                    (Some(_), Ok(_)) => "mismatch",
                };
                Row {
                    family: a.family,
                    len: shape.prefix().map_or(0, |p| p.len() + 1),
                    g,
                    k,
                    max_n_theorem: bound.map(|b| b.max_n),
                    max_n_search: searched.ok(),
                    basis: match bound {
                        Some(b) if b.proven => "theorem",
                        Some(_) => "conjecture",
                        None => "none",
                    },
                    status,
                }
            })
            .collect()
    })
}

pub fn run(ctx: &Context, a: &FamilyTableArgs) -> Result<(), CliError> {
    let mut cfg = ctx.config("family-table", Format::Csv);
    cfg.arg(
        "family",
        serde_json::to_value(a.family)?.as_str().unwrap_or_default(),
    )
    .arg("g", format!("{}..={}", a.g.start(), a.g.end()))
    .arg("k", format!("{}..={}", a.k.start(), a.k.end()))
    .arg("n_limit", a.n_limit);
    let rows = table(ctx, a);
    let opt = |v: Option<u64>| v.map(|n| n.to_string()).unwrap_or_default();

    let mut w = ctx.writer()?;
    match cfg.format {
        Format::Csv => {
            let mut out = output::csv_writer(&mut w, &cfg)?;
            out.write_record(["g", "k", "maxN_theorem", "maxN_search", "basis", "status"])?;
            for r in &rows {
                out.write_record([
                    r.g.to_string(),
                    r.k.to_string(),
                    opt(r.max_n_theorem),
                    opt(r.max_n_search),
                    r.basis.to_string(),
                    r.status.to_string(),
                ])?;
            }
            out.flush()?;
        }
        Format::Json => output::json(
            &mut w,
            &TableOutput {
                config: &cfg,
                rows: &rows,
            },
        )?,
        Format::Plain => {
            output::plain_header(&cfg);
            writeln!(
                w,
                "{:>3} {:>3} {:>12} {:>12}  basis       status",
                "g", "k", "theorem", "search"
            )?;
            for r in &rows {
                let cell = |v: Option<u64>| v.map_or("-".to_string(), |n| n.to_string());
                writeln!(
                    w,
                    "{:>3} {:>3} {:>12} {:>12}  {:<11} {}",
                    r.g,
                    r.k,
                    cell(r.max_n_theorem),
                    cell(r.max_n_search),
                    r.basis,
                    r.status
                )?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
