use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::args::{Format, GlobalArgs};

/// The effective settings of a run, echoed into every output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub format: Format,
    pub jobs: usize,
    pub tolerance: f64,
    pub max_horizon: usize,
    pub budget_bits: u64,
    pub args: BTreeMap<&'static str, String>,
}

impl RunConfig {
    pub fn new(command: &'static str, format: Format, jobs: usize, g: &GlobalArgs) -> Self {
        RunConfig {
            command,
            format,
            jobs,
            tolerance: g.tolerance,
            max_horizon: g.max_horizon,
            budget_bits: g.budget_bits,
            args: BTreeMap::new(),
        }
    }

    pub fn arg(&mut self, key: &'static str, value: impl ToString) -> &mut Self {
        self.args.insert(key, value.to_string());
        self
    }

    /// One-line form for CSV comments and stderr.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "plrs {} format={} jobs={} tolerance={:e} max_horizon={} budget_bits={}",
            self.command,
            serde_json::to_value(self.format)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default(),
            self.jobs,
            self.tolerance,
            self.max_horizon,
            self.budget_bits
        );
        for (k, v) in &self.args {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}

pub fn open(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn json<T: Serialize>(w: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)
}

/// A CSV writer whose first line is the run config as a `#` comment.
pub fn csv_writer<'a>(
    w: &'a mut dyn Write,
    cfg: &RunConfig,
) -> io::Result<csv::Writer<&'a mut dyn Write>> {
    writeln!(w, "# {}", cfg.summary())?;
    Ok(csv::Writer::from_writer(w))
}

/// Plain output keeps stdout clean; the config goes to stderr.
pub fn plain_header(cfg: &RunConfig) {
    eprintln!("# {}", cfg.summary());
}
