//! The `plrs` command-line tool: argument definitions, file formats and
//! command implementations on top of `plrs-core`.

pub mod args;
pub mod commands;
pub mod error;
pub mod json;
pub mod output;
pub mod parse;

use std::io::Write;

use plrs_core::brown::EngineConfig;
use plrs_core::Coefficients;

use crate::args::{Cli, Command, Format, GlobalArgs};
use crate::error::CliError;
use crate::output::RunConfig;

/// Shared state for one invocation.
pub struct Context {
    pub global: GlobalArgs,
    pub jobs: usize,
    pool: rayon::ThreadPool,
}

impl Context {
    pub fn new(global: GlobalArgs) -> Result<Self, CliError> {
        let jobs = match global.jobs {
            Some(0) => return Err(CliError::Input("--jobs must be at least 1".into())),
            Some(n) => n,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        if global.tolerance.is_nan() || global.tolerance <= 0.0 {
            return Err(CliError::Input("--tolerance must be positive".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Failed(format!("cannot start worker pool: {e}")))?;
        Ok(Context { global, jobs, pool })
    }

    pub fn format(&self, default: Format) -> Format {
        self.global.format.unwrap_or(default)
    }

    pub fn config(&self, command: &'static str, default: Format) -> RunConfig {
        RunConfig::new(command, self.format(default), self.jobs, &self.global)
    }

    pub fn engine(&self, assume_2l1: bool) -> EngineConfig {
        EngineConfig {
            initial_horizon: None,
            max_horizon: self.global.max_horizon,
            assume_2l1,
        }
    }

    /// Runs `f` on the worker pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    pub fn writer(&self) -> Result<Box<dyn Write>, CliError> {
        output::open(self.global.out.as_deref()).map_err(CliError::Io)
    }

    pub fn coefficients(&self, s: &str) -> Result<Coefficients, CliError> {
        parse::coefficients(s).map_err(|e| CliError::Input(format!("coefficients '{s}': {e}")))
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Context::new(cli.global)?;
    match &cli.command {
        Command::Gen(a) => commands::gen::run(&ctx, a),
        Command::Check(a) => commands::check::run(&ctx, a),
        Command::FamilyTable(a) => commands::family_table::run(&ctx, a),
        Command::Scan2l1(a) => commands::scan::run(&ctx, a),
        Command::MinRoot(a) => commands::min_root::run(&ctx, a),
        Command::Dense(a) => commands::dense::run(&ctx, a),
        Command::OracleCheck(a) => commands::oracle::run(&ctx, a),
    }
}
