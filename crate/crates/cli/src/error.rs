use std::fmt;
use std::io;

use plrs_core::Verdict;

/// Everything that ends a run early. Each variant maps to an exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad coefficients, ranges or verdict files. Exit 2.
    Input(String),
    Io(io::Error),
    /// A computation could not finish or a certificate did not check out. Exit 1.
    Failed(String),
    /// `--require-definite` and the verdict is Unknown. Exit 3.
    Indefinite(Box<Verdict>),
    /// A conjecture scan found counterexamples. Exit 4.
    Counterexamples(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) | CliError::Failed(_) => 1,
            CliError::Indefinite(_) => 3,
            CliError::Counterexamples(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "invalid input: {msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Failed(msg) => f.write_str(msg),
            CliError::Indefinite(v) => write!(
                f,
                "no definite verdict for {} (certificate {})",
                v.coefficients, v.certificate
            ),
            CliError::Counterexamples(n) => write!(f, "{n} counterexample(s) found"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
