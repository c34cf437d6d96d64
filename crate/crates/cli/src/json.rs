//! JSON encoding of verdicts.
//!
//! ```json
//! {"coefficients":[1,3],"kind":"incomplete","certificate":"failure","index":3,"conjectural":false,"horizon_used":64}
//! ```
//!
//! The failure gap is not stored; decoding recomputes it from the
//! coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use plrs_core::brown::gap_at;
use plrs_core::{Certificate, CoeffError, Coefficients, RuleId, TriagePath, Verdict, VerdictKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub coefficients: Vec<u64>,
    pub kind: String,
    pub certificate: String,
    pub index: Option<usize>,
    pub conjectural: bool,
    pub horizon_used: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeError {
    Coefficients(CoeffError),
    Kind(String),
    Certificate(String),
    MissingIndex(String),
}

impl fmt::Display for DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodeError::Coefficients(e) => write!(f, "coefficients: {e}"),
            DecodeError::Kind(k) => write!(f, "unknown kind '{k}'"),
            DecodeError::Certificate(c) => write!(f, "unknown certificate '{c}'"),
            DecodeError::MissingIndex(c) => write!(f, "certificate '{c}' needs an index"),
        }
    }
}

impl std::error::Error for DecodeError {}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        VerdictRecord {
            coefficients: v.coefficients.as_slice().to_vec(),
            kind: v.kind.as_str().to_string(),
            certificate: v.certificate.to_string(),
            index: v.certificate.index(),
            conjectural: v.conjectural,
            horizon_used: v.horizon_used,
        }
    }
}

impl VerdictRecord {
    pub fn into_verdict(self) -> Result<Verdict, DecodeError> {
        let coefficients =
            Coefficients::new(self.coefficients).map_err(DecodeError::Coefficients)?;
        let kind: VerdictKind = self
            .kind
            .parse()
            .map_err(|_| DecodeError::Kind(self.kind.clone()))?;
        let index = || {
            self.index
                .ok_or_else(|| DecodeError::MissingIndex(self.certificate.clone()))
        };
        let bad = || DecodeError::Certificate(self.certificate.clone());
        let certificate = match self.certificate.as_str() {
            "strict_window" => Certificate::StrictWindow(index()?),
            "doubling_window" => Certificate::DoublingWindow(index()?),
            "horizon" => Certificate::HorizonExhausted(index()?),
            "failure" => {
                let index = index()?;
                let gap = gap_at(&coefficients, index).ok_or_else(bad)?;
                Certificate::Failure { index, gap }
            }
            tag => {
                if let Some(rule) = tag.strip_prefix("family:") {
                    Certificate::FamilyRule(rule.parse::<RuleId>().map_err(|_| bad())?)
                } else if let Some(path) = tag.strip_prefix("root:") {
                    Certificate::RootTriage(path.parse::<TriagePath>().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(Verdict {
            coefficients,
            kind,
            certificate,
            conjectural: self.conjectural,
            horizon_used: self.horizon_used,
        })
    }
}

/// Parses a verdict object; fields outside the schema are ignored.
pub fn decode(text: &str) -> Result<Verdict, String> {
    let rec: VerdictRecord = serde_json::from_str(text).map_err(|e| e.to_string())?;
    rec.into_verdict().map_err(|e| e.to_string())
}
