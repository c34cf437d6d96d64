use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::Coefficients;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Complete,
    Incomplete,
    Unknown,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Complete => "complete",
            VerdictKind::Incomplete => "incomplete",
            VerdictKind::Unknown => "unknown",
        }
    }

    /// True when one side says Complete and the other Incomplete.
    pub fn contradicts(self, other: VerdictKind) -> bool {
        matches!(
            (self, other),
            (VerdictKind::Complete, VerdictKind::Incomplete)
                | (VerdictKind::Incomplete, VerdictKind::Complete)
        )
    }
}

impl FromStr for VerdictKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(VerdictKind::Complete),
            "incomplete" => Ok(VerdictKind::Incomplete),
            "unknown" => Ok(VerdictKind::Unknown),
            _ => Err(()),
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named closed-form rules a verdict can rest on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// `[1, 0^k, N]` complete iff `N ≤ ⌈(k+2)(k+3)/4⌉`.
    OneZeros,
    /// `[1^g, 0^k, N]` with `g ≥ k`.
    OnesZeros,
    /// `[1, 1, 0^k, N]`; conjectured bound.
    TwoOnesZeros,
    /// `[1, 0^{L-m-2}, 1^m, N]`; rests on a conditional lemma.
    OneZerosOnes,
    /// Brown's criterion through `2L − 1` terms suffices (open conjecture).
    Conjecture2L1,
}

impl RuleId {
    pub const ALL: [RuleId; 5] = [
        RuleId::OneZeros,
        RuleId::OnesZeros,
        RuleId::TwoOnesZeros,
        RuleId::OneZerosOnes,
        RuleId::Conjecture2L1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::OneZeros => "one-zeros",
            RuleId::OnesZeros => "ones-zeros",
            RuleId::TwoOnesZeros => "two-ones-zeros",
            RuleId::OneZerosOnes => "one-zeros-ones",
            RuleId::Conjecture2L1 => "conj-2l1",
        }
    }

    /// Whether verdicts resting on this rule are theorems.
    pub fn proven(self) -> bool {
        matches!(self, RuleId::OneZeros | RuleId::OnesZeros)
    }
}

impl FromStr for RuleId {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL.into_iter().find(|r| r.as_str() == s).ok_or(())
    }
}

/// Which branch of the root-based triage produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriagePath {
    /// `p(2) < 0`: principal root above 2, so incomplete.
    TwoNegative,
    /// `p(λ_L) > 0`: principal root below `λ_L` (conjectural).
    BelowLambda,
    /// Principal root in the indeterminate band `[λ_L, 2]`.
    Indeterminate,
}

impl TriagePath {
    pub const ALL: [TriagePath; 3] = [
        TriagePath::TwoNegative,
        TriagePath::BelowLambda,
        TriagePath::Indeterminate,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TriagePath::TwoNegative => "p2-negative",
            TriagePath::BelowLambda => "below-lambda",
            TriagePath::Indeterminate => "indeterminate",
        }
    }

    pub fn note(self) -> &'static str {
        match self {
            TriagePath::TwoNegative => "principal root exceeds 2",
            TriagePath::BelowLambda => "principal root below lambda_L",
            TriagePath::Indeterminate => "principal root in indeterminate region [lambda_L, 2]",
        }
    }
}

impl FromStr for TriagePath {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TriagePath::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or(())
    }
}

/// Evidence attached to a [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `B_n ≥ 0` below `L` and `B_n > 0` on `[L, 2L−1]`; carries `2L − 1`.
    StrictWindow(usize),
    /// `B_n ≥ 0` through `m` and `L` consecutive non-negative doubling
    /// margins ending at `D_{m−1}`.
    DoublingWindow(usize),
    FamilyRule(RuleId),
    RootTriage(TriagePath),
    /// First index with a negative Brown's gap, and that gap.
    Failure {
        index: usize,
        gap: BigInt,
    },
    /// Nothing fired within this horizon.
    HorizonExhausted(usize),
}

impl Certificate {
    /// The `index` field of the JSON encoding.
    pub fn index(&self) -> Option<usize> {
        match self {
            Certificate::StrictWindow(m)
            | Certificate::DoublingWindow(m)
            | Certificate::HorizonExhausted(m) => Some(*m),
            Certificate::Failure { index, .. } => Some(*index),
            Certificate::FamilyRule(_) | Certificate::RootTriage(_) => None,
        }
    }
}

/// Writes the JSON `certificate` tag, e.g. `strict_window` or `family:one-zeros`.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::StrictWindow(_) => f.write_str("strict_window"),
            Certificate::DoublingWindow(_) => f.write_str("doubling_window"),
            Certificate::FamilyRule(r) => write!(f, "family:{}", r.as_str()),
            Certificate::RootTriage(p) => write!(f, "root:{}", p.as_str()),
            Certificate::Failure { .. } => f.write_str("failure"),
            Certificate::HorizonExhausted(_) => f.write_str("horizon"),
        }
    }
}

/// A completeness decision together with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub coefficients: Coefficients,
    pub kind: VerdictKind,
    pub certificate: Certificate,
    /// Set when the verdict rests on an unproven conjecture.
    pub conjectural: bool,
    pub horizon_used: usize,
}

impl Verdict {
    pub fn is_definite(&self) -> bool {
        self.kind != VerdictKind::Unknown
    }
}
