//! Per-candidate steps of the exhaustive searches.
//!
//! Each function looks at one coefficient vector or one family shape, so
//! callers can fan candidates out over threads and merge in order.

use core::fmt;

use crate::brown::{brown_holds_through, decide, default_horizon, min_horizon, EngineConfig};
use crate::families::FamilyShape;
use crate::oracle::{affordable_prefix, oracle_verdict, DEFAULT_BUDGET_BITS};
use crate::{Certificate, Coefficients, Verdict, VerdictKind};

/// Engine verdict, falling back to the oracle when the engine gives up.
pub fn judge(c: &Coefficients, cfg: &EngineConfig) -> Verdict {
    let v = decide(c, cfg);
    if v.is_definite() {
        return v;
    }
    match oracle_check(c) {
        Some(o) if o.is_definite() => o,
        _ => v,
    }
}

/// Oracle verdict on the longest affordable prefix, capped at the
/// engine's default horizon. `None` if not even `2L − 1` terms fit.
pub fn oracle_check(c: &Coefficients) -> Option<Verdict> {
    let prefix = affordable_prefix(c, default_horizon(c), DEFAULT_BUDGET_BITS);
    if prefix < min_horizon(c) {
        return None;
    }
    oracle_verdict(c, prefix, DEFAULT_BUDGET_BITS)
        .ok()
        .map(|o| o.verdict)
}

/// A vector that satisfies Brown's criterion up to a threshold but is
/// incomplete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub coefficients: Coefficients,
    pub threshold: usize,
    pub failure_index: usize,
}

/// Where one vector lands in a `2L − 1` scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    /// Brown's criterion already fails within the threshold.
    FailsEarly,
    Complete,
    Undecided,
    Counterexample(Counterexample),
}

/// Tests the claim "`B_n ≥ 0` for `n ≤ threshold` implies complete" on `c`.
pub fn scan_2l1(c: &Coefficients, threshold: usize, cfg: &EngineConfig) -> ScanOutcome {
    if !brown_holds_through(c, threshold) {
        return ScanOutcome::FailsEarly;
    }
    let v = judge(c, cfg);
    match (v.kind, v.certificate) {
        (VerdictKind::Complete, _) => ScanOutcome::Complete,
        (VerdictKind::Incomplete, Certificate::Failure { index, .. }) => {
            ScanOutcome::Counterexample(Counterexample {
                coefficients: c.clone(),
                threshold,
                failure_index: index,
            })
        }
        _ => ScanOutcome::Undecided,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    /// Neither engine nor oracle could classify this member.
    Undecided(Coefficients),
    /// Still complete at the search limit.
    LimitReached(u64),
    Shape(&'static str),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::Undecided(c) => write!(f, "could not classify {c}"),
            SearchError::LimitReached(n) => write!(f, "still complete at N = {n}"),
            SearchError::Shape(why) => write!(f, "invalid family shape: {why}"),
        }
    }
}

impl core::error::Error for SearchError {}

/// Largest `N` for which `[prefix, N]` is judged complete, or 0 if none is.
///
/// Relies on completeness being downward closed in `N`: the search
/// doubles until the first incomplete member, then bisects.
pub fn max_n_search(
    shape: &FamilyShape,
    limit: u64,
    cfg: &EngineConfig,
) -> Result<u64, SearchError> {
    let complete = |n: u64| -> Result<bool, SearchError> {
        let c = shape
            .vector(n)
            .map_err(|_| SearchError::Shape("family vector"))?;
        match judge(&c, cfg).kind {
            VerdictKind::Complete => Ok(true),
            VerdictKind::Incomplete => Ok(false),
            VerdictKind::Unknown => Err(SearchError::Undecided(c)),
        }
    };
    if !complete(1)? {
        return Ok(0);
    }
    let (mut lo, mut hi) = (1u64, 2u64);
    while complete(hi)? {
        if hi >= limit {
            return Err(SearchError::LimitReached(hi));
        }
        lo = hi;
        hi = hi.saturating_mul(2).min(limit);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if complete(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}
