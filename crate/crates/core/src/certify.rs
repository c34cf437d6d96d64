//! Independent re-checking of verdict certificates.

use core::fmt;

use num_traits::Signed;

use crate::analytic::triage;
use crate::brown::{gap_trace, min_horizon};
use crate::families::{classify_family, FamilyShape};
use crate::{generate_terms, Certificate, RuleId, Verdict, VerdictKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    /// The certificate cannot support the claimed kind.
    KindMismatch {
        kind: VerdictKind,
        certificate: &'static str,
    },
    /// A recomputed quantity disagrees with the certificate.
    Mismatch(&'static str),
    /// The vector is not in the family the certificate names.
    NotInFamily(RuleId),
    /// The conjectural flag does not match the certificate.
    ConjecturalFlag { expected: bool },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::KindMismatch { kind, certificate } => {
                write!(
                    f,
                    "a {certificate} certificate cannot support {}",
                    kind.as_str()
                )
            }
            VerifyError::Mismatch(what) => write!(f, "certificate check failed: {what}"),
            VerifyError::NotInFamily(rule) => {
                write!(f, "vector is not in family {}", rule.as_str())
            }
            VerifyError::ConjecturalFlag { expected } => {
                write!(f, "conjectural flag should be {expected}")
            }
        }
    }
}

impl core::error::Error for VerifyError {}

fn expect(cond: bool, what: &'static str) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::Mismatch(what))
    }
}

fn expect_kind(
    v: &Verdict,
    kind: VerdictKind,
    certificate: &'static str,
) -> Result<(), VerifyError> {
    if v.kind == kind {
        Ok(())
    } else {
        Err(VerifyError::KindMismatch {
            kind: v.kind,
            certificate,
        })
    }
}

fn expect_flag(v: &Verdict, expected: bool) -> Result<(), VerifyError> {
    if v.conjectural == expected {
        Ok(())
    } else {
        Err(VerifyError::ConjecturalFlag { expected })
    }
}

/// Re-derives the evidence behind `v` from its coefficients alone.
///
/// Gap certificates are recomputed from fresh terms, family rules are
/// re-recognised and re-classified, and triage is re-run.
pub fn verify(v: &Verdict) -> Result<(), VerifyError> {
    let c = &v.coefficients;
    let big_l = c.len();
    match &v.certificate {
        Certificate::Failure { index, gap } => {
            expect_kind(v, VerdictKind::Incomplete, "failure")?;
            expect_flag(v, false)?;
            expect(*index >= 1, "failure index is 1-based")?;
            let trace = gap_trace(&generate_terms(c, *index));
            expect(trace.gap(*index) == Some(gap), "failure gap value")?;
            expect(gap.is_negative(), "failure gap is negative")?;
            expect(
                trace.first_negative(*index) == Some(*index),
                "failure is the first negative gap",
            )
        }
        Certificate::StrictWindow(m) => {
            expect_kind(v, VerdictKind::Complete, "strict window")?;
            expect_flag(v, false)?;
            expect(*m == min_horizon(c), "strict window ends at 2L-1")?;
            let trace = gap_trace(&generate_terms(c, *m));
            expect(
                trace.first_negative(*m).is_none(),
                "gaps before the window are non-negative",
            )?;
            expect(
                (big_l..=*m).all(|n| trace.gap(n).is_some_and(Signed::is_positive)),
                "window gaps are positive",
            )
        }
        Certificate::DoublingWindow(m) => {
            expect_kind(v, VerdictKind::Complete, "doubling window")?;
            expect_flag(v, false)?;
            expect(*m >= 2 * big_l, "doubling window starts at 2L")?;
            let trace = gap_trace(&generate_terms(c, *m));
            expect(
                trace.first_negative(*m).is_none(),
                "gaps up to the window are non-negative",
            )?;
            expect(
                (*m - big_l..*m).all(|j| trace.margin(j).is_some_and(|d| !d.is_negative())),
                "window margins are non-negative",
            )
        }
        Certificate::HorizonExhausted(m) => {
            expect_kind(v, VerdictKind::Unknown, "horizon")?;
            expect(*m >= min_horizon(c), "horizon reaches 2L-1")?;
            let trace = gap_trace(&generate_terms(c, *m));
            expect(
                trace.first_negative(*m).is_none(),
                "no failure inside the horizon",
            )
        }
        Certificate::FamilyRule(RuleId::Conjecture2L1) => {
            expect_kind(v, VerdictKind::Complete, "2L-1 rule")?;
            expect_flag(v, true)?;
            let m = min_horizon(c);
            let trace = gap_trace(&generate_terms(c, m));
            expect(
                trace.first_negative(m).is_none(),
                "gaps through 2L-1 are non-negative",
            )
        }
        Certificate::FamilyRule(rule) => {
            let (shape, n) =
                FamilyShape::recognise(*rule, c).ok_or(VerifyError::NotInFamily(*rule))?;
            let fresh = classify_family(&shape, n).map_err(|_| VerifyError::NotInFamily(*rule))?;
            expect(fresh.certificate == v.certificate, "family rule")?;
            expect_kind(v, fresh.kind, "family")?;
            expect_flag(v, fresh.conjectural)
        }
        Certificate::RootTriage(_) => {
            let fresh = triage(c);
            expect(fresh.certificate == v.certificate, "triage path")?;
            expect_kind(v, fresh.kind, "triage")?;
            expect_flag(v, fresh.conjectural)
        }
    }
}
