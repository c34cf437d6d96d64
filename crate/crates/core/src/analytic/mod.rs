//! Characteristic polynomials, principal roots and root-based triage.

mod poly;
mod root;
mod search;

use alloc::vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Certificate, Coefficients, TriagePath, Verdict, VerdictKind};

pub use poly::{char_poly_eval, CharPoly};
pub use root::{compare_roots, principal_root, principal_root_bits, tolerance_bits, RootBracket};
pub use search::{
    denseness_scan, enumerate_pls, exact_threshold_search, min_root_in_pls,
    min_root_in_pls_exhaustive, root_order_gap, smallest_root, DensenessReport, RootGap,
    ThresholdReport, DEFAULT_DENSENESS_CAP,
};

/// Tolerance used for reported decimal roots.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnalyticError {
    LengthTooSmall { len: usize, min: usize },
    CostCap { requested: u128, cap: u128 },
}

impl fmt::Display for AnalyticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyticError::LengthTooSmall { len, min } => {
                write!(f, "length {len} is below the minimum of {min}")
            }
            AnalyticError::CostCap { requested, cap } => {
                write!(f, "{requested} candidates exceed the cap of {cap}")
            }
        }
    }
}

impl core::error::Error for AnalyticError {}

/// `⌈L(L+1)/4⌉`.
pub fn n_l(len: usize) -> u64 {
    let l = len as u64;
    (l * (l + 1)).div_ceil(4)
}

/// Coefficients of `x^L − x^{L−1} − t`, i.e. `[1, 0, …, 0, t]`.
///
/// For `L = 1` this is the single coefficient `1 + t`.
pub fn trinomial(len: usize, t: u64) -> Coefficients {
    assert!(len >= 1 && t >= 1, "trinomial needs L >= 1 and t >= 1");
    if len == 1 {
        return Coefficients::new(vec![t + 1]).expect("positive");
    }
    let mut v = vec![0u64; len];
    v[0] = 1;
    v[len - 1] = t;
    Coefficients::new(v).expect("valid shape")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaThreshold {
    pub len: usize,
    pub n_l: u64,
    /// `[1, 0, …, 0, N_L + 1]`
    pub coefficients: Coefficients,
    pub lambda: RootBracket,
}

pub fn lambda_threshold(len: usize, tol: f64) -> Result<LambdaThreshold, AnalyticError> {
    if len < 2 {
        return Err(AnalyticError::LengthTooSmall { len, min: 2 });
    }
    let n = n_l(len);
    let coefficients = trinomial(len, n + 1);
    let lambda = principal_root(&coefficients, tol);
    Ok(LambdaThreshold {
        len,
        n_l: n,
        coefficients,
        lambda,
    })
}

/// Fast classification from the characteristic polynomial alone.
///
/// `p(2) < 0` proves incompleteness. A root certified below `λ_L` gives a
/// conjectural `Complete`. Everything else is left `Unknown`.
pub fn triage(c: &Coefficients) -> Verdict {
    let poly = CharPoly::new(c);
    let verdict = |kind, path, conjectural| Verdict {
        coefficients: c.clone(),
        kind,
        certificate: Certificate::RootTriage(path),
        conjectural,
        horizon_used: 0,
    };
    if poly.sign_at_int(2) == Ordering::Less {
        return verdict(VerdictKind::Incomplete, TriagePath::TwoNegative, false);
    }
    if c.len() >= 2 && compare_roots(c, &trinomial(c.len(), n_l(c.len()) + 1)) == Ordering::Less {
        return verdict(VerdictKind::Complete, TriagePath::BelowLambda, true);
    }
    verdict(VerdictKind::Unknown, TriagePath::Indeterminate, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn coeffs(v: &[u64]) -> Coefficients {
        Coefficients::new(v.to_vec()).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(
            lambda_threshold(1, 1e-9),
            Err(AnalyticError::LengthTooSmall { len: 1, min: 2 })
        );
        let l2 = lambda_threshold(2, 1e-9).unwrap();
        assert_eq!(l2.n_l, 2);
        assert!((l2.lambda.midpoint() - (1.0 + 13f64.sqrt()) / 2.0).abs() < 1e-9);
        let l3 = lambda_threshold(3, 1e-9).unwrap();
        assert_eq!((l3.n_l, l3.lambda.exact_root()), (3, Some(2)));
        let l4 = lambda_threshold(4, 1e-9).unwrap();
        assert_eq!(l4.n_l, 5);
        assert!(l4.lambda.hi_f64() < 2.0);
    }

    #[test]
    fn n_l_values() {
        let got: Vec<u64> = (1..=8).map(n_l).collect();
        assert_eq!(got, vec![1, 2, 3, 5, 8, 11, 14, 18]);
    }

    #[test]
    fn triage_examples() {
        let t = triage(&coeffs(&[1, 3]));
        assert_eq!(t.kind, VerdictKind::Incomplete);
        assert_eq!(
            t.certificate,
            Certificate::RootTriage(TriagePath::TwoNegative)
        );
        assert!(!t.conjectural);

        let t = triage(&coeffs(&[1, 1, 1, 0, 4]));
        assert_eq!(t.kind, VerdictKind::Unknown);
        assert_eq!(
            t.certificate,
            Certificate::RootTriage(TriagePath::Indeterminate)
        );

        let t = triage(&coeffs(&[1, 1]));
        assert_eq!(t.kind, VerdictKind::Complete);
        assert!(t.conjectural);

        // λ_3 = 2 exactly, and [1,1,2] has root 2: not strictly below
        assert_eq!(triage(&coeffs(&[1, 1, 2])).kind, VerdictKind::Unknown);
        assert_eq!(triage(&coeffs(&[3])).kind, VerdictKind::Incomplete);
        assert_eq!(triage(&coeffs(&[2])).kind, VerdictKind::Unknown);
    }
}
