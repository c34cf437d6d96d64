//! Brown's gaps and the completeness verdict engine.
//!
//! For a prefix `H_1, …, H_m` the n-th Brown's gap is
//! `B_n = 1 + Σ_{i<n} H_i − H_n` and the doubling margin is
//! `D_n = 2 H_n − H_{n+1} = B_{n+1} − B_n`. A PLRS is complete iff every
//! gap is non-negative; the engine looks for a finite certificate of either
//! outcome:
//!
//! * a negative gap (`Failure`) proves incompleteness;
//! * strictly positive gaps on `[L, 2L−1]` (`StrictWindow`) prove
//!   completeness;
//! * `L` consecutive non-negative margins (`DoublingWindow`) prove
//!   completeness, because for `n ≥ L+1` the margins obey
//!   `D_n = Σ c_i D_{n−i}` and so stay non-negative forever, making the gaps
//!   nondecreasing.
//!
//! All arithmetic is exact.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};

use crate::{
    generate_terms, Certificate, Coefficients, RuleId, TermSequence, Verdict, VerdictKind,
};

/// Brown's gaps `B_1..B_m` and doubling margins `D_1..D_{m−1}` of a prefix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GapTrace {
    gaps: Vec<BigInt>,
    margins: Vec<BigInt>,
    // 1 + Σ of the terms covered so far
    running: BigInt,
    last: Option<BigInt>,
}

impl GapTrace {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[BigInt] {
        &self.gaps
    }

    pub fn margins(&self) -> &[BigInt] {
        &self.margins
    }

    /// `B_n`, 1-based.
    pub fn gap(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.gaps.get(i))
    }

    /// `D_n`, 1-based.
    pub fn margin(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.margins.get(i))
    }

    /// First `n` with `B_n < 0` among the first `upto` gaps.
    pub fn first_negative(&self, upto: usize) -> Option<usize> {
        self.gaps
            .iter()
            .take(upto)
            .position(|b| b.sign() == Sign::Minus)
            .map(|i| i + 1)
    }

    /// Appends the gaps for any terms of `t` not yet covered.
    pub fn extend(&mut self, t: &TermSequence) {
        if self.gaps.is_empty() {
            self.running = BigInt::one();
        }
        for h in &t.terms()[self.gaps.len()..] {
            let h = BigInt::from(h.clone());
            if let Some(prev) = self.last.take() {
                self.margins.push((&prev << 1u32) - &h);
            }
            self.gaps.push(&self.running - &h);
            self.running += &h;
            self.last = Some(h);
        }
    }
}

/// Gaps and margins for every term of `t`.
pub fn gap_trace(t: &TermSequence) -> GapTrace {
    let mut g = GapTrace::default();
    g.extend(t);
    g
}

/// Smallest `n ≤ horizon` with `B_n < 0`.
pub fn first_failure_index(c: &Coefficients, horizon: usize) -> Option<usize> {
    if horizon == 0 {
        return None;
    }
    gap_trace(&generate_terms(c, horizon)).first_negative(horizon)
}

/// `H_n ≤ 2 H_{n−1}` for every adjacent pair of the prefix.
///
/// Diagnostic only: a finite prefix passing this does not certify anything,
/// and complete sequences can fail it.
pub fn doubling_holds(t: &TermSequence) -> bool {
    t.terms().windows(2).all(|w| w[1] <= &w[0] << 1u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrownError {
    /// The horizon must reach `2L − 1`.
    HorizonTooSmall { horizon: usize, required: usize },
}

impl fmt::Display for BrownError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrownError::HorizonTooSmall { horizon, required } => {
                write!(
                    f,
                    "horizon {horizon} is below the required 2L-1 = {required}"
                )
            }
        }
    }
}

impl core::error::Error for BrownError {}

/// `2L − 1`, the smallest admissible horizon.
pub fn min_horizon(c: &Coefficients) -> usize {
    2 * c.len() - 1
}

/// `max(4L, 64)`.
pub fn default_horizon(c: &Coefficients) -> usize {
    (4 * c.len()).max(64)
}

/// Decides completeness from the first `horizon` terms.
///
/// Certificates are tried in order: failure, strict window, doubling window,
/// and (only with `assume_2l1`) the conjectural `2L − 1` rule.
pub fn check_completeness(
    c: &Coefficients,
    horizon: usize,
    assume_2l1: bool,
) -> Result<Verdict, BrownError> {
    let required = min_horizon(c);
    if horizon < required {
        return Err(BrownError::HorizonTooSmall { horizon, required });
    }
    let trace = gap_trace(&generate_terms(c, horizon));
    Ok(evaluate(c, &trace, horizon, assume_2l1))
}

fn evaluate(c: &Coefficients, trace: &GapTrace, horizon: usize, assume_2l1: bool) -> Verdict {
    let big_l = c.len();
    let verdict = |kind, certificate, conjectural| Verdict {
        coefficients: c.clone(),
        kind,
        certificate,
        conjectural,
        horizon_used: horizon,
    };

    if let Some(index) = trace.first_negative(horizon) {
        let gap = trace.gaps[index - 1].clone();
        return verdict(
            VerdictKind::Incomplete,
            Certificate::Failure { index, gap },
            false,
        );
    }

    // Every gap up to the horizon is non-negative from here on.
    if (big_l..=2 * big_l - 1).all(|n| trace.gaps[n - 1].is_positive()) {
        return verdict(
            VerdictKind::Complete,
            Certificate::StrictWindow(2 * big_l - 1),
            false,
        );
    }

    if let Some(m) = doubling_window(trace, big_l, horizon) {
        return verdict(VerdictKind::Complete, Certificate::DoublingWindow(m), false);
    }

    if assume_2l1 {
        return verdict(
            VerdictKind::Complete,
            Certificate::FamilyRule(RuleId::Conjecture2L1),
            true,
        );
    }

    verdict(
        VerdictKind::Unknown,
        Certificate::HorizonExhausted(horizon),
        false,
    )
}

/// Smallest `m ∈ [2L, horizon]` with `D_j ≥ 0` for all `j ∈ [m−L, m−1]`.
fn doubling_window(trace: &GapTrace, big_l: usize, horizon: usize) -> Option<usize> {
    let mut run = 0usize;
    for j in 1..horizon.min(trace.len()) {
        if trace.margins[j - 1].is_negative() {
            run = 0;
        } else {
            run += 1;
        }
        let m = j + 1;
        if m >= 2 * big_l && run >= big_l {
            return Some(m);
        }
    }
    None
}

/// Horizon policy for [`decide`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Starting horizon; `None` means [`default_horizon`].
    pub initial_horizon: Option<usize>,
    /// The horizon doubles until it would pass this cap.
    pub max_horizon: usize,
    pub assume_2l1: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            initial_horizon: None,
            max_horizon: 1024,
            assume_2l1: false,
        }
    }
}

/// [`check_completeness`] with a geometrically growing horizon.
///
/// Terms and gaps are extended in place between rounds. Returns Unknown
/// only once the cap has been examined.
pub fn decide(c: &Coefficients, cfg: &EngineConfig) -> Verdict {
    let floor = min_horizon(c);
    let cap = cfg.max_horizon.max(floor);
    let mut horizon = cfg
        .initial_horizon
        .unwrap_or_else(|| default_horizon(c))
        .clamp(floor, cap);
    let mut terms = generate_terms(c, horizon);
    let mut trace = gap_trace(&terms);
    loop {
        let v = evaluate(c, &trace, horizon, cfg.assume_2l1);
        if v.is_definite() || horizon >= cap {
            return v;
        }
        horizon = (horizon * 2).min(cap);
        terms.extend_to(horizon);
        trace.extend(&terms);
    }
}

/// `B_n` for the sequence generated by `c`, recomputed from scratch.
pub fn gap_at(c: &Coefficients, n: usize) -> Option<BigInt> {
    if n == 0 {
        return None;
    }
    let t = generate_terms(c, n);
    let sum: BigInt = t.terms()[..n - 1]
        .iter()
        .map(|h| BigInt::from(h.clone()))
        .sum();
    Some(BigInt::one() + sum - BigInt::from(t.get(n)?.clone()))
}

/// True when `B_n ≥ 0` for every `n ≤ upto`.
pub fn brown_holds_through(c: &Coefficients, upto: usize) -> bool {
    upto == 0
        || gap_trace(&generate_terms(c, upto))
            .first_negative(upto)
            .is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use num_bigint::BigUint;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn coeffs(v: &[u64]) -> Coefficients {
        Coefficients::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn gap_examples() {
        let g = gap_trace(&generate_terms(&coeffs(&[1, 3]), 3));
        assert_eq!(ints(g.gaps()), vec![0, 0, -1]);
        let g = gap_trace(&generate_terms(&coeffs(&[2]), 4));
        assert_eq!(ints(g.gaps()), vec![0, 0, 0, 0]);
        assert_eq!(ints(g.margins()), vec![0, 0, 0]);
        let g = gap_trace(&generate_terms(&coeffs(&[1, 0, 3]), 5));
        assert_eq!(ints(g.gaps()), vec![0, 0, 1, 1, 1]);
        assert_eq!(g.gap(3), Some(&BigInt::from(1)));
        assert_eq!(g.gap(0), None);
    }

    #[test]
    fn early_gaps_can_be_negative() {
        // H_2 = c_1 + 1 exceeds 1 + H_1 once c_1 >= 2
        let g = gap_trace(&generate_terms(&coeffs(&[2, 0, 1]), 3));
        assert_eq!(ints(g.gaps()), vec![0, -1, -2]);
        let v = check_completeness(&coeffs(&[2, 0, 1]), 5, false).unwrap();
        assert_eq!(
            v.certificate,
            Certificate::Failure {
                index: 2,
                gap: BigInt::from(-1)
            }
        );
    }

    #[test]
    fn check_examples() {
        let v = check_completeness(&coeffs(&[1, 3]), 10, false).unwrap();
        assert_eq!(v.kind, VerdictKind::Incomplete);
        assert_eq!(
            v.certificate,
            Certificate::Failure {
                index: 3,
                gap: BigInt::from(-1)
            }
        );

        let v = check_completeness(&coeffs(&[1, 1]), 10, false).unwrap();
        assert_eq!(v.kind, VerdictKind::Complete);
        assert!(!v.conjectural);

        let v = check_completeness(&coeffs(&[2]), 10, false).unwrap();
        assert_eq!(v.kind, VerdictKind::Complete);
        assert!(matches!(v.certificate, Certificate::DoublingWindow(_)));

        let v = check_completeness(&coeffs(&[1, 1, 1, 0, 4]), 20, false).unwrap();
        assert_eq!(v.kind, VerdictKind::Incomplete);

        let v = check_completeness(&coeffs(&[1, 1, 0, 4]), 20, false).unwrap();
        assert_eq!(v.certificate.index(), Some(7));
        assert_eq!(v.kind, VerdictKind::Incomplete);
    }

    #[test]
    fn strict_window_fires_on_positive_gaps() {
        // [1,0,3]: gaps (0,0,1,1,1,...) are positive on [3, 5]
        let v = check_completeness(&coeffs(&[1, 0, 3]), 5, false).unwrap();
        assert_eq!(v.certificate, Certificate::StrictWindow(5));
    }

    #[test]
    fn boundary_sequences_need_the_doubling_window() {
        for big_l in 2..8 {
            let mut v = vec![1; big_l];
            v[big_l - 1] = 2;
            let verdict = check_completeness(&coeffs(&v), 4 * big_l, false).unwrap();
            assert_eq!(
                verdict.certificate,
                Certificate::DoublingWindow(2 * big_l),
                "L={big_l}"
            );
        }
    }

    #[test]
    fn horizon_too_small() {
        assert_eq!(
            check_completeness(&coeffs(&[1, 0, 3]), 4, false),
            Err(BrownError::HorizonTooSmall {
                horizon: 4,
                required: 5
            })
        );
    }

    #[test]
    fn conjectural_rule_is_opt_in() {
        // a failure inside the window still wins
        let v = check_completeness(&coeffs(&[1, 1, 1, 0, 4]), 9, true).unwrap();
        assert_eq!(v.kind, VerdictKind::Incomplete);
        // [1,1,2] has all-zero gaps; at horizon 2L-1 no proven window can fire
        let c = coeffs(&[1, 1, 2]);
        let plain = check_completeness(&c, 5, false).unwrap();
        assert_eq!(plain.kind, VerdictKind::Unknown);
        assert_eq!(plain.certificate, Certificate::HorizonExhausted(5));
        let assumed = check_completeness(&c, 5, true).unwrap();
        assert_eq!(assumed.kind, VerdictKind::Complete);
        assert!(assumed.conjectural);
        assert_eq!(
            assumed.certificate,
            Certificate::FamilyRule(RuleId::Conjecture2L1)
        );
    }

    #[test]
    fn first_failure_examples() {
        assert_eq!(first_failure_index(&coeffs(&[1, 0, 4]), 50), Some(5));
        assert_eq!(first_failure_index(&coeffs(&[1, 1, 1, 0, 4]), 50), Some(9));
        assert_eq!(first_failure_index(&coeffs(&[1, 1]), 50), None);
        assert_eq!(first_failure_index(&coeffs(&[1, 3]), 2), None);
    }

    #[test]
    fn doubling_examples() {
        let seq = |c: &[u64], n| generate_terms(&coeffs(c), n);
        assert!(doubling_holds(&seq(&[2], 4)));
        // (1,2,3,5,11): 11 > 2*5, yet [1,0,1,4] is complete
        assert!(!doubling_holds(&seq(&[1, 0, 1, 4], 5)));
        assert!(!doubling_holds(&seq(&[1, 3], 3)));
        assert!(doubling_holds(&seq(&[1, 3], 1)));
    }

    #[test]
    fn decide_grows_horizon() {
        let cfg = EngineConfig {
            initial_horizon: Some(3),
            ..EngineConfig::default()
        };
        let v = decide(&coeffs(&[1, 1, 1, 0, 4]), &cfg);
        assert_eq!(v.kind, VerdictKind::Incomplete);
        assert!(v.horizon_used >= 9);
        let v = decide(&coeffs(&[1, 1]), &EngineConfig::default());
        assert_eq!(v.kind, VerdictKind::Complete);
    }

    #[test]
    fn gap_at_matches_trace() {
        let c = coeffs(&[1, 2, 0, 5]);
        let g = gap_trace(&generate_terms(&c, 12));
        for n in 1..=12 {
            assert_eq!(gap_at(&c, n).as_ref(), g.gap(n));
        }
    }

    fn arb_coeffs() -> impl Strategy<Value = Coefficients> {
        proptest::collection::vec(0u64..5, 1..6).prop_map(|mut v| {
            v[0] = v[0].max(1);
            let n = v.len();
            v[n - 1] = v[n - 1].max(1);
            Coefficients::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn margin_identity(c in arb_coeffs(), n in 2usize..60) {
            let g = gap_trace(&generate_terms(&c, n));
            prop_assert_eq!(g.gap(1), Some(&BigInt::zero()));
            for k in 1..n {
                prop_assert_eq!(g.gap(k + 1).unwrap() - g.gap(k).unwrap(), g.margin(k).unwrap().clone());
            }
        }

        #[test]
        fn gaps_are_exact(c in arb_coeffs(), n in 1usize..40) {
            let t = generate_terms(&c, n);
            let g = gap_trace(&t);
            let mut sum = BigUint::default();
            for (i, h) in t.terms().iter().enumerate() {
                let b = BigInt::from(&sum + 1u32) - BigInt::from(h.clone());
                prop_assert_eq!(&g.gaps()[i], &b);
                sum += h;
            }
        }

        #[test]
        fn initial_gaps_nonnegative_for_binary_prefix(c in arb_coeffs()) {
            let big_l = c.len();
            prop_assume!(c.as_slice()[..big_l - 1].iter().all(|&x| x <= 1));
            let g = gap_trace(&generate_terms(&c, big_l));
            for n in 1..big_l {
                prop_assert!(!g.gap(n).unwrap().is_negative());
            }
        }

        #[test]
        fn incremental_trace_matches(c in arb_coeffs(), a in 1usize..30, b in 1usize..30) {
            let t = generate_terms(&c, a);
            let mut g = gap_trace(&t);
            let t2 = t.extended(a + b);
            g.extend(&t2);
            let fresh = gap_trace(&t2);
            prop_assert_eq!(g.gaps(), fresh.gaps());
            prop_assert_eq!(g.margins(), fresh.margins());
        }

        #[test]
        fn complete_prefixes_stay_below_powers_of_two(c in arb_coeffs()) {
            let h = default_horizon(&c);
            let v = check_completeness(&c, h, false).unwrap();
            if v.kind == VerdictKind::Complete {
                let t = generate_terms(&c, h);
                for (i, x) in t.terms().iter().enumerate() {
                    prop_assert!(*x <= BigUint::one() << i);
                }
            }
        }
    }
}
