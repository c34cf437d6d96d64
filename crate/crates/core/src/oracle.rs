//! Brute-force ground truth from subset sums.
//!
//! The incompleteness path never touches Brown's gaps: it builds the set of
//! subset sums of a prefix and looks for a missing value smaller than the
//! next term. Every later term is at least that large, so the value can
//! never be represented.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use crate::brown;
use crate::{generate_terms, Certificate, Coefficients, TermSequence, Verdict, VerdictKind};

/// Default cap on the subset-sum bitset, in bits.
pub const DEFAULT_BUDGET_BITS: u64 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The prefix sums past the bitset budget.
    BudgetExceeded { needed: BigUint, budget: u64 },
    /// `max_prefix` is below `2L − 1`.
    PrefixTooShort { max_prefix: usize, required: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { needed, budget } => {
                write!(f, "subset sums need {needed} bits, budget is {budget}")
            }
            OracleError::PrefixTooShort {
                max_prefix,
                required,
            } => {
                write!(
                    f,
                    "prefix length {max_prefix} is below the required {required}"
                )
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// The set of subset sums of a multiset of terms, as a bit-vector over
/// `[0, Σ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSet {
    words: Vec<u64>,
    bound: u64,
}

impl Default for SumSet {
    fn default() -> Self {
        SumSet::new()
    }
}

impl SumSet {
    /// The empty-subset set `{0}`.
    pub fn new() -> Self {
        SumSet {
            words: vec![1],
            bound: 0,
        }
    }

    /// Largest possible sum, i.e. the sum of every term added.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, v: u64) -> bool {
        v <= self.bound && (self.words[(v / 64) as usize] >> (v % 64)) & 1 == 1
    }

    /// Number of reachable sums, including 0.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.bound).filter(move |&v| self.contains(v))
    }

    /// `S ← S ∪ (S + h)`.
    pub fn add_term(&mut self, h: u64) {
        let new_bound = self.bound + h;
        let old_len = self.words.len();
        self.words.resize((new_bound / 64) as usize + 1, 0);
        let ws = (h / 64) as usize;
        let bs = (h % 64) as u32;
        let len = self.words.len();
        for i in (0..old_len).rev() {
            let w = self.words[i];
            if w == 0 {
                continue;
            }
            self.words[i + ws] |= w << bs;
            if bs > 0 && i + ws + 1 < len {
                self.words[i + ws + 1] |= w >> (64 - bs);
            }
        }
        self.bound = new_bound;
    }

    /// Least `v ≥ from` with `v ∉ S`; at most `bound + 1`.
    pub fn first_missing_from(&self, from: u64) -> u64 {
        let mut v = from;
        while v <= self.bound {
            let word = self.words[(v / 64) as usize] >> (v % 64);
            let avail = 64 - (v % 64) as u32;
            let ones = (!word).trailing_zeros().min(avail);
            if ones < avail {
                return v + ones as u64;
            }
            v += avail as u64;
        }
        v.min(self.bound + 1)
    }
}

fn to_budgeted(h: &BigUint, sum: u64, budget: u64) -> Result<u64, OracleError> {
    let over = || OracleError::BudgetExceeded {
        needed: BigUint::from(sum) + h + 1u32,
        budget,
    };
    let h = u64::try_from(h).map_err(|_| over())?;
    match sum.checked_add(h) {
        Some(s) if s < budget => Ok(h),
        _ => Err(over()),
    }
}

/// Every subset sum of the prefix `t`.
pub fn reachable_sums(t: &TermSequence, budget_bits: u64) -> Result<SumSet, OracleError> {
    let mut s = SumSet::new();
    for h in t.terms() {
        let h = to_budgeted(h, s.bound(), budget_bits)?;
        s.add_term(h);
    }
    Ok(s)
}

/// Least positive integer that is not a sum of distinct terms among the
/// first `prefix_length`, or `None` when all of `[1, Σ]` are reachable.
pub fn smallest_unrepresentable(
    c: &Coefficients,
    prefix_length: usize,
    budget_bits: u64,
) -> Result<Option<u64>, OracleError> {
    let s = reachable_sums(&generate_terms(c, prefix_length.max(1)), budget_bits)?;
    let m = s.first_missing_from(1);
    Ok((m <= s.bound()).then_some(m))
}

/// What the first `prefix_length` terms can and cannot represent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentabilityReport {
    pub prefix_length: usize,
    /// `Σ` of the prefix.
    pub reachable_bound: u64,
    /// Least positive sum missing within `[1, Σ]`.
    pub smallest_missing: Option<u64>,
    /// A missing value below `H_{prefix_length+1}`; witnesses incompleteness
    /// of the whole sequence.
    pub permanently_missing: Option<u64>,
}

fn report(prefix_length: usize, sums: &SumSet, next: &BigUint) -> RepresentabilityReport {
    let m = sums.first_missing_from(1);
    RepresentabilityReport {
        prefix_length,
        reachable_bound: sums.bound(),
        smallest_missing: (m <= sums.bound()).then_some(m),
        permanently_missing: (BigUint::from(m) < *next).then_some(m),
    }
}

/// Representability of the first `prefix_length` terms of `c`.
pub fn representability(
    c: &Coefficients,
    prefix_length: usize,
    budget_bits: u64,
) -> Result<RepresentabilityReport, OracleError> {
    let n = prefix_length.max(1);
    let t = generate_terms(c, n + 1);
    let s = reachable_sums(&generate_terms(c, n), budget_bits)?;
    Ok(report(n, &s, t.get(n + 1).expect("n + 1 terms generated")))
}

/// Longest prefix, up to `max_prefix`, whose subset sums fit the budget.
pub fn affordable_prefix(c: &Coefficients, max_prefix: usize, budget_bits: u64) -> usize {
    let t = generate_terms(c, max_prefix.max(1));
    let mut sum = 0u64;
    for (i, h) in t.terms().iter().enumerate() {
        match to_budgeted(h, sum, budget_bits) {
            Ok(h) => sum += h,
            Err(_) => return i,
        }
    }
    max_prefix
}

/// Oracle decision plus, for incompleteness, the subset-sum witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub verdict: Verdict,
    pub witness: Option<RepresentabilityReport>,
}

/// Ground-truth verdict from the first `max_prefix` terms.
///
/// Incomplete as soon as some prefix leaves a value below the next term
/// unrepresentable. Complete only if no such prefix exists up to
/// `max_prefix` and a proven gap certificate fires on the same prefix.
/// Otherwise Unknown.
pub fn oracle_verdict(
    c: &Coefficients,
    max_prefix: usize,
    budget_bits: u64,
) -> Result<OracleVerdict, OracleError> {
    let required = brown::min_horizon(c);
    if max_prefix < required {
        return Err(OracleError::PrefixTooShort {
            max_prefix,
            required,
        });
    }
    let t = generate_terms(c, max_prefix + 1);
    let terms = t.terms();
    let mut sums = SumSet::new();
    let mut probe = 1u64;
    for n in 1..=max_prefix {
        let h = to_budgeted(&terms[n - 1], sums.bound(), budget_bits)?;
        sums.add_term(h);
        probe = sums.first_missing_from(probe);
        let next = &terms[n];
        if BigUint::from(probe) < *next {
            let gap = BigInt::from(sums.bound() + 1) - BigInt::from(next.clone());
            return Ok(OracleVerdict {
                verdict: Verdict {
                    coefficients: c.clone(),
                    kind: VerdictKind::Incomplete,
                    certificate: Certificate::Failure { index: n + 1, gap },
                    conjectural: false,
                    horizon_used: n + 1,
                },
                witness: Some(report(n, &sums, next)),
            });
        }
    }

    let engine = brown::check_completeness(c, max_prefix, false)
        .expect("max_prefix already checked against 2L - 1");
    let verdict = if engine.kind == VerdictKind::Complete {
        engine
    } else {
        Verdict {
            coefficients: c.clone(),
            kind: VerdictKind::Unknown,
            certificate: Certificate::HorizonExhausted(max_prefix),
            conjectural: false,
            horizon_used: max_prefix,
        }
    };
    Ok(OracleVerdict {
        verdict,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn coeffs(v: &[u64]) -> Coefficients {
        Coefficients::new(v.to_vec()).unwrap()
    }

    /// Enumerate all 2^n subsets directly.
    fn brute_sums(terms: &[u64]) -> BTreeSet<u64> {
        let n = terms.len();
        (0u32..1 << n)
            .map(|mask| {
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| terms[i])
                    .sum()
            })
            .collect()
    }

    fn prefix(c: &[u64], n: usize) -> TermSequence {
        generate_terms(&coeffs(c), n)
    }

    #[test]
    fn reachable_examples() {
        let s = reachable_sums(&prefix(&[1, 3], 3), DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 5, 6, 7, 8]);
        let s = reachable_sums(&prefix(&[1, 3], 1), DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1]);
        let s = reachable_sums(&prefix(&[2], 3), DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), (0..=7).collect::<Vec<_>>());
    }

    #[test]
    fn affordable_prefixes() {
        // powers of two: 2^n - 1 < 2^10 for n <= 10
        assert_eq!(affordable_prefix(&coeffs(&[2]), 64, 1 << 10), 10);
        assert_eq!(affordable_prefix(&coeffs(&[2]), 8, 1 << 10), 8);
        let n = affordable_prefix(&coeffs(&[1, 1]), 200, DEFAULT_BUDGET_BITS);
        assert!(reachable_sums(&prefix(&[1, 1], n), DEFAULT_BUDGET_BITS).is_ok());
        assert!(reachable_sums(&prefix(&[1, 1], n + 1), DEFAULT_BUDGET_BITS).is_err());
    }

    #[test]
    fn smallest_unrepresentable_examples() {
        assert_eq!(
            smallest_unrepresentable(&coeffs(&[1, 3]), 4, DEFAULT_BUDGET_BITS),
            Ok(Some(4))
        );
        assert_eq!(
            smallest_unrepresentable(&coeffs(&[2]), 6, DEFAULT_BUDGET_BITS),
            Ok(None)
        );
        assert_eq!(
            smallest_unrepresentable(&coeffs(&[1, 0, 3]), 6, DEFAULT_BUDGET_BITS),
            Ok(None)
        );
    }

    #[test]
    fn oracle_examples() {
        let v = oracle_verdict(&coeffs(&[1, 3]), 8, DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(v.verdict.kind, VerdictKind::Incomplete);
        assert_eq!(v.witness.unwrap().permanently_missing, Some(4));

        let v = oracle_verdict(&coeffs(&[1, 1]), 8, DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(v.verdict.kind, VerdictKind::Complete);

        let v = oracle_verdict(&coeffs(&[1, 2, 0, 0, 0, 0, 15]), 28, DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(v.verdict.kind, VerdictKind::Incomplete);
    }

    #[test]
    fn witness_is_checkable() {
        for c in [&[1u64, 3][..], &[1, 0, 4], &[3], &[2, 1], &[1, 1, 1, 0, 4]] {
            let v = oracle_verdict(&coeffs(c), 30, DEFAULT_BUDGET_BITS).unwrap();
            let w = v.witness.expect("incomplete");
            let m = w.permanently_missing.unwrap();
            let t = prefix(c, w.prefix_length + 1);
            let small: Vec<u64> = t.terms()[..w.prefix_length]
                .iter()
                .map(|h| u64::try_from(h).unwrap())
                .collect();
            assert!(!brute_sums(&small).contains(&m));
            assert!(BigUint::from(m) < *t.get(w.prefix_length + 1).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = reachable_sums(&prefix(&[9, 9], 12), 1 << 16).unwrap_err();
        assert!(matches!(err, OracleError::BudgetExceeded { .. }));
        assert!(matches!(
            oracle_verdict(&coeffs(&[1, 0, 3]), 4, DEFAULT_BUDGET_BITS),
            Err(OracleError::PrefixTooShort { required: 5, .. })
        ));
    }

    #[test]
    fn shifts_across_word_boundaries() {
        let mut s = SumSet::new();
        for h in [1u64, 63, 64, 65, 200, 1] {
            s.add_term(h);
        }
        assert_eq!(
            s.iter().collect::<BTreeSet<_>>(),
            brute_sums(&[1, 63, 64, 65, 200, 1])
        );
        assert_eq!(s.bound(), 394);
    }

    proptest! {
        #[test]
        fn bitset_matches_enumeration(terms in proptest::collection::vec(1u64..300, 0..11)) {
            let mut s = SumSet::new();
            for &h in &terms {
                s.add_term(h);
            }
            let brute = brute_sums(&terms);
            prop_assert_eq!(s.iter().collect::<BTreeSet<_>>(), brute.clone());
            prop_assert_eq!(s.count(), brute.len() as u64);
            let missing = (1..).find(|v| !brute.contains(v)).unwrap();
            prop_assert_eq!(s.first_missing_from(1), missing);
        }

        #[test]
        fn longer_prefix_is_superset(v in proptest::collection::vec(0u64..4, 1..4), n in 1usize..9) {
            let mut v = v;
            v[0] = v[0].max(1);
            let k = v.len();
            v[k - 1] = v[k - 1].max(1);
            let c = coeffs(&v);
            let a = reachable_sums(&generate_terms(&c, n), DEFAULT_BUDGET_BITS).unwrap();
            let b = reachable_sums(&generate_terms(&c, n + 1), DEFAULT_BUDGET_BITS).unwrap();
            prop_assert!(a.iter().all(|x| b.contains(x)));
        }
    }
}
