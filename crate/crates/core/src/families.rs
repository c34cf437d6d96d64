//! Closed-form maximal last coefficients for structured coefficient families.
//!
//! Completeness is downward closed in the last coefficient (decreasing
//! `c_L` keeps a complete sequence complete), so a bound `max_n` turns into
//! a classifier: `[prefix, N]` is complete iff `N ≤ max_n`.

use alloc::vec::Vec;
use core::fmt;
use core::iter;

use crate::{Certificate, Coefficients, RuleId, Verdict, VerdictKind};

/// A family of coefficient vectors `[prefix, N]`, parameterised by the
/// shape of the prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyShape {
    /// `[1, 0^k, N]`.
    OneZerosN { k: usize },
    /// `[1^g, 0^k, N]`, `g, k ≥ 1`.
    OnesZerosN { g: usize, k: usize },
    /// `[1, 1, 0^k, N]`.
    TwoOnesZerosN { k: usize },
    /// `[1, 0^{len−m−2}, 1^m, N]` with `len` coefficients in total.
    OneZerosOnesN { len: usize, m: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    /// `g < k` is outside the range where the ones-zeros bound is known.
    OutOfProvenRange { g: usize, k: usize },
    /// Shape parameters violate the family's preconditions.
    ShapeViolation(&'static str),
    /// The bound does not fit in 64 bits.
    Overflow,
    /// `N` must be positive.
    ZeroLastCoefficient,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::OutOfProvenRange { g, k } => {
                write!(
                    f,
                    "ones-zeros bound is only known for g >= k (got g={g}, k={k})"
                )
            }
            FamilyError::ShapeViolation(why) => write!(f, "invalid family shape: {why}"),
            FamilyError::Overflow => f.write_str("family bound overflows u64"),
            FamilyError::ZeroLastCoefficient => f.write_str("last coefficient N must be positive"),
        }
    }
}

impl core::error::Error for FamilyError {}

/// Largest `N` keeping a family member complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyBound {
    pub max_n: u64,
    /// False for conjecture-backed or conditional rules.
    pub proven: bool,
    pub rule: RuleId,
}

impl FamilyBound {
    fn new(max_n: u64, rule: RuleId) -> Self {
        FamilyBound {
            max_n,
            proven: rule.proven(),
            rule,
        }
    }
}

/// `[1, 0^k, N]`: `max_n = ⌈(k+2)(k+3)/4⌉`.
pub fn bound_one_zeros(k: usize) -> Result<FamilyBound, FamilyError> {
    let k = k as u128;
    let p = (k + 2).checked_mul(k + 3).ok_or(FamilyError::Overflow)?;
    let max_n = u64::try_from(p.div_ceil(4)).map_err(|_| FamilyError::Overflow)?;
    Ok(FamilyBound::new(max_n, RuleId::OneZeros))
}

/// `⌈log₂ k⌉` for `k ≥ 1`.
fn ceil_log2(k: usize) -> usize {
    if k <= 1 {
        0
    } else {
        (usize::BITS - (k - 1).leading_zeros()) as usize
    }
}

/// `[1^g, 0^k, N]` for `g ≥ k ≥ 1`.
///
/// `2^{k+1} − 1` once `g ≥ k + ⌈log₂ k⌉`, and `2^{k+1} − ⌈k / 2^{g−k}⌉`
/// in between. `g = 1` is the one-zeros family and is answered by
/// [`bound_one_zeros`] for every `k`.
pub fn bound_ones_zeros(g: usize, k: usize) -> Result<FamilyBound, FamilyError> {
    if g == 0 || k == 0 {
        return Err(FamilyError::ShapeViolation(
            "ones-zeros needs g >= 1 and k >= 1",
        ));
    }
    if g == 1 {
        return bound_one_zeros(k);
    }
    if g < k {
        return Err(FamilyError::OutOfProvenRange { g, k });
    }
    if k >= 63 {
        return Err(FamilyError::Overflow);
    }
    let top = 1u64 << (k + 1);
    let max_n = if g >= k + ceil_log2(k) {
        top - 1
    } else {
        // g - k < ⌈log₂ k⌉ ≤ 63 here
        top - (k as u64).div_ceil(1u64 << (g - k))
    };
    Ok(FamilyBound::new(max_n, RuleId::OnesZeros))
}

/// `f_n` with the shifted convention `f_1 = 1`, `f_2 = 2`.
pub fn shifted_fibonacci(n: usize) -> Option<u128> {
    if n == 0 {
        return None;
    }
    let (mut a, mut b) = (1u128, 2u128);
    for _ in 1..n {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(a)
}

/// `[1, 1, 0^k, N]`: `⌊(f_{k+6} − k − 5)/4⌋` with `f_1 = 1, f_2 = 2`.
/// Conjectured, so `proven` is false.
pub fn bound_two_ones_zeros(k: usize) -> Result<FamilyBound, FamilyError> {
    let f = shifted_fibonacci(k + 6).ok_or(FamilyError::Overflow)?;
    let max_n = (f - (k as u128) - 5) / 4;
    Ok(FamilyBound::new(
        u64::try_from(max_n).map_err(|_| FamilyError::Overflow)?,
        RuleId::TwoOnesZeros,
    ))
}

/// `[1, 0^{len−m−2}, 1^m, N]` for `len ≥ 2m + 2` and `len − m ≥ 3`:
///
/// `⌊(len−m)(len+m+1)/4 + m(m+1)(m+2)(m+3)/48 + (1−2m)/2⌋`.
///
/// Marked unproven: the derivation leans on a lemma that is only
/// established conditionally on the 2L−1 conjecture.
pub fn bound_one_zeros_ones(len: usize, m: usize) -> Result<FamilyBound, FamilyError> {
    if len < 2 * m + 2 {
        return Err(FamilyError::ShapeViolation(
            "one-zeros-ones needs L >= 2m + 2",
        ));
    }
    if len < m + 3 {
        return Err(FamilyError::ShapeViolation(
            "one-zeros-ones needs at least one zero",
        ));
    }
    let (l, m) = (len as i128, m as i128);
    // everything over the common denominator 48
    let num = 12 * (l - m) * (l + m + 1) + m * (m + 1) * (m + 2) * (m + 3) + 24 * (1 - 2 * m);
    let max_n = num.div_euclid(48);
    let max_n = u64::try_from(max_n).map_err(|_| FamilyError::Overflow)?;
    Ok(FamilyBound::new(max_n, RuleId::OneZerosOnes))
}

impl FamilyShape {
    pub fn rule(&self) -> RuleId {
        match self {
            FamilyShape::OneZerosN { .. } => RuleId::OneZeros,
            FamilyShape::OnesZerosN { .. } => RuleId::OnesZeros,
            FamilyShape::TwoOnesZerosN { .. } => RuleId::TwoOnesZeros,
            FamilyShape::OneZerosOnesN { .. } => RuleId::OneZerosOnes,
        }
    }

    pub fn bound(&self) -> Result<FamilyBound, FamilyError> {
        match *self {
            FamilyShape::OneZerosN { k } => bound_one_zeros(k),
            FamilyShape::OnesZerosN { g, k } => bound_ones_zeros(g, k),
            FamilyShape::TwoOnesZerosN { k } => bound_two_ones_zeros(k),
            FamilyShape::OneZerosOnesN { len, m } => bound_one_zeros_ones(len, m),
        }
    }

    /// Coefficients before `N`.
    pub fn prefix(&self) -> Result<Vec<u64>, FamilyError> {
        let run = |v: u64, n: usize| iter::repeat_n(v, n);
        Ok(match *self {
            FamilyShape::OneZerosN { k } => iter::once(1).chain(run(0, k)).collect(),
            FamilyShape::OnesZerosN { g, k } => {
                if g == 0 || k == 0 {
                    return Err(FamilyError::ShapeViolation(
                        "ones-zeros needs g >= 1 and k >= 1",
                    ));
                }
                run(1, g).chain(run(0, k)).collect()
            }
            FamilyShape::TwoOnesZerosN { k } => run(1, 2).chain(run(0, k)).collect(),
            FamilyShape::OneZerosOnesN { len, m } => {
                if len < m + 3 {
                    return Err(FamilyError::ShapeViolation(
                        "one-zeros-ones needs L >= m + 3",
                    ));
                }
                iter::once(1)
                    .chain(run(0, len - m - 2))
                    .chain(run(1, m))
                    .collect()
            }
        })
    }

    /// The member `[prefix, n]`.
    pub fn vector(&self, n: u64) -> Result<Coefficients, FamilyError> {
        if n == 0 {
            return Err(FamilyError::ZeroLastCoefficient);
        }
        let mut v = self.prefix()?;
        v.push(n);
        Ok(Coefficients::new(v).expect("family prefixes start with 1 and N > 0"))
    }

    /// Recognises `c` as a member of the family named by `rule`, returning
    /// the shape and `N`.
    pub fn recognise(rule: RuleId, c: &Coefficients) -> Option<(FamilyShape, u64)> {
        let v = c.as_slice();
        let (&n, prefix) = v.split_last()?;
        let ones = prefix.iter().take_while(|&&x| x == 1).count();
        let shape = match rule {
            RuleId::OneZeros => (prefix.first() == Some(&1) && prefix[1..].iter().all(|&x| x == 0))
                .then(|| FamilyShape::OneZerosN {
                    k: prefix.len() - 1,
                }),
            RuleId::OnesZeros => {
                let k = prefix.len() - ones;
                (ones >= 1 && k >= 1 && prefix[ones..].iter().all(|&x| x == 0))
                    .then_some(FamilyShape::OnesZerosN { g: ones, k })
            }
            RuleId::TwoOnesZeros => {
                (prefix.len() >= 2 && prefix[..2] == [1, 1] && prefix[2..].iter().all(|&x| x == 0))
                    .then(|| FamilyShape::TwoOnesZerosN {
                        k: prefix.len() - 2,
                    })
            }
            RuleId::OneZerosOnes => {
                if prefix.first() != Some(&1) {
                    return None;
                }
                let rest = &prefix[1..];
                let zeros = rest.iter().take_while(|&&x| x == 0).count();
                let m = rest.len() - zeros;
                (zeros >= 1 && rest[zeros..].iter().all(|&x| x == 1))
                    .then_some(FamilyShape::OneZerosOnesN { len: v.len(), m })
            }
            RuleId::Conjecture2L1 => None,
        }?;
        Some((shape, n))
    }
}

/// Complete iff `N ≤ max_n`, certified by the family rule. The verdict is
/// conjectural whenever the rule is.
pub fn classify_family(shape: &FamilyShape, n: u64) -> Result<Verdict, FamilyError> {
    let bound = shape.bound()?;
    let coefficients = shape.vector(n)?;
    let kind = if n <= bound.max_n {
        VerdictKind::Complete
    } else {
        VerdictKind::Incomplete
    };
    Ok(Verdict {
        coefficients,
        kind,
        certificate: Certificate::FamilyRule(bound.rule),
        conjectural: !bound.proven,
        horizon_used: 0,
    })
}
