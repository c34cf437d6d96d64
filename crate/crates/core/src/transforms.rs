//! Coefficient moves with a known effect on completeness.
//!
//! | rule            | move                                  | guarantee            |
//! |-----------------|---------------------------------------|----------------------|
//! | `AppendCoeff`   | `[c…] → [c…, c_new]`                  | keeps incompleteness |
//! | `DecreaseLast`  | `[c…, c_L] → [c…, k_L]`, `k_L ≤ c_L`   | keeps completeness   |
//! | `MergeLastTwo`  | `[c…, c_{L−1}, c_L] → [c…, c_{L−1}+c_L]` | keeps incompleteness |
//!
//! Records are returned whether or not the input satisfies the hypothesis;
//! the guarantee only applies when it does.

use core::fmt;

use crate::Coefficients;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformRule {
    AppendCoeff,
    DecreaseLast,
    MergeLastTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Guarantee {
    /// Incomplete input implies incomplete output.
    PreservesIncomplete,
    /// Complete input implies complete output.
    PreservesComplete,
}

impl TransformRule {
    pub fn guarantee(self) -> Guarantee {
        match self {
            TransformRule::AppendCoeff | TransformRule::MergeLastTwo => {
                Guarantee::PreservesIncomplete
            }
            TransformRule::DecreaseLast => Guarantee::PreservesComplete,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformRecord {
    pub input: Coefficients,
    pub output: Coefficients,
    pub rule: TransformRule,
    pub guarantee: Guarantee,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransformError {
    NonPositiveAppend,
    /// `k_L` must lie in `[1, c_L]`.
    RangeViolation {
        k_last: u64,
        c_last: u64,
    },
    /// Merging needs `L ≥ 2`.
    TooShort,
    Overflow,
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::NonPositiveAppend => {
                f.write_str("appended coefficient must be positive")
            }
            TransformError::RangeViolation { k_last, c_last } => {
                write!(f, "new last coefficient {k_last} is outside [1, {c_last}]")
            }
            TransformError::TooShort => {
                f.write_str("merging the last two coefficients needs L >= 2")
            }
            TransformError::Overflow => f.write_str("merged coefficient overflows u64"),
        }
    }
}

impl core::error::Error for TransformError {}

fn record(
    input: &Coefficients,
    output: alloc::vec::Vec<u64>,
    rule: TransformRule,
) -> TransformRecord {
    TransformRecord {
        input: input.clone(),
        output: Coefficients::new(output).expect("transforms keep c_1 and c_L positive"),
        rule,
        guarantee: rule.guarantee(),
    }
}

/// `[c_1, …, c_L, c_new]`.
pub fn append_coeff(c: &Coefficients, c_new: u64) -> Result<TransformRecord, TransformError> {
    if c_new == 0 {
        return Err(TransformError::NonPositiveAppend);
    }
    let mut v = c.as_slice().to_vec();
    v.push(c_new);
    Ok(record(c, v, TransformRule::AppendCoeff))
}

/// `[c_1, …, c_{L−1}, k_last]` for `1 ≤ k_last ≤ c_L`.
pub fn decrease_last(c: &Coefficients, k_last: u64) -> Result<TransformRecord, TransformError> {
    let c_last = c.last();
    if k_last == 0 || k_last > c_last {
        return Err(TransformError::RangeViolation { k_last, c_last });
    }
    let mut v = c.as_slice().to_vec();
    *v.last_mut().expect("non-empty") = k_last;
    Ok(record(c, v, TransformRule::DecreaseLast))
}

/// `[c_1, …, c_{L−2}, c_{L−1} + c_L]`.
pub fn merge_last_two(c: &Coefficients) -> Result<TransformRecord, TransformError> {
    let mut v = c.as_slice().to_vec();
    if v.len() < 2 {
        return Err(TransformError::TooShort);
    }
    let last = v.pop().expect("len >= 2");
    let prev = v.last_mut().expect("len >= 2");
    *prev = prev.checked_add(last).ok_or(TransformError::Overflow)?;
    Ok(record(c, v, TransformRule::MergeLastTwo))
}
