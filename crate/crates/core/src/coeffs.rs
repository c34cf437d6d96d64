use alloc::vec::Vec;
use core::fmt;

use crate::error::CoeffError;

/// A validated coefficient vector `[c_1, …, c_L]`.
///
/// `L ≥ 1`, `c_1 ≥ 1` and `c_L ≥ 1`; interior entries may be zero.
/// Equality is element-wise, so `[1, 2]` and `[1, 2, 0]` never compare
/// equal (the latter cannot even be constructed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coefficients(Vec<u64>);

impl Coefficients {
    pub fn new(values: Vec<u64>) -> Result<Self, CoeffError> {
        match (values.first(), values.last()) {
            (None, _) | (_, None) => Err(CoeffError::EmptyVector),
            (Some(0), _) => Err(CoeffError::LeadingZero),
            (_, Some(0)) => Err(CoeffError::TrailingZero),
            _ => Ok(Coefficients(values)),
        }
    }

    /// Validates signed input, rejecting negative entries before the
    /// positional checks.
    pub fn validate(values: &[i64]) -> Result<Self, CoeffError> {
        if values.is_empty() {
            return Err(CoeffError::EmptyVector);
        }
        let mut out = Vec::with_capacity(values.len());
        for (i, &v) in values.iter().enumerate() {
            if v < 0 {
                return Err(CoeffError::NegativeEntry {
                    index: i + 1,
                    value: v,
                });
            }
            out.push(v as u64);
        }
        Self::new(out)
    }

    /// The recurrence length `L`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// 1-based access to `c_i`.
    pub fn get(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    pub fn last(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn max_coeff(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `Σ c_i`, saturating at `u128::MAX`.
    pub fn sum(&self) -> u128 {
        self.0
            .iter()
            .fold(0u128, |acc, &c| acc.saturating_add(c as u128))
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl TryFrom<Vec<u64>> for Coefficients {
    type Error = CoeffError;

    fn try_from(values: Vec<u64>) -> Result<Self, Self::Error> {
        Self::new(values)
    }
}

impl AsRef<[u64]> for Coefficients {
    fn as_ref(&self) -> &[u64] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn accepts_interior_zeros() {
        let c = Coefficients::validate(&[1, 0, 3]).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.get(3), Some(3));
        assert_eq!(c.get(0), None);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(
            Coefficients::validate(&[0, 1]),
            Err(CoeffError::LeadingZero)
        );
        assert_eq!(
            Coefficients::validate(&[1, 2, 0]),
            Err(CoeffError::TrailingZero)
        );
        assert_eq!(Coefficients::validate(&[]), Err(CoeffError::EmptyVector));
        assert_eq!(
            Coefficients::validate(&[1, -2, 3]),
            Err(CoeffError::NegativeEntry {
                index: 2,
                value: -2
            })
        );
        assert_eq!(Coefficients::new(vec![0]), Err(CoeffError::LeadingZero));
    }

    #[test]
    fn trailing_zero_is_not_a_padding_of_shorter_vector() {
        assert!(Coefficients::new(vec![1, 2, 0]).is_err());
        let short = Coefficients::new(vec![1, 2]).unwrap();
        assert_ne!(short.as_slice(), &[1, 2, 0][..]);
    }

    #[test]
    fn display_is_bracketed() {
        let c = Coefficients::new(vec![1, 0, 4]).unwrap();
        assert_eq!(alloc::format!("{c}"), "[1,0,4]");
    }
}
