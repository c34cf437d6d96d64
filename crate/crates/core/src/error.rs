use core::fmt;

/// Reasons a coefficient vector is not a valid PLRS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffError {
    EmptyVector,
    /// `c_1 = 0`.
    LeadingZero,
    /// `c_L = 0`.
    TrailingZero,
    /// Entry at the given 1-based position is negative.
    NegativeEntry {
        index: usize,
        value: i64,
    },
}

impl fmt::Display for CoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffError::EmptyVector => f.write_str("coefficient vector is empty"),
            CoeffError::LeadingZero => f.write_str("leading coefficient c_1 must be positive"),
            CoeffError::TrailingZero => f.write_str("last coefficient c_L must be positive"),
            CoeffError::NegativeEntry { index, value } => {
                write!(f, "coefficient c_{index} = {value} is negative")
            }
        }
    }
}

impl core::error::Error for CoeffError {}
