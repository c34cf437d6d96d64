//! Command-line value parsers.

use std::ops::RangeInclusive;

use plrs_core::{CoeffError, Coefficients};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    Malformed(String),
    Invalid(CoeffError),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Empty => f.write_str("no coefficients given"),
            ParseError::Malformed(tok) => write!(f, "'{tok}' is not an integer"),
            ParseError::Invalid(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ParseError {}

/// Comma-separated integers such as `1,0,4`; whitespace and one pair of
/// surrounding brackets are tolerated.
pub fn coefficients(s: &str) -> Result<Coefficients, ParseError> {
    let s = s.trim();
    let s = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .unwrap_or(s);
    if s.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let values = s
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| ParseError::Malformed(tok.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Coefficients::validate(&values).map_err(ParseError::Invalid)
}

/// `a`, `a..b` or `a..=b`, both ends inclusive.
pub fn span(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// How far Brown's criterion is assumed in a scan: `2L-1`, `2L-2`,
/// `2L`, or a fixed index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    /// `2L + offset`
    TwiceLength(i64),
    Fixed(usize),
}

impl Threshold {
    pub fn at(self, len: usize) -> usize {
        match self {
            Threshold::TwiceLength(d) => (2 * len as i64 + d).max(1) as usize,
            Threshold::Fixed(n) => n,
        }
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Threshold::TwiceLength(0) => f.write_str("2L"),
            Threshold::TwiceLength(d) if d < 0 => write!(f, "2L{d}"),
            Threshold::TwiceLength(d) => write!(f, "2L+{d}"),
            Threshold::Fixed(n) => write!(f, "{n}"),
        }
    }
}

pub fn threshold(s: &str) -> Result<Threshold, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(rest) = t.strip_prefix("2L").or_else(|| t.strip_prefix("2l")) {
        if rest.is_empty() {
            return Ok(Threshold::TwiceLength(0));
        }
        return rest
            .strip_prefix('+')
            .unwrap_or(rest)
            .parse::<i64>()
            .map(Threshold::TwiceLength)
            .map_err(|_| format!("bad threshold '{s}'"));
    }
    t.parse::<usize>()
        .map(Threshold::Fixed)
        .map_err(|_| format!("bad threshold '{s}', expected e.g. 2L-1 or 7"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_strings() {
        assert_eq!(coefficients("1,0,4").unwrap().as_slice(), &[1, 0, 4]);
        assert_eq!(coefficients(" 1 , 3 ").unwrap().as_slice(), &[1, 3]);
        assert_eq!(coefficients("[2,1]").unwrap().as_slice(), &[2, 1]);
        assert_eq!(coefficients(""), Err(ParseError::Empty));
        assert_eq!(coefficients("  "), Err(ParseError::Empty));
        assert_eq!(
            coefficients("1,,2"),
            Err(ParseError::Malformed(String::new()))
        );
        assert_eq!(coefficients("1,x"), Err(ParseError::Malformed("x".into())));
        assert_eq!(
            coefficients("0,1"),
            Err(ParseError::Invalid(CoeffError::LeadingZero))
        );
        assert_eq!(
            coefficients("1,0"),
            Err(ParseError::Invalid(CoeffError::TrailingZero))
        );
        assert!(matches!(
            coefficients("1,-2,3"),
            Err(ParseError::Invalid(CoeffError::NegativeEntry {
                index: 2,
                value: -2
            }))
        ));
    }

    #[test]
    fn spans() {
        assert_eq!(span("3"), Ok(3..=3));
        assert_eq!(span("1..6"), Ok(1..=6));
        assert_eq!(span("1..=6"), Ok(1..=6));
        assert!(span("6..1").is_err());
        assert!(span("a..2").is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold("2L-1"), Ok(Threshold::TwiceLength(-1)));
        assert_eq!(threshold("2L-2").unwrap().at(3), 4);
        assert_eq!(threshold("2L").unwrap().at(3), 6);
        assert_eq!(threshold("2L+1").unwrap().to_string(), "2L+1");
        assert_eq!(threshold("9"), Ok(Threshold::Fixed(9)));
        assert!(threshold("L").is_err());
    }
}
