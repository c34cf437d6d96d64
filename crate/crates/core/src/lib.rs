//! Completeness of positive linear recurrence sequences (PLRS).
//!
//! A PLRS `[c_1, …, c_L]` is the sequence `H_1 = 1`,
//! `H_{n+1} = c_1 H_n + … + c_n H_1 + 1` for `n < L`, and
//! `H_{n+1} = c_1 H_n + … + c_L H_{n+1-L}` afterwards. A sequence is
//! *complete* when every positive integer is a sum of distinct terms.
//!
//! This crate is `no_std` and only needs `alloc`. It provides:
//!
//! - exact term generation ([`generate_terms`]),
//! - Brown's gaps and certified verdicts ([`brown`]),
//! - a subset-sum oracle that is independent of gap arithmetic ([`oracle`]),
//! - closed-form bounds for coefficient families ([`families`]),
//! - completeness-preserving coefficient moves ([`transforms`]),
//! - principal-root isolation with exact sign evaluation ([`analytic`]).
//!
//! Indices in every public contract are 1-based.
//!
//! ```
//! use plrs_core::{brown, Coefficients, VerdictKind};
//!
//! let fib = Coefficients::new(vec![1, 1]).unwrap();
//! let v = brown::check_completeness(&fib, 10, false).unwrap();
//! assert_eq!(v.kind, VerdictKind::Complete);
//!
//! let c = Coefficients::new(vec![1, 3]).unwrap();
//! let v = brown::check_completeness(&c, 10, false).unwrap();
//! assert_eq!(v.kind, VerdictKind::Incomplete);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analytic;
pub mod brown;
pub mod certify;
mod coeffs;
pub mod enumerate;
mod error;
pub mod explore;
pub mod families;
pub mod oracle;
mod terms;
pub mod transforms;
mod verdict;

pub use coeffs::Coefficients;
pub use error::CoeffError;
pub use terms::{generate_terms, TermSequence};
pub use verdict::{Certificate, RuleId, TriagePath, Verdict, VerdictKind};
