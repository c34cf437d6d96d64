pub mod check;
pub mod dense;
pub mod family_table;
pub mod gen;
pub mod min_root;
pub mod oracle;
pub mod scan;

use serde::Serialize;

use plrs_core::analytic::RootBracket;

/// A root bracket as reported: decimal midpoint plus certified ends.
#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
    pub exact: Option<u64>,
}

impl From<&RootBracket> for RootRecord {
    fn from(b: &RootBracket) -> Self {
        RootRecord {
            root: b.midpoint(),
            lo: b.lo_f64(),
            hi: b.hi_f64(),
            exact: b.exact_root(),
        }
    }
}
