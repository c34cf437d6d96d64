//! Lexicographic enumeration of valid coefficient vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::Coefficients;

/// Every valid vector `c` with `c_i ≤ caps[i-1]`, in lexicographic order.
///
/// `c_1` and `c_L` range from 1, interior entries from 0.
#[derive(Clone, Debug)]
pub struct Bounded {
    caps: Vec<u64>,
    current: Option<Vec<u64>>,
}

impl Bounded {
    pub fn new(caps: Vec<u64>) -> Self {
        let current = if caps.is_empty() || caps[0] == 0 || caps[caps.len() - 1] == 0 {
            None
        } else {
            Some((0..caps.len()).map(|i| floor(i, caps.len())).collect())
        };
        Bounded { caps, current }
    }

    /// Number of vectors the iterator yields in total.
    pub fn count_all(caps: &[u64]) -> u128 {
        let n = caps.len();
        caps.iter()
            .enumerate()
            .map(|(i, &cap)| (cap as u128 + 1).saturating_sub(floor(i, n) as u128))
            .product::<u128>()
            * (n > 0) as u128
    }
}

fn floor(i: usize, len: usize) -> u64 {
    (i == 0 || i + 1 == len) as u64
}

impl Iterator for Bounded {
    type Item = Coefficients;

    fn next(&mut self) -> Option<Coefficients> {
        let cur = self.current.as_mut()?;
        let out = Coefficients::new(cur.clone()).expect("odometer keeps ends positive");
        let n = cur.len();
        let mut i = n;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.caps[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = floor(i, n);
        }
        Some(out)
    }
}

/// Valid vectors of length exactly `len` with every entry at most `max_coeff`.
pub fn of_length(len: usize, max_coeff: u64) -> Bounded {
    Bounded::new(vec![max_coeff; len])
}

/// Valid vectors of length `1..=max_len` with entries at most `max_coeff`,
/// shorter vectors first.
pub fn all_valid(max_len: usize, max_coeff: u64) -> impl Iterator<Item = Coefficients> {
    (1..=max_len).flat_map(move |len| of_length(len, max_coeff))
}

/// Valid vectors of length `len` whose entries sum to `total`, in
/// lexicographic order.
pub fn with_sum(len: usize, total: u64) -> Vec<Coefficients> {
    fn fill(prefix: &mut Vec<u64>, len: usize, left: u64, out: &mut Vec<Coefficients>) {
        let i = prefix.len();
        if i + 1 == len {
            if left >= floor(i, len) {
                prefix.push(left);
                out.push(Coefficients::new(prefix.clone()).expect("ends positive"));
                prefix.pop();
            }
            return;
        }
        // reserve 1 for the last entry
        for v in floor(i, len)..left {
            prefix.push(v);
            fill(prefix, len, left - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        fill(&mut Vec::with_capacity(len), len, total, &mut out);
    }
    out
}
