use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::Coefficients;

/// An exact prefix `(H_1, …, H_n)` of the PLRS defined by its coefficients.
///
/// The prefix only grows; [`TermSequence::extend_to`] appends terms
/// without recomputing the ones already present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermSequence {
    coefficients: Coefficients,
    terms: Vec<BigUint>,
}

/// First `n` terms of the sequence generated by `c`.
///
/// # Panics
///
/// If `n == 0`; a prefix always holds `H_1 = 1`.
pub fn generate_terms(c: &Coefficients, n: usize) -> TermSequence {
    assert!(n >= 1, "a term prefix needs at least one term");
    let mut t = TermSequence {
        coefficients: c.clone(),
        terms: Vec::with_capacity(n),
    };
    t.extend_to(n);
    t
}

impl TermSequence {
    pub fn coefficients(&self) -> &Coefficients {
        &self.coefficients
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// All terms, `terms()[0] = H_1`.
    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    /// `H_n`, 1-based.
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    /// Grows the prefix to `n` terms; a no-op if it is already that long.
    pub fn extend_to(&mut self, n: usize) {
        let c = self.coefficients.as_slice();
        let big_l = c.len();
        while self.terms.len() < n {
            let m = self.terms.len();
            if m == 0 {
                self.terms.push(BigUint::one());
                continue;
            }
            // H_{m+1} = Σ_{i=1}^{min(m,L)} c_i H_{m+1-i} (+1 while m < L)
            let mut next = if m < big_l {
                BigUint::one()
            } else {
                BigUint::default()
            };
            for (i, &ci) in c.iter().enumerate().take(m.min(big_l)) {
                if ci != 0 {
                    next += &self.terms[m - 1 - i] * ci;
                }
            }
            self.terms.push(next);
        }
    }

    /// A new sequence holding `n` terms; `self` is left untouched.
    pub fn extended(&self, n: usize) -> TermSequence {
        let mut t = self.clone();
        t.extend_to(n);
        t
    }
}
