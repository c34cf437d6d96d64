use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::poly::{share_principal_root, CharPoly};
use crate::Coefficients;

/// A certified isolating interval for a principal root.
///
/// Either the root is the integer `exact_root`, or it lies strictly inside
/// `(lo, hi)` with `lo = n / 2^s`, `hi = (n + 1) / 2^s` and
/// `p(lo) < 0 < p(hi)` checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    lo_num: BigInt,
    scale: u32,
    exact_root: Option<u64>,
}

impl RootBracket {
    fn exact(t: u64) -> Self {
        RootBracket {
            lo_num: BigInt::from(t),
            scale: 0,
            exact_root: Some(t),
        }
    }

    pub fn exact_root(&self) -> Option<u64> {
        self.exact_root
    }

    /// Bits of refinement: the width is `2^{-scale}` (zero when exact).
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo_num.clone(), BigInt::one() << self.scale as usize)
    }

    pub fn hi(&self) -> BigRational {
        match self.exact_root {
            Some(_) => self.lo(),
            None => BigRational::new(&self.lo_num + 1u32, BigInt::one() << self.scale as usize),
        }
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo().to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal approximation; exact to within the bracket width.
    pub fn midpoint(&self) -> f64 {
        ((self.lo() + self.hi()) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// The root is certainly below `other`'s root.
    pub fn strictly_below(&self, other: &RootBracket) -> bool {
        match (self.exact_root, other.exact_root) {
            (Some(a), Some(b)) => a < b,
            _ => self.hi() <= other.lo(),
        }
    }

    /// Whether `t` lies in the closed bracket.
    pub fn contains(&self, t: &BigRational) -> bool {
        self.lo() <= *t && *t <= self.hi()
    }

    /// Continues bisection until the width is at most `2^{-scale}`.
    pub fn refine(&mut self, poly: &CharPoly, scale: u32) {
        if self.exact_root.is_some() {
            return;
        }
        while self.scale < scale {
            self.scale += 1;
            self.lo_num <<= 1u32;
            let mid = &self.lo_num + 1u32;
            match poly.sign_at_dyadic(&mid, self.scale) {
                Ordering::Less => self.lo_num = mid,
                Ordering::Greater => {}
                Ordering::Equal => {
                    // rational roots of a monic integer polynomial are integers
                    let t = (mid >> self.scale as usize)
                        .to_u64()
                        .expect("root fits u64");
                    *self = RootBracket::exact(t);
                    return;
                }
            }
        }
    }
}

/// Smallest `s` with `2^{-s} ≤ tol`.
pub fn tolerance_bits(tol: f64) -> u32 {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut w = 1.0f64;
    let mut bits = 0;
    while w > tol && bits < 1074 {
        w *= 0.5;
        bits += 1;
    }
    bits
}

/// Bracket of width at most `2^{-bits}` around the principal root.
pub fn principal_root_bits(c: &Coefficients, bits: u32) -> RootBracket {
    let poly = CharPoly::new(c);
    // p(1) = 1 − Σc ≤ 0 and p(1 + max c) > 0
    let (mut lo, mut hi) = (1u64, 1 + c.max_coeff());
    if poly.sign_at_int(lo) == Ordering::Equal {
        return RootBracket::exact(lo);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match poly.sign_at_int(mid) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return RootBracket::exact(mid),
        }
    }
    if poly.sign_at_int(hi) == Ordering::Equal {
        return RootBracket::exact(hi);
    }
    let mut b = RootBracket {
        lo_num: BigInt::from(lo),
        scale: 0,
        exact_root: None,
    };
    b.refine(&poly, bits);
    b
}

/// Bracket of width at most `tol` around the principal root of `c`.
///
/// Bisection starts from the integer part of the root inside
/// `[1, 1 + max c_i]`; every endpoint sign is evaluated exactly.
pub fn principal_root(c: &Coefficients, tol: f64) -> RootBracket {
    principal_root_bits(c, tolerance_bits(tol))
}

/// Orders principal roots of `a` and `b` without floating point.
///
/// `b`'s bracket is refined until the sign of `p_a` at one of its ends
/// separates the roots. Equal roots are detected through the gcd of the
/// two polynomials, so the loop always terminates.
pub fn compare_roots(a: &Coefficients, b: &Coefficients) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let pa = CharPoly::new(a);
    let pb = CharPoly::new(b);
    let mut bracket = principal_root_bits(b, 8);
    let mut equality_checked = false;
    loop {
        if let Some(t) = bracket.exact_root {
            // p_a(t) > 0 means t is above a's root
            return pa.sign_at_int(t).reverse();
        }
        if pa.sign_at(&bracket.lo()) == Ordering::Greater {
            return Ordering::Less;
        }
        if pa.sign_at(&bracket.hi()) == Ordering::Less {
            return Ordering::Greater;
        }
        if !equality_checked && bracket.scale >= 48 {
            if share_principal_root(&pa, &pb) {
                return Ordering::Equal;
            }
            equality_checked = true;
        }
        let next = bracket.scale + 16;
        bracket.refine(&pb, next);
    }
}
