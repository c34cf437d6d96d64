use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Coefficients;

/// `p(x) = x^L − Σ c_i x^{L−i}`.
///
/// `p` has exactly one positive root, it is simple, and `p(t) > 0` iff `t`
/// lies above it, so the sign of `p` at a rational point places that point
/// relative to the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coefficients: Coefficients,
}

impl CharPoly {
    pub fn new(c: &Coefficients) -> Self {
        CharPoly {
            coefficients: c.clone(),
        }
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    /// `d^L · p(n/d)`; same sign as `p(n/d)` for `d > 0`.
    pub fn eval_scaled(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::one();
        let mut den_pow = BigInt::one();
        for &ci in self.coefficients.as_slice() {
            den_pow *= den;
            acc *= num;
            if ci != 0 {
                acc -= &den_pow * ci;
            }
        }
        acc
    }

    /// `2^{Ls} · p(num / 2^s)`.
    pub(crate) fn eval_dyadic(&self, num: &BigInt, scale: u32) -> BigInt {
        let mut acc = BigInt::one();
        for (i, &ci) in self.coefficients.as_slice().iter().enumerate() {
            acc *= num;
            if ci != 0 {
                acc -= BigInt::from(ci) << (scale as usize * (i + 1));
            }
        }
        acc
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let den = t.denom();
        let scaled = self.eval_scaled(t.numer(), den);
        let mut d_pow = BigInt::one();
        for _ in 0..self.degree() {
            d_pow *= den;
        }
        BigRational::new(scaled, d_pow)
    }

    /// Sign of `p(t)`: `Less` below the principal root, `Greater` above.
    pub fn sign_at(&self, t: &BigRational) -> Ordering {
        sign(&self.eval_scaled(t.numer(), t.denom()))
    }

    pub(crate) fn sign_at_dyadic(&self, num: &BigInt, scale: u32) -> Ordering {
        sign(&self.eval_dyadic(num, scale))
    }

    pub fn sign_at_int(&self, t: u64) -> Ordering {
        self.sign_at_dyadic(&BigInt::from(t), 0)
    }

    /// Dense rational coefficients, leading term first.
    fn dense(&self) -> Vec<BigRational> {
        let mut v = Vec::with_capacity(self.degree() + 1);
        v.push(BigRational::one());
        v.extend(
            self.coefficients
                .as_slice()
                .iter()
                .map(|&c| -BigRational::from_integer(BigInt::from(c))),
        );
        v
    }
}

fn sign(v: &BigInt) -> Ordering {
    if v.is_positive() {
        Ordering::Greater
    } else if v.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Exact value of the characteristic polynomial of `c` at `t`.
pub fn char_poly_eval(c: &Coefficients, t: &BigRational) -> BigRational {
    CharPoly::new(c).eval(t)
}

fn trim(p: &mut Vec<BigRational>) {
    let lead = p.iter().position(|x| !x.is_zero()).unwrap_or(p.len());
    p.drain(..lead);
}

/// Remainder of `a / b`, both leading-first and trimmed, `b` non-empty.
fn rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    while a.len() >= b.len() {
        let q = &a[0] / &b[0];
        for (x, y) in a.iter_mut().zip(b) {
            *x -= &q * y;
        }
        a.remove(0);
        trim(&mut a);
    }
    a
}

fn gcd(a: &CharPoly, b: &CharPoly) -> Vec<BigRational> {
    let (mut x, mut y) = (a.dense(), b.dense());
    while !y.is_empty() {
        let r = rem(x, &y);
        x = y;
        y = r;
    }
    x
}

/// Whether the two principal roots coincide.
///
/// They do iff `gcd(p, q)` has a positive root. Any such root is the
/// simple principal root of `p`, so it shows up as a sign change of the
/// gcd between `0` and `+∞`.
pub(crate) fn share_principal_root(a: &CharPoly, b: &CharPoly) -> bool {
    if a == b {
        return true;
    }
    let g = gcd(a, b);
    if g.len() < 2 {
        return false;
    }
    let lead = g[0].signum();
    let at_zero = g[g.len() - 1].signum();
    at_zero != lead
}
