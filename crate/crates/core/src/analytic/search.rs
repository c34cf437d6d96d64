use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::CharPoly;
use super::root::{compare_roots, principal_root, principal_root_bits, RootBracket};
use super::{lambda_threshold, n_l, trinomial, AnalyticError, LambdaThreshold, DEFAULT_TOLERANCE};
use crate::brown::{decide, EngineConfig};
use crate::enumerate::{with_sum, Bounded};
use crate::oracle::{oracle_verdict, DEFAULT_BUDGET_BITS};
use crate::{Coefficients, VerdictKind};

/// Bisection stops trying to separate two quantities past this many bits.
const MAX_REFINE_BITS: u32 = 4096;

/// Default number of roots [`denseness_scan`] may compute.
pub const DEFAULT_DENSENESS_CAP: u128 = 1 << 16;

/// Length-`len` vectors whose entries sum to `s + 1`.
pub fn enumerate_pls(len: usize, s: u64) -> Vec<Coefficients> {
    with_sum(len, s + 1)
}

/// The minimiser `[1, 0, …, 0, s]` of the principal root over
/// [`enumerate_pls`], with its root.
pub fn min_root_in_pls(len: usize, s: u64) -> (Coefficients, RootBracket) {
    let c = trinomial(len, s);
    let r = principal_root(&c, DEFAULT_TOLERANCE);
    (c, r)
}

/// Same question answered by comparing every member; ties go to the
/// lexicographically smaller vector.
pub fn min_root_in_pls_exhaustive(len: usize, s: u64) -> Option<Coefficients> {
    smallest_root(enumerate_pls(len, s))
}

/// Vector with the smallest principal root; ties go to the earliest.
pub fn smallest_root(candidates: impl IntoIterator<Item = Coefficients>) -> Option<Coefficients> {
    let mut best: Option<Coefficients> = None;
    for c in candidates {
        best = match best {
            Some(b) if compare_roots(&c, &b) != Ordering::Less => Some(b),
            _ => Some(c),
        };
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub len: usize,
    /// Size of the space `c_i ≤ 2^i`.
    pub space: u128,
    /// Vectors in the space with principal root below 2.
    pub below_two: usize,
    /// Incomplete vector with the smallest root below 2, if any.
    pub frontier: Option<(Coefficients, RootBracket)>,
    /// `None` for `L = 1`.
    pub lambda: Option<LambdaThreshold>,
    /// Frontier root compared with `λ_L`.
    pub against_lambda: Option<Ordering>,
    /// Root-below-2 vectors neither engine could classify.
    pub unresolved: Vec<Coefficients>,
}

/// Exhaustive search for the smallest principal root below 2 of an
/// incomplete sequence, over `c_i ≤ 2^i`.
pub fn exact_threshold_search(len: usize) -> Result<ThresholdReport, AnalyticError> {
    if len == 0 {
        return Err(AnalyticError::LengthTooSmall { len, min: 1 });
    }
    let caps: Vec<u64> = (1..=len as u32).map(|i| 1u64 << i.min(63)).collect();
    let space = Bounded::count_all(&caps);
    if len > 5 {
        return Err(AnalyticError::CostCap {
            requested: space,
            cap: Bounded::count_all(&[2, 4, 8, 16, 32]),
        });
    }
    let mut below_two = 0;
    let mut unresolved = Vec::new();
    let mut incomplete = Vec::new();
    for c in Bounded::new(caps) {
        if CharPoly::new(&c).sign_at_int(2) != Ordering::Greater {
            continue;
        }
        below_two += 1;
        match classify(&c) {
            VerdictKind::Incomplete => incomplete.push(c),
            VerdictKind::Complete => {}
            VerdictKind::Unknown => unresolved.push(c),
        }
    }
    let frontier = smallest_root(incomplete).map(|c| {
        let r = principal_root(&c, DEFAULT_TOLERANCE);
        (c, r)
    });
    let lambda = lambda_threshold(len, DEFAULT_TOLERANCE).ok();
    let against_lambda = match (&frontier, &lambda) {
        (Some((c, _)), Some(l)) => Some(compare_roots(c, &l.coefficients)),
        _ => None,
    };
    Ok(ThresholdReport {
        len,
        space,
        below_two,
        frontier,
        lambda,
        against_lambda,
        unresolved,
    })
}

fn classify(c: &Coefficients) -> VerdictKind {
    let v = decide(c, &EngineConfig::default());
    if v.is_definite() {
        return v.kind;
    }
    match oracle_verdict(c, 64.max(2 * c.len()), DEFAULT_BUDGET_BITS) {
        Ok(o) => o.verdict.kind,
        Err(_) => VerdictKind::Unknown,
    }
}

/// Roots `q < r < s` of `x^L − x^{L−1} − t` for `t = k, k+1, k+2`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootGap {
    pub roots: [RootBracket; 3],
    pub gap1: f64,
    pub gap2: f64,
    /// `r − q > s − r` was established by exact sign checks.
    pub certified: bool,
}

pub fn root_order_gap(len: usize, k: u64) -> Result<RootGap, AnalyticError> {
    if len < 3 {
        return Err(AnalyticError::LengthTooSmall { len, min: 3 });
    }
    assert!(k > 0, "k must be positive");
    let polys = [0, 1, 2].map(|d| CharPoly::new(&trinomial(len, k + d)));
    let mut roots = [0, 1, 2].map(|d| principal_root_bits(&trinomial(len, k + d), 64));
    let certified = gaps_shrink(&polys, &mut roots);
    let mid = |b: &RootBracket| (b.lo() + b.hi()) / BigRational::from_integer(BigInt::from(2));
    let (q, r, s) = (mid(&roots[0]), mid(&roots[1]), mid(&roots[2]));
    let f = |x: BigRational| x.to_f64().unwrap_or(f64::NAN);
    Ok(RootGap {
        gap1: f(&r - &q),
        gap2: f(&s - &r),
        roots,
        certified,
    })
}

/// Refines until `2r > q + s` is certain. False if the reverse is certain
/// or the refinement cap is hit.
fn gaps_shrink(polys: &[CharPoly; 3], b: &mut [RootBracket; 3]) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        if &two * b[1].lo() > b[0].hi() + b[2].hi() {
            return true;
        }
        if &two * b[1].hi() < b[0].lo() + b[2].lo() {
            return false;
        }
        let scale = b.iter().map(RootBracket::scale).max().unwrap_or(0) + 32;
        if scale > MAX_REFINE_BITS || b.iter().all(|x| x.exact_root().is_some()) {
            return false;
        }
        for (p, x) in polys.iter().zip(b.iter_mut()) {
            x.refine(p, scale);
        }
    }
}

/// Refines until `a < b` is certain.
fn strictly_increasing(
    pa: &CharPoly,
    a: &mut RootBracket,
    pb: &CharPoly,
    b: &mut RootBracket,
) -> bool {
    loop {
        if a.strictly_below(b) {
            return true;
        }
        if b.hi() < a.lo() || (a.exact_root().is_some() && a.exact_root() == b.exact_root()) {
            return false;
        }
        let scale = a.scale().max(b.scale()) + 32;
        if scale > MAX_REFINE_BITS {
            return false;
        }
        a.refine(pa, scale);
        b.refine(pb, scale);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensenessReport {
    pub len: usize,
    pub epsilon: f64,
    /// `(k, root of [1, 0, …, 0, k])` for `k = N_L + 1 ..= 2^{L−1}`.
    pub roots: Vec<(u64, RootBracket)>,
    pub max_gap: f64,
    /// From the first root's lower end to the last root's upper end.
    pub covered: Option<(f64, f64)>,
    pub strictly_increasing: bool,
    /// Consecutive gaps shrink as `k` grows.
    pub gaps_decreasing: bool,
    /// The root at `k = 2^{L−1}` is exactly 2.
    pub ends_at_two: bool,
}

impl DensenessReport {
    pub fn within_epsilon(&self) -> bool {
        self.max_gap < self.epsilon
    }
}

/// Roots of `x^L − x^{L−1} − k` from `λ_L` up to 2, with ordering
/// and gap checks done exactly.
pub fn denseness_scan(
    len: usize,
    epsilon: f64,
    cap: u128,
) -> Result<DensenessReport, AnalyticError> {
    if len < 2 {
        return Err(AnalyticError::LengthTooSmall { len, min: 2 });
    }
    let first = n_l(len) + 1;
    let last: u128 = 1u128 << (len - 1).min(127);
    let requested = (last + 1).saturating_sub(first as u128);
    if requested > cap {
        return Err(AnalyticError::CostCap { requested, cap });
    }
    let last = last as u64;
    let ks: Vec<u64> = (first..=last).collect();
    let polys: Vec<CharPoly> = ks
        .iter()
        .map(|&k| CharPoly::new(&trinomial(len, k)))
        .collect();
    let roots: Vec<(u64, RootBracket)> = ks
        .iter()
        .map(|&k| (k, principal_root(&trinomial(len, k), DEFAULT_TOLERANCE)))
        .collect();

    let mut work: Vec<RootBracket> = roots.iter().map(|(_, b)| b.clone()).collect();
    let mut increasing = true;
    for i in 1..work.len() {
        let (left, right) = work.split_at_mut(i);
        increasing &=
            strictly_increasing(&polys[i - 1], &mut left[i - 1], &polys[i], &mut right[0]);
    }
    let mut decreasing = true;
    for i in 2..work.len() {
        let ps = [polys[i - 2].clone(), polys[i - 1].clone(), polys[i].clone()];
        let mut bs = [work[i - 2].clone(), work[i - 1].clone(), work[i].clone()];
        decreasing &= gaps_shrink(&ps, &mut bs);
    }

    let mut max_gap = BigRational::zero();
    for w in roots.windows(2) {
        let g = w[1].1.hi() - w[0].1.lo();
        if g > max_gap {
            max_gap = g;
        }
    }
    let covered = match (roots.first(), roots.last()) {
        (Some(a), Some(b)) => Some((a.1.lo_f64(), b.1.hi_f64())),
        _ => None,
    };
    let ends_at_two = roots
        .last()
        .is_some_and(|(k, b)| *k == last && b.exact_root() == Some(2));
    Ok(DensenessReport {
        len,
        epsilon,
        max_gap: max_gap.to_f64().unwrap_or(f64::INFINITY),
        covered,
        strictly_increasing: increasing,
        gaps_decreasing: decreasing,
        ends_at_two,
        roots,
    })
}
