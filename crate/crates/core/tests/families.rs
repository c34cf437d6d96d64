use plrs_core::brown::{decide, EngineConfig};
use plrs_core::certify::verify;
use plrs_core::explore::{max_n_search, oracle_check};
use plrs_core::families::{bound_ones_zeros, bound_two_ones_zeros, classify_family, FamilyShape};
use plrs_core::VerdictKind;

const LIMIT: u64 = 1 << 20;

fn engine_kind(shape: &FamilyShape, n: u64) -> VerdictKind {
    decide(&shape.vector(n).unwrap(), &EngineConfig::default()).kind
}

/// Classifier, engine and oracle agree on both sides of the bound.
fn assert_sharp(shape: FamilyShape) {
    let max_n = shape.bound().unwrap().max_n;
    for (n, kind) in [
        (max_n, VerdictKind::Complete),
        (max_n + 1, VerdictKind::Incomplete),
    ] {
        let v = classify_family(&shape, n).unwrap();
        verify(&v).unwrap();
        assert_eq!(v.kind, kind, "{shape:?} N={n}");
        assert_eq!(engine_kind(&shape, n), kind, "{shape:?} N={n}");
        if let Some(o) = oracle_check(&v.coefficients) {
            assert!(!o.kind.contradicts(kind), "{shape:?} N={n}");
            if kind == VerdictKind::Incomplete {
                assert_eq!(o.kind, kind, "{shape:?} N={n}");
            }
        }
    }
}

#[test]
fn proven_rules_are_sharp_up_to_length_12() {
    for k in 0..=10 {
        assert_sharp(FamilyShape::OneZerosN { k });
    }
    for k in 1..=5 {
        for g in k..=(11 - k) {
            assert_sharp(FamilyShape::OnesZerosN { g, k });
        }
    }
}

#[test]
fn single_zero_caps_at_three() {
    for g in 1..=12 {
        assert_eq!(bound_ones_zeros(g, 1).unwrap().max_n, 3);
        let shape = FamilyShape::OnesZerosN { g, k: 1 };
        assert_eq!(engine_kind(&shape, 3), VerdictKind::Complete, "g={g}");
        assert_eq!(engine_kind(&shape, 4), VerdictKind::Incomplete, "g={g}");
    }
}

#[test]
fn families_agree_where_they_overlap() {
    assert_eq!(
        bound_two_ones_zeros(1).unwrap().max_n,
        bound_ones_zeros(2, 1).unwrap().max_n
    );
}

#[test]
fn conjectured_rules_match_search() {
    let cfg = EngineConfig::default();
    for k in 0..=6 {
        let shape = FamilyShape::TwoOnesZerosN { k };
        let b = shape.bound().unwrap();
        assert!(!b.proven);
        assert_eq!(max_n_search(&shape, LIMIT, &cfg), Ok(b.max_n), "k={k}");
        assert!(classify_family(&shape, b.max_n).unwrap().conjectural);
    }
    for len in 3..=10 {
        for m in 0..=(len - 2) / 2 {
            let shape = FamilyShape::OneZerosOnesN { len, m };
            let b = shape.bound().unwrap();
            assert_eq!(
                max_n_search(&shape, LIMIT, &cfg),
                Ok(b.max_n),
                "L={len} m={m}"
            );
        }
    }
}

#[test]
fn turning_a_zero_into_a_one_keeps_completeness() {
    // [1, 0^{L−m−2}, 1^m, N] complete ⇒ [1, 0^{L−m−3}, 1^{m+1}, N+1] complete,
    // for 2m ≥ L − 1 and L − m ≥ 4
    let mut checked = 0;
    for len in 4..=10 {
        for m in 0..=len - 4 {
            if 2 * m + 1 < len {
                continue;
            }
            let g = FamilyShape::OneZerosOnesN { len, m };
            let h = FamilyShape::OneZerosOnesN { len, m: m + 1 };
            for n in 1..=64 {
                if engine_kind(&g, n) == VerdictKind::Complete {
                    assert_eq!(
                        engine_kind(&h, n + 1),
                        VerdictKind::Complete,
                        "L={len} m={m} N={n}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}
