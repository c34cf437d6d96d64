use plrs_core::brown::{check_completeness, decide, first_failure_index, gap_trace, EngineConfig};
use plrs_core::certify::verify;
use plrs_core::enumerate::{all_valid, of_length};
use plrs_core::explore::oracle_check;
use plrs_core::{generate_terms, Coefficients, VerdictKind};

use num_bigint::BigUint;

fn coeffs(v: &[u64]) -> Coefficients {
    Coefficients::new(v.to_vec()).unwrap()
}

#[test]
fn engine_never_contradicts_oracle() {
    let mut unknown = 0;
    let mut total = 0;
    for c in all_valid(4, 4) {
        total += 1;
        let engine = check_completeness(&c, 4 * c.len(), false).unwrap();
        verify(&engine).unwrap();
        let oracle = oracle_check(&c).expect("prefix fits the budget");
        assert!(
            !engine.kind.contradicts(oracle.kind),
            "{c}: engine {:?}, oracle {:?}",
            engine.kind,
            oracle.kind
        );
        if engine.kind == VerdictKind::Unknown {
            unknown += 1;
        }
    }
    assert_eq!(total, 500);
    eprintln!("horizon 4L: {unknown} of {total} unknown");
}

#[test]
fn adaptive_engine_decides_the_small_space() {
    let mut complete = 0;
    for c in all_valid(4, 4) {
        let v = decide(&c, &EngineConfig::default());
        assert!(v.is_definite(), "{c}");
        assert!(!v.conjectural);
        verify(&v).unwrap();
        complete += (v.kind == VerdictKind::Complete) as usize;
    }
    assert_eq!(complete, 26);
}

#[test]
fn all_positive_complete_only_for_ones_then_one_or_two() {
    for len in 1..=5 {
        for c in of_length(len, 3).filter(|c| c.as_slice().iter().all(|&x| x > 0)) {
            let v = c.as_slice();
            let expected = v[..len - 1].iter().all(|&x| x == 1) && v[len - 1] <= 2;
            let got = decide(&c, &EngineConfig::default());
            assert!(got.is_definite(), "{c}");
            assert_eq!(got.kind == VerdictKind::Complete, expected, "{c}");
        }
    }
}

#[test]
fn complete_prefixes_stay_below_powers_of_two() {
    for c in all_valid(4, 4) {
        if decide(&c, &EngineConfig::default()).kind != VerdictKind::Complete {
            continue;
        }
        let t = generate_terms(&c, 40);
        for (i, h) in t.terms().iter().enumerate() {
            assert!(*h <= BigUint::from(1u8) << i, "{c} at {}", i + 1);
        }
    }
}

#[test]
fn leading_ones_then_zero_four_fail_at_2k_plus_3() {
    for k in 1..=10 {
        let mut v = vec![1u64; k];
        v.extend([0, 4]);
        let c = coeffs(&v);
        assert_eq!(
            first_failure_index(&c, 4 * v.len()),
            Some(2 * k + 3),
            "k={k}"
        );
        *v.last_mut().unwrap() = 3;
        assert_eq!(
            decide(&coeffs(&v), &EngineConfig::default()).kind,
            VerdictKind::Complete,
            "k={k}"
        );
    }
}

#[test]
fn reference_verdicts() {
    let cases: [(&[u64], VerdictKind); 7] = [
        (&[1, 3], VerdictKind::Incomplete),
        (&[1, 1], VerdictKind::Complete),
        (&[2], VerdictKind::Complete),
        (&[1, 1, 1, 0, 4], VerdictKind::Incomplete),
        (&[1, 0, 0, 0, 0, 0, 15], VerdictKind::Incomplete),
        (&[1, 1, 0, 0, 0, 0, 15], VerdictKind::Complete),
        (&[1, 2, 0, 0, 0, 0, 15], VerdictKind::Incomplete),
    ];
    for (v, kind) in cases {
        let c = coeffs(v);
        assert_eq!(decide(&c, &EngineConfig::default()).kind, kind, "{c}");
        let o = oracle_check(&c).unwrap();
        assert!(!o.kind.contradicts(kind), "{c}");
        if kind == VerdictKind::Incomplete {
            assert_eq!(o.kind, kind, "{c}");
        }
    }
    assert_eq!(first_failure_index(&coeffs(&[1, 1, 0, 4]), 20), Some(7));
}

#[test]
fn gap_identity_on_long_prefixes() {
    for c in all_valid(3, 3) {
        let g = gap_trace(&generate_terms(&c, 60));
        for n in 1..60 {
            assert_eq!(
                g.gap(n + 1).unwrap() - g.gap(n).unwrap(),
                *g.margin(n).unwrap(),
                "{c} n={n}"
            );
        }
    }
}
