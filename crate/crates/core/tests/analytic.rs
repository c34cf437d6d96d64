use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use plrs_core::analytic::{
    compare_roots, exact_threshold_search, lambda_threshold, min_root_in_pls,
    min_root_in_pls_exhaustive, principal_root, root_order_gap, triage, trinomial, CharPoly,
    DEFAULT_TOLERANCE,
};
use plrs_core::brown::{decide, EngineConfig};
use plrs_core::enumerate::{all_valid, of_length};
use plrs_core::explore::oracle_check;
use plrs_core::{Certificate, Coefficients, TriagePath, VerdictKind};

fn coeffs(v: &[u64]) -> Coefficients {
    Coefficients::new(v.to_vec()).unwrap()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn appending_a_coefficient_raises_the_root() {
    for c in all_valid(4, 3) {
        for m in 1..=3 {
            let mut v = c.as_slice().to_vec();
            v.push(m);
            assert_eq!(compare_roots(&c, &coeffs(&v)), Ordering::Less, "{c} + {m}");
        }
    }
}

#[test]
fn adding_to_the_last_beats_appending() {
    for c in all_valid(4, 3) {
        for m in 1..=3 {
            let mut appended = c.as_slice().to_vec();
            appended.push(m);
            let mut bumped = c.as_slice().to_vec();
            *bumped.last_mut().unwrap() += m;
            assert_eq!(
                compare_roots(&coeffs(&bumped), &coeffs(&appended)),
                Ordering::Greater,
                "{c}, m={m}"
            );
        }
    }
}

#[test]
fn lambda_decreases_with_length() {
    let lambdas: Vec<Coefficients> = (2..=25)
        .map(|l| lambda_threshold(l, 1e-6).unwrap().coefficients)
        .collect();
    for w in lambdas.windows(2) {
        assert_eq!(
            compare_roots(&w[0], &w[1]),
            Ordering::Greater,
            "{} vs {}",
            w[0],
            w[1]
        );
    }
}

#[test]
fn lambda_lower_bound() {
    // p_L(1 + (L+2)/(L²+L+4)) ≤ 0 puts the bound at or below λ_L
    for l in 2..=24i64 {
        let t = ratio(1, 1) + ratio(l + 2, l * l + l + 4);
        let lt = lambda_threshold(l as usize, 1e-6).unwrap();
        let p = CharPoly::new(&lt.coefficients);
        assert_ne!(p.sign_at(&t), Ordering::Greater, "L={l}");
    }
}

#[test]
fn lambda_tends_to_one() {
    let t = ratio(11, 10);
    let first = (2..200)
        .find(|&l| {
            CharPoly::new(&lambda_threshold(l, 1e-3).unwrap().coefficients).sign_at(&t)
                == Ordering::Greater
        })
        .expect("some λ_L drops below 1.1");
    for l in first..first + 20 {
        assert_eq!(
            CharPoly::new(&trinomial(l, plrs_core::analytic::n_l(l) + 1)).sign_at(&t),
            Ordering::Greater
        );
    }
    eprintln!("first L with λ_L < 1.1: {first}");
}

#[test]
fn gap_order_on_a_grid() {
    let mut n = 0;
    for l in 3..=12 {
        for k in [1, 2, 5, 17, 60] {
            let g = root_order_gap(l, k).unwrap();
            assert!(g.certified, "L={l} k={k}");
            assert!(g.gap1 > g.gap2, "L={l} k={k}");
            n += 1;
        }
    }
    assert_eq!(n, 50);
}

#[test]
fn pls_minimiser_matches_exhaustive_search() {
    for len in 1..=5 {
        for s in 1..=8 {
            assert_eq!(
                min_root_in_pls_exhaustive(len, s),
                Some(min_root_in_pls(len, s).0),
                "L={len} S={s}"
            );
        }
    }
}

#[test]
fn triage_is_sound_on_the_small_space() {
    let mut by_path = [0usize; 3];
    for c in all_valid(4, 4) {
        let t = triage(&c);
        let truth = decide(&c, &EngineConfig::default()).kind;
        let oracle = oracle_check(&c).unwrap();
        match t.certificate {
            Certificate::RootTriage(TriagePath::TwoNegative) => {
                assert_eq!(oracle.kind, VerdictKind::Incomplete, "{c}");
                by_path[0] += 1;
            }
            Certificate::RootTriage(TriagePath::BelowLambda) => {
                assert!(t.conjectural);
                assert!(!t.kind.contradicts(truth), "conjecture falsified by {c}");
                assert!(
                    !t.kind.contradicts(oracle.kind),
                    "conjecture falsified by {c}"
                );
                by_path[1] += 1;
            }
            Certificate::RootTriage(TriagePath::Indeterminate) => by_path[2] += 1,
            _ => unreachable!(),
        }
    }
    assert_eq!(by_path.iter().sum::<usize>(), 500);
    eprintln!("triage paths (p2-negative, below-lambda, indeterminate): {by_path:?}");
}

#[test]
fn threshold_frontier_sits_on_lambda() {
    let r = exact_threshold_search(3).unwrap();
    assert!(r.frontier.is_none() && r.unresolved.is_empty());
    assert_eq!(r.lambda.unwrap().lambda.exact_root(), Some(2));
    for (len, want) in [(4usize, [1u64, 0, 0, 6].as_slice()), (5, &[1, 0, 0, 0, 9])] {
        let r = exact_threshold_search(len).unwrap();
        assert!(r.unresolved.is_empty());
        let (c, _) = r.frontier.unwrap();
        assert_eq!(c.as_slice(), want);
        assert_eq!(r.against_lambda, Some(Ordering::Equal));
    }
}

#[test]
fn boundary_roots_are_exactly_two() {
    for len in 2..=10 {
        let mut v = vec![1u64; len];
        v[len - 1] = 2;
        let c = coeffs(&v);
        assert_eq!(CharPoly::new(&c).sign_at_int(2), Ordering::Equal);
        assert_eq!(principal_root(&c, DEFAULT_TOLERANCE).exact_root(), Some(2));
    }
}

#[test]
fn growth_rate_tracks_the_root() {
    for c in of_length(3, 3).chain(of_length(2, 4)) {
        let t = plrs_core::generate_terms(&c, 201);
        let q = BigRational::new(
            t.get(201).unwrap().clone().into(),
            t.get(200).unwrap().clone().into(),
        );
        let r = principal_root(&c, DEFAULT_TOLERANCE);
        let rel =
            (num_traits::ToPrimitive::to_f64(&q).unwrap() - r.midpoint()).abs() / r.midpoint();
        assert!(rel < 1e-6, "{c}: {rel}");
    }
}
