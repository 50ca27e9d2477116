mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use invcayley::graph::regular_degree;
use invcayley::invariants::connected_components;
use invcayley::oracle::predicted_component_count;
use invcayley::poly::{
    add, inv_count_formula, involutions_bruteforce, involutions_closed_form, is_involution, mul,
    sub,
};
use invcayley::ring::{crt_combine, crt_split, factorize, inv_count_zn, involutions_zn};
use invcayley::{build_cayley_graph, Limits, PolyRingSpec, ZMod};

use common::*;

fn small_spec() -> impl Strategy<Value = (u64, u32)> {
    (2u64..=40, 0u32..=3).prop_filter("ring fits the brute-force cap", |&(n, d)| {
        ring_size(n, d) <= 20_000
    })
}

fn coeff_sets(v: &[invcayley::TruncPoly]) -> BTreeSet<Vec<u64>> {
    v.iter().map(|f| f.coeffs().to_vec()).collect()
}

#[test]
fn zn_involutions_match_scan_up_to_ten_thousand() {
    for n in 2..=10_000u64 {
        let closed: Vec<u64> = involutions_zn(n)
            .unwrap()
            .iter()
            .map(|u| u.value())
            .collect();
        assert_eq!(closed, naive_zn_involutions(n), "n={n}");
        assert_eq!(inv_count_zn(n).unwrap(), closed.len() as u64, "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_equals_bruteforce((n, d) in small_spec()) {
        let spec = PolyRingSpec::new(n, d).unwrap();
        let l = Limits::default();
        let closed = coeff_sets(&involutions_closed_form(spec, &l).unwrap());
        let naive: BTreeSet<Vec<u64>> = naive_involutions(n, d).into_iter().collect();
        prop_assert_eq!(&closed, &naive);
        prop_assert_eq!(&coeff_sets(&involutions_bruteforce(spec, &l).unwrap()), &naive);
        prop_assert_eq!(inv_count_formula(spec).unwrap(), naive.len() as u64);
    }

    #[test]
    fn involutions_closed_under_negation((n, d) in small_spec()) {
        let spec = PolyRingSpec::new(n, d).unwrap();
        let inv = involutions_closed_form(spec, &Limits::default()).unwrap();
        let set = coeff_sets(&inv);
        for u in &inv {
            prop_assert!(set.contains(u.neg().coeffs()));
        }
    }

    #[test]
    fn truncation_and_padding_are_consistent(n in 2u64..=30, d in 0u32..=2) {
        // Only the involutions are enumerated, so the ring-size cap can go.
        let l = Limits { vertex_cap: u64::MAX, ..Limits::default() };
        let lower = coeff_sets(&involutions_closed_form(PolyRingSpec::new(n, d).unwrap(), &l).unwrap());
        let upper = involutions_closed_form(PolyRingSpec::new(n, d + 1).unwrap(), &l).unwrap();
        let truncated: BTreeSet<Vec<u64>> =
            upper.iter().map(|f| f.truncate(d).coeffs().to_vec()).collect();
        prop_assert_eq!(&truncated, &lower);
        let upper = coeff_sets(&upper);
        for f in &lower {
            let mut padded = f.clone();
            padded.push(0);
            prop_assert!(upper.contains(&padded));
        }
    }

    #[test]
    fn crt_round_trip(n in 2u64..=1_000_000, a in any::<u64>()) {
        let f = factorize(n).unwrap();
        let x = ZMod::new(a % n, n);
        let parts = crt_split(x, &f).unwrap();
        prop_assert_eq!(parts.iter().map(|p| p.modulus()).product::<u64>(), n);
        prop_assert_eq!(crt_combine(&parts, &f).unwrap(), x);
    }

    #[test]
    fn factorization_reconstructs(n in 2u64..=u32::MAX as u64) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.prime_powers().iter().product::<u64>(), n);
    }

    #[test]
    fn involution_test_matches_naive_squaring(
        n in 2u64..=64,
        coeffs in proptest::collection::vec(any::<u64>(), 1..6),
    ) {
        let d = coeffs.len() as u32 - 1;
        let spec = PolyRingSpec::new(n, d).unwrap();
        let reduced: Vec<u64> = coeffs.iter().map(|c| c % n).collect();
        let f = spec.poly(&reduced).unwrap();
        prop_assert_eq!(is_involution(&f), squares_to_one(&reduced, n));
    }

    #[test]
    fn truncated_ring_axioms(
        n in 2u64..=30,
        a in proptest::collection::vec(any::<u64>(), 3),
        b in proptest::collection::vec(any::<u64>(), 3),
        c in proptest::collection::vec(any::<u64>(), 3),
    ) {
        let spec = PolyRingSpec::new(n, 2).unwrap();
        let p = |v: &[u64]| spec.poly(&v.iter().map(|x| x % n).collect::<Vec<_>>()).unwrap();
        let (a, b, c) = (p(&a), p(&b), p(&c));
        prop_assert_eq!(add(&a, &b).unwrap(), add(&b, &a).unwrap());
        prop_assert_eq!(mul(&a, &b).unwrap(), mul(&b, &a).unwrap());
        prop_assert_eq!(
            mul(&mul(&a, &b).unwrap(), &c).unwrap(),
            mul(&a, &mul(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            mul(&a, &add(&b, &c).unwrap()).unwrap(),
            add(&mul(&a, &b).unwrap(), &mul(&a, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(add(&sub(&a, &b).unwrap(), &b).unwrap(), a);
    }

    #[test]
    fn graph_matches_naive_adjacency((n, d) in small_spec().prop_filter("small", |&(n, d)| ring_size(n, d) <= 3_000)) {
        let spec = PolyRingSpec::new(n, d).unwrap();
        let g = build_cayley_graph(spec, &Limits::default()).unwrap();
        let naive = naive_adjacency(n, d);
        for (v, ns) in naive.iter().enumerate() {
            prop_assert_eq!(g.neighbors(v), ns.as_slice());
        }
        prop_assert!(g.is_symmetric_simple());
        prop_assert_eq!(regular_degree(&g).unwrap() as u64, inv_count_formula(spec).unwrap());
        let sizes = component_sizes(&naive);
        prop_assert_eq!(connected_components(&g).count, sizes.len());
        prop_assert_eq!(sizes.len() as u64, predicted_component_count(spec));
    }
}
