//! Module-level invariants beyond the acceptance gate: solver/verifier
//! agreement against raw-equation sweeps, oracle/search consistency on the
//! Descartes shape, factorization round-trips, and randomized ordering laws.

mod common;

use proptest::prelude::*;

use descartes::{
    brute_force_oracle_with, factorize, is_descartes_pair, pair_search, rational_cmp,
    sieve_primes, sigma, sigma_sieve, solve_m, Factorization, Integer, OracleConfig, Rational,
    SearchConstraint,
};

fn fact(pairs: &[(u64, u32)]) -> Factorization {
    Factorization::from_pairs(pairs).unwrap()
}

#[test]
fn factorize_round_trips_up_to_1e5() {
    for n in 1u64..=100_000 {
        let f = factorize(&Integer::from(n)).unwrap();
        assert_eq!(f.value(), Integer::from(n), "round-trip failed at {n}");
        for (p, e) in f.factors() {
            assert!(*e >= 1);
            let _ = p;
        }
    }
}

#[test]
fn solver_agrees_with_raw_equation_sweep() {
    // literal sweep of sigma(k)(m+1) = 2km over odd m for small odd k,
    // using only sieved sigma values and u64 arithmetic
    let table = sigma_sieve(1, 2002).unwrap();
    for k in (1u64..=2001).step_by(2) {
        let s = table.get(k).unwrap();
        let mut raw_hits = Vec::new();
        for m in (1u64..=100_000).step_by(2) {
            if s * (m + 1) == 2 * k * m && k * m > 1 {
                raw_hits.push(m);
            }
        }
        let solved = solve_m(&factorize(&Integer::from(k)).unwrap()).unwrap();
        let solved_u64: Vec<u64> = solved.iter().map(|m| u64::try_from(m).unwrap()).collect();
        assert_eq!(raw_hits, solved_u64, "k = {k}");
    }
}

#[test]
fn solver_output_always_verifies_up_to_1e5() {
    // the defining equation pins m to sigma(k)/(2k - sigma(k)); whenever the
    // solver accepts, the verifier must agree
    let table = sigma_sieve(1, 100_001).unwrap();
    for k in (1u64..=100_000).step_by(2) {
        let s = table.get(k).unwrap();
        let kf = factorize(&Integer::from(k)).unwrap();
        let solved = solve_m(&kf).unwrap();
        // cross-check the solver against raw u64 arithmetic
        let raw = if 2 * k > s && s.is_multiple_of(2 * k - s) {
            let m = s / (2 * k - s);
            (m % 2 == 1 && k * m > 1).then_some(m)
        } else {
            None
        };
        assert_eq!(
            solved.as_ref().map(|m| u64::try_from(m).unwrap()),
            raw,
            "k = {k}"
        );
        if let Some(m) = solved {
            let mf = factorize(&m).unwrap();
            assert!(is_descartes_pair(&kf, &mf), "k = {k}");
        }
    }
}

#[test]
fn oracle_and_pair_search_agree_on_the_descartes_shape() {
    // k = 3^2 7^2 p^2 q^2: the pair enumeration with the lemma-9 bound must
    // recover exactly the oracle hits of that shape, and vice versa
    let base = fact(&[(3, 2), (7, 2)]);
    let c = SearchConstraint::new(base.clone(), 49).unwrap();
    let pairs = pair_search(&c).unwrap();
    assert!(pairs.contains(&(11, 13)));

    let mut search_hits = Vec::new();
    for &(p, q) in &pairs {
        let k = base.mul(&fact(&[(p, 2), (q, 2)]));
        if let Some(m) = solve_m(&k).unwrap() {
            search_hits.push((k.value(), m));
        }
    }
    assert_eq!(
        search_hits,
        vec![(Integer::from(9018009), Integer::from(22021))]
    );

    let cfg = OracleConfig {
        segment_size: 1 << 20,
        workers: 4,
    };
    let oracle_hits = brute_force_oracle_with(10_000_000, &cfg).unwrap();
    let oracle_of_shape: Vec<(Integer, Integer)> = oracle_hits
        .iter()
        .filter(|hit| {
            hit.k().exponent_of(&Integer::from(3)) == 2
                && hit.k().exponent_of(&Integer::from(7)) == 2
                && hit.k().omega() == 4
        })
        .map(|hit| (hit.k().value(), hit.m().value()))
        .collect();
    assert_eq!(search_hits, oracle_of_shape);

    // every verified pair satisfies the abundancy identity sigma(k)/k = 2m/(m+1)
    for hit in &oracle_hits {
        let two_m = Integer::from(2) * hit.m().value();
        let m_plus_1 = hit.m().value() + Integer::from(1);
        assert_eq!(hit.abundancy(), Rational::new(two_m, m_plus_1));
    }
}

#[test]
fn search_output_is_deterministic() {
    let c = SearchConstraint::new(fact(&[(3, 2), (5, 2), (13, 2)]), 2449).unwrap();
    let a = pair_search(&c).unwrap();
    let b = pair_search(&c).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
}

#[test]
fn sigma_of_squared_primes_in_the_sieve_range() {
    // sigma(p^2) = p^2 + p + 1 for all primes p up to 10^4
    for p in sieve_primes(10_000) {
        let f = fact(&[(p, 2)]);
        assert_eq!(sigma(&f), Integer::from(p * p + p + 1));
    }
}

proptest! {
    #[test]
    fn rational_cmp_matches_cross_multiplication(
        an in -10_000i64..10_000,
        ad in 1i64..10_000,
        bn in -10_000i64..10_000,
        bd in 1i64..10_000,
    ) {
        let a = Rational::new(Integer::from(an), Integer::from(ad));
        let b = Rational::new(Integer::from(bn), Integer::from(bd));
        // cross-multiplication with positive denominators
        let lhs = Integer::from(an) * Integer::from(bd);
        let rhs = Integer::from(bn) * Integer::from(ad);
        prop_assert_eq!(rational_cmp(&a, &b), lhs.cmp(&rhs));
    }

    #[test]
    fn rational_cmp_is_a_total_order(
        an in -1000i64..1000, ad in 1i64..1000,
        bn in -1000i64..1000, bd in 1i64..1000,
        cn in -1000i64..1000, cd in 1i64..1000,
    ) {
        use std::cmp::Ordering;
        let r = |n: i64, d: i64| Rational::new(Integer::from(n), Integer::from(d));
        let (a, b, c) = (r(an, ad), r(bn, bd), r(cn, cd));
        // antisymmetry
        prop_assert_eq!(rational_cmp(&a, &b), rational_cmp(&b, &a).reverse());
        // transitivity of <=
        if rational_cmp(&a, &b) != Ordering::Greater && rational_cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(rational_cmp(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn factorization_value_round_trips(n in 1u64..1_000_000_000u64) {
        let f = factorize(&Integer::from(n)).unwrap();
        prop_assert_eq!(f.value(), Integer::from(n));
        // primes strictly increasing
        for w in f.factors().windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn sigma_is_multiplicative_on_random_coprime_pairs(a in 1u64..10_000, b in 1u64..10_000) {
        fn gcd(mut a: u64, mut b: u64) -> u64 {
            while b != 0 { (a, b) = (b, a % b); }
            a
        }
        prop_assume!(gcd(a, b) == 1);
        let fa = factorize(&Integer::from(a)).unwrap();
        let fb = factorize(&Integer::from(b)).unwrap();
        let fab = factorize(&Integer::from(a * b)).unwrap();
        prop_assert_eq!(sigma(&fab), sigma(&fa) * sigma(&fb));
    }
}
