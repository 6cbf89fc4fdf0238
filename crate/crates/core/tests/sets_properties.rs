use lefschetz_core::sets::{
    doubled_sigma_prime, enumerate_set, enumerate_sigma_prime_from, half_is_odd, in_odd_exclusion, in_sigma,
    in_sigma_prime, membership, v2_central_binomial, SetTag,
};
use lefschetz_oracle::{binomial_factorial, odd_exclusion_naive, sigma_naive, sigma_prime_naive, v2};
use proptest::prelude::*;

const TAGS: [SetTag; 3] = [SetTag::Sigma, SetTag::SigmaPrime, SetTag::OddExclusion];

fn values(list: &[(u64, lefschetz_core::MembershipCertificate)]) -> Vec<u64> {
    list.iter().map(|(v, _)| *v).collect()
}

#[test]
fn enumeration_equals_membership_filter() {
    let bound = 30_000;
    for tag in TAGS {
        let filtered: Vec<u64> = (1..=bound).filter(|&x| membership(tag, x).is_some()).collect();
        assert_eq!(values(&enumerate_set(tag, bound)), filtered, "{tag:?}");
    }
}

#[test]
fn enumeration_matches_naive_definitions() {
    let bound = 1_000_000;
    assert_eq!(values(&enumerate_set(SetTag::Sigma, bound)), sigma_naive(bound));
    assert_eq!(
        values(&enumerate_set(SetTag::SigmaPrime, bound)),
        sigma_prime_naive(bound, 1)
    );
    assert_eq!(
        values(&enumerate_set(SetTag::OddExclusion, bound)),
        odd_exclusion_naive(bound)
    );
    assert_eq!(
        values(&enumerate_sigma_prime_from(bound, 2)),
        sigma_prime_naive(bound, 2)
    );
    let big = 10_000_000_000;
    assert_eq!(
        values(&enumerate_set(SetTag::SigmaPrime, big)),
        sigma_prime_naive(big, 1)
    );
}

#[test]
fn every_certificate_reevaluates() {
    for tag in TAGS {
        for (v, c) in enumerate_set(tag, 2_000_000) {
            assert!(c.verify(), "{c}");
            assert_eq!(c.value_u64(), Some(v));
            assert_eq!(c.set_tag, tag);
        }
    }
}

#[test]
fn odd_exclusion_values_are_also_in_sigma_prime() {
    for h in [3, 35, 6435] {
        assert!(in_odd_exclusion(h).is_some());
        assert!(in_sigma_prime(h).is_some());
    }
}

#[test]
fn doubled_values_are_even_and_halve_into_the_set() {
    for (g, c) in doubled_sigma_prime(100_000) {
        assert_eq!(g % 2, 0);
        assert_eq!(c.value_u64(), Some(g / 2));
    }
}

#[test]
fn two_adic_lemma() {
    for k in 0..=200u64 {
        let exact = binomial_factorial(4 * k + 4, 2 * k + 2);
        assert_eq!(v2_central_binomial(k) as u64, v2(&exact), "k = {k}");
    }
    for k in 0..=10_000u64 {
        assert_eq!(half_is_odd(k), (k + 1).is_power_of_two(), "k = {k}");
    }
}

proptest! {
    #[test]
    fn membership_certificates_are_sound(x in 1u64..u64::MAX) {
        for tag in TAGS {
            if let Some(c) = membership(tag, x) {
                prop_assert!(c.verify());
                prop_assert_eq!(c.value_u64(), Some(x));
            }
        }
    }

    #[test]
    fn sigma_power_family_is_recognised(k in 3u32..12, a in 1u64..2000) {
        let v = (a as u128).checked_pow(k).and_then(|p| p.checked_mul(1u128 << (k - 1)));
        prop_assume!(v.is_some_and(|v| v <= u64::MAX as u128));
        prop_assert!(in_sigma(v.unwrap() as u64).is_some());
    }

    #[test]
    fn f4_family_is_recognised(s in 1u32..6, k in 2u64..5000) {
        let v = (1u128 << (2 * s - 1)).checked_mul((k as u128).pow(2 * s));
        prop_assume!(v.is_some_and(|v| v <= u64::MAX as u128));
        prop_assert!(in_sigma_prime(v.unwrap() as u64).is_some());
    }
}
