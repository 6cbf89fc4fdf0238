use lefschetz_core::gamma::{gamma_conjectural_form, gamma_product, gamma_simple, GammaConfig};
use lefschetz_core::variety::{hodge_dimension, AlbertType, SimpleFactor, VarietyProduct};
use lefschetz_oracle::{gamma_brute, subset_fraction, Factor};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn albert(k: u8) -> AlbertType {
    match k {
        1 => AlbertType::I,
        2 => AlbertType::II,
        _ => AlbertType::III,
    }
}

fn factor_strategy(max_e: u64, max_h: u64, max_n: u64) -> impl Strategy<Value = (u8, u64, u64, u64)> {
    (1u8..=3, 1..=max_e, 1..=max_h, 1..=max_n)
}

fn build(raw: &[(u8, u64, u64, u64)]) -> (VarietyProduct, Vec<Factor>) {
    let core = raw
        .iter()
        .map(|&(t, e, h, n)| SimpleFactor::new(albert(t), e, h, n).unwrap())
        .collect();
    let oracle = raw
        .iter()
        .map(|&(albert, e, h, n)| Factor { albert, e, h, n })
        .collect();
    (VarietyProduct::new(core).unwrap(), oracle)
}

proptest! {
    #[test]
    fn matches_brute_force(raw in prop::collection::vec(factor_strategy(50, 50, 5), 1..7)) {
        let (v, o) = build(&raw);
        let r = gamma_product(&v, &GammaConfig::default()).unwrap();
        let (value, argmax) = gamma_brute(&o);
        prop_assert_eq!(r.value.0, value);
        prop_assert_eq!(r.argmax, argmax);
    }

    #[test]
    fn audit_agrees_with_second_form(raw in prop::collection::vec(factor_strategy(1000, 1000, 10), 1..6)) {
        let (v, o) = build(&raw);
        let r = gamma_product(&v, &GammaConfig::audited()).unwrap();
        for s in r.per_subset.unwrap() {
            prop_assert_eq!(&s.value.0, &gamma_conjectural_form(&v, &s.subset).unwrap());
            prop_assert_eq!(&s.value.0, &subset_fraction(&o, &s.subset));
        }
    }

    #[test]
    fn adding_a_factor_never_decreases(
        raw in prop::collection::vec(factor_strategy(20, 20, 4), 1..6),
        extra in factor_strategy(20, 20, 4),
    ) {
        let (v, _) = build(&raw);
        let bigger = v.with_factor(SimpleFactor::new(albert(extra.0), extra.1, extra.2, extra.3).unwrap());
        let cfg = GammaConfig::default();
        prop_assert!(gamma_product(&bigger, &cfg).unwrap().value >= gamma_product(&v, &cfg).unwrap().value);
    }

    #[test]
    fn singleton_lower_bound_and_masser_bound(raw in prop::collection::vec(factor_strategy(100, 100, 8), 1..6)) {
        let (v, _) = build(&raw);
        let r = gamma_product(&v, &GammaConfig::default()).unwrap();
        for f in v.factors() {
            let n = BigRational::from_integer(BigInt::from(f.n()));
            prop_assert!(r.value.0 >= gamma_simple(f) * n);
        }
        let g = BigRational::from_integer(BigInt::from(v.total_dimension()));
        prop_assert!(r.value.0 < g);
        prop_assert!(r.value.0 > BigRational::from_integer(0.into()));
    }

    #[test]
    fn hodge_closed_forms(t in 1u8..=3, e in 1u64..=1_000_000, h in 1u64..=1_000_000) {
        let f = SimpleFactor::simple(albert(t), e, h).unwrap();
        let expected = if t == 3 { e as u128 * h as u128 * (2 * h as u128 - 1) } else { e as u128 * h as u128 * (2 * h as u128 + 1) };
        prop_assert_eq!(hodge_dimension(&[f]).unwrap(), expected);
    }

    #[test]
    fn hodge_dimension_is_additive(
        a in prop::collection::vec(factor_strategy(100, 100, 3), 1..4),
        b in prop::collection::vec(factor_strategy(100, 100, 3), 1..4),
    ) {
        let (va, _) = build(&a);
        let (vb, _) = build(&b);
        let mut joined = va.factors().to_vec();
        joined.extend_from_slice(vb.factors());
        prop_assert_eq!(
            hodge_dimension(&joined).unwrap(),
            hodge_dimension(va.factors()).unwrap() + hodge_dimension(vb.factors()).unwrap()
        );
    }

    #[test]
    fn json_round_trip(raw in prop::collection::vec(factor_strategy(1000, 1000, 10), 1..5)) {
        let (v, _) = build(&raw);
        prop_assert_eq!(VarietyProduct::from_json(&v.to_json()).unwrap(), v);
    }
}

#[test]
fn single_copy_matches_simple_form() {
    for t in 1..=3 {
        for e in 1..=6 {
            for h in 1..=12 {
                let f = SimpleFactor::simple(albert(t), e, h).unwrap();
                let v = VarietyProduct::new(vec![f]).unwrap();
                let r = gamma_product(&v, &GammaConfig::default()).unwrap();
                assert_eq!(r.value.0, gamma_simple(&f));
                assert_eq!(r.argmax, vec![0]);
            }
        }
    }
}

#[test]
fn twenty_factors_are_accepted() {
    let f = SimpleFactor::new(AlbertType::III, 1, 3, 1).unwrap();
    let v = VarietyProduct::new(vec![f; 20]).unwrap();
    let r = gamma_product(&v, &GammaConfig::default()).unwrap();
    // all twenty copies: 2·20·6 / (1 + 20·15)
    assert_eq!(r.value.0, BigRational::new(240.into(), 301.into()));
    assert_eq!(r.argmax.len(), 20);
}
