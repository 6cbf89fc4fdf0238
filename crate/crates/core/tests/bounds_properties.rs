use lefschetz_core::bounds::{
    degree_lower_bound, filtration_weights, prefix_max, psi, psi_max, torsion_card_exponent, weighted_ratio, PsiInput,
    Regime,
};
use lefschetz_core::gamma::gamma_simple;
use lefschetz_core::intmath::omega;
use lefschetz_core::stabilizer::{index_exponent, FiltrationProfile};
use lefschetz_core::variety::{AlbertType, SimpleFactor};
use lefschetz_oracle::{gcd_u64, omega_naive, partitions, psi_grid_max, so_codimension};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[test]
fn closed_form_maxima_match_grid_search() {
    for h in 1..=6u64 {
        for e in 1..=3 {
            for fs in partitions(e) {
                assert_eq!(
                    psi_max(h, &fs, Regime::Isotropic).unwrap(),
                    psi_grid_max(h, &fs, 0),
                    "h={h} f={fs:?}"
                );
                assert_eq!(
                    psi_max(h, &fs, Regime::Full).unwrap(),
                    psi_grid_max(h, &fs, 1),
                    "h={h} f={fs:?}"
                );
            }
        }
    }
}

#[test]
fn full_regime_is_gamma_and_dominates() {
    for h in 1..=100u64 {
        for e in 1..=10u64 {
            let iso = psi_max(h, &[e], Regime::Isotropic).unwrap();
            let full = psi_max(h, &[e], Regime::Full).unwrap();
            assert!(full >= iso, "h={h} e={e}");
            let f = SimpleFactor::simple(AlbertType::III, e, h).unwrap();
            assert_eq!(full.max(iso), gamma_simple(&f));
        }
    }
}

/// Every filtration of rank ≤ 2h with at most three steps, exponents in 1..=4,
/// and each admissible flag pattern.
fn filtrations(h: u64) -> Vec<FiltrationProfile> {
    let mut out = Vec::new();
    let top = 2 * h as u32;
    let mut rank_chains: Vec<Vec<u32>> = Vec::new();
    for a in 1..=top {
        rank_chains.push(vec![a]);
        for b in 1..a {
            rank_chains.push(vec![a, b]);
            for c in 1..b {
                rank_chains.push(vec![a, b, c]);
            }
        }
    }
    let mut exp_chains: Vec<Vec<u32>> = Vec::new();
    for a in 1..=4 {
        exp_chains.push(vec![a]);
        for b in a + 1..=4 {
            exp_chains.push(vec![a, b]);
            for c in b + 1..=4 {
                exp_chains.push(vec![a, b, c]);
            }
        }
    }
    for ranks in &rank_chains {
        for exps in exp_chains.iter().filter(|e| e.len() == ranks.len()) {
            for ones in 0..=ranks.len() {
                let p = FiltrationProfile {
                    ranks: ranks.clone(),
                    exponents: exps.clone(),
                    residue_degree: 1,
                    isotropy: (0..ranks.len()).map(|i| i < ones).collect(),
                };
                if p.validate(h).is_ok() {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[test]
fn filtration_fractions_reduce_to_gamma() {
    for h in 1..=4u64 {
        let gamma = gamma_simple(&SimpleFactor::simple(AlbertType::III, 1, h).unwrap());
        let mut best: Option<BigRational> = None;
        for p in filtrations(h) {
            let (a, b) = filtration_weights(&p, h, 2).unwrap();
            let m: Vec<BigRational> = p.exponents.iter().rev().map(|&x| int(x as i64)).collect();
            let torsion = torsion_card_exponent(&p, 2).unwrap() as i64;
            let index = index_exponent(&p, h).unwrap().augmented as i64;
            assert_eq!(
                weighted_ratio(&a, &b, &m),
                Some(BigRational::new(torsion.into(), index.into()))
            );
            let (v, _) = prefix_max(&a, &b).unwrap();
            assert!(weighted_ratio(&a, &b, &m).unwrap() <= v);
            assert!(v <= gamma, "h={h} {p:?}");
            if best.as_ref().is_none_or(|x| v > *x) {
                best = Some(v);
            }
        }
        assert_eq!(best.unwrap(), gamma, "h={h}");
    }
}

fn decreasing(len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..50, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #[test]
    fn psi_matches_definition(h in 1u64..12, raw in prop::collection::vec((1u64..4, 0.0f64..=1.0), 1..4), delta in 0u8..=1) {
        let cap = if delta == 0 { h } else { 2 * h };
        let ranks: Vec<u64> = raw.iter().map(|(_, x)| (cap as f64 * x).floor() as u64).collect();
        let fs: Vec<u64> = raw.iter().map(|(f, _)| *f).collect();
        let num: u64 = fs.iter().zip(&ranks).map(|(f, r)| 2 * f * r).sum();
        let den: u64 = delta as u64 + fs.iter().zip(&ranks).map(|(f, &r)| f * so_codimension(r, h)).sum::<u64>();
        let input = PsiInput { h, residue_degrees: fs, ranks, delta };
        match psi(&input) {
            Ok(v) => prop_assert_eq!(v, BigRational::new(num.into(), den.into())),
            Err(_) => prop_assert_eq!(den, 0),
        }
    }

    #[test]
    fn prefix_max_dominates_and_is_attained(
        pairs in prop::collection::vec((-20i64..20, 1i64..20, 1i64..5), 1..8),
        samples in prop::collection::vec(decreasing(8), 50),
    ) {
        let a: Vec<BigRational> = pairs.iter().map(|&(x, _, d)| BigRational::new(x.into(), d.into())).collect();
        let b: Vec<BigRational> = pairs.iter().map(|&(_, y, d)| BigRational::new(y.into(), d.into())).collect();
        let (value, k) = prefix_max(&a, &b).unwrap();
        let indicator: Vec<BigRational> = (0..a.len()).map(|i| int((i < k) as i64)).collect();
        prop_assert_eq!(weighted_ratio(&a, &b, &indicator), Some(value.clone()));
        for m in samples {
            let m: Vec<BigRational> = m.iter().take(a.len()).map(|&x| int(x as i64)).collect();
            if let Some(v) = weighted_ratio(&a, &b, &m) {
                prop_assert!(v <= value);
            }
        }
    }

    #[test]
    fn omega_is_additive_on_coprime_arguments(a in 1u64..200_000, b in 1u64..200_000) {
        prop_assume!(gcd_u64(a, b) == 1);
        prop_assert_eq!(omega(a * b), omega(a) + omega(b));
        prop_assert_eq!(omega(a), omega_naive(a));
        prop_assert_eq!(degree_lower_bound(a * b, 1).unwrap().0, omega_naive(a * b));
    }
}
