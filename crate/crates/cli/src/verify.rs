//! The oracle suite behind `lefschetz verify` and the acceptance tests.
//!
//! Each criterion runs an optimized routine from `lefschetz-core` against an
//! independent computation (the oracle crate, an exhaustive search, or a
//! fixed reference list) and records what it compared.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use lefschetz_core::bounds::{prefix_max, psi_max, weighted_ratio, Regime};
use lefschetz_core::gamma::{gamma_conjectural_form, gamma_product, gamma_simple, GammaConfig};
use lefschetz_core::minuscule::exclusion_dimensions;
use lefschetz_core::reference::{
    compare_doubled_sigma_prime, compare_odd_exclusion, count_doubled_sigma_prime, DOUBLED_SIGMA_PRIME_COUNT_TO_1E6,
    DOUBLED_SIGMA_PRIME_TO_1000, ODD_EXCLUSION_TO_1E6,
};
use lefschetz_core::sets::{enumerate_set, half_is_odd, v2_central_binomial, SetTag};
use lefschetz_core::stabilizer::{point_count_index, toy_profiles, verify_dimensions, FieldChoice, FormKind};
use lefschetz_core::{AlbertType, Fraction, SimpleFactor, VarietyProduct};
use lefschetz_oracle::{binomial_factorial, partitions, psi_grid_max, v2};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Smaller sample sizes and product sizes; the exact checks are unchanged.
    pub quick: bool,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            quick: false,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub detail: Value,
}

pub const TITLES: [&str; 10] = [
    "odd exclusion set up to 10^6",
    "doubled sigma-prime against the reference list up to 1000",
    "doubled sigma-prime count up to 10^6",
    "psi closed-form maxima against grid search",
    "product gamma: both forms, monotonicity, worked example",
    "stabilizer dimensions against the formula",
    "index law by exhaustive point counting",
    "minuscule generator against the closed families",
    "2-adic valuation of central binomials",
    "prefix-max lemma on random instances",
];

pub fn run_all(opts: &VerifyOptions) -> Vec<Criterion> {
    (1..=10).map(|id| run_one(id, opts)).collect()
}

/// Run criterion `id` (1-based). Panics on an unknown id.
pub fn run_one(id: u8, opts: &VerifyOptions) -> Criterion {
    let start = Instant::now();
    let (passed, detail) = match id {
        1 => odd_exclusion(),
        2 => reference_list(),
        3 => reference_count(),
        4 => psi_maxima(),
        5 => product_gamma(opts),
        6 => stabilizer_dims(opts),
        7 => index_law(),
        8 => minuscule_generator(),
        9 => two_adic(),
        10 => prefix_lemma(opts),
        _ => panic!("no criterion {id}"),
    };
    let elapsed = start.elapsed();
    let limit = time_limit(id);
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut detail = detail;
    if let (Some(l), Value::Object(map)) = (limit, &mut detail) {
        map.insert("time_limit_ms".into(), json!(l.as_millis() as u64));
    }
    Criterion {
        id,
        title: TITLES[id as usize - 1],
        passed: passed && in_time,
        elapsed_ms: elapsed.as_millis(),
        detail,
    }
}

fn time_limit(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(1)),
        2 => Some(Duration::from_secs(5)),
        3 => Some(Duration::from_secs(60)),
        6 => Some(Duration::from_secs(30)),
        _ => None,
    }
}

fn odd_exclusion() -> (bool, Value) {
    let bound = 1_000_000;
    let values: Vec<u64> = enumerate_set(SetTag::OddExclusion, bound)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    let cmp = compare_odd_exclusion(bound, &ODD_EXCLUSION_TO_1E6);
    let passed = cmp.is_exact() && values == ODD_EXCLUSION_TO_1E6;
    (passed, json!({ "values": values, "comparison": cmp }))
}

fn reference_list() -> (bool, Value) {
    let cmp = compare_doubled_sigma_prime(1000, &DOUBLED_SIGMA_PRIME_TO_1000);
    let only_216_missing = cmp.only_reference.iter().all(|m| m.value == 216);
    let extras_certified = cmp
        .only_computed
        .iter()
        .all(|e| e.certificate.verify() && e.certificate.value_u64() == Some(e.value / 2));
    let missing_explained = cmp.only_reference.iter().all(|m| !m.reason.is_empty());
    let passed = cmp.matched >= 20 && only_216_missing && extras_certified && missing_explained;
    (passed, json!({ "comparison": cmp }))
}

fn reference_count() -> (bool, Value) {
    let cmp = count_doubled_sigma_prime(1_000_000, DOUBLED_SIGMA_PRIME_COUNT_TO_1E6);
    // a mismatch is acceptable as long as it is broken down
    let itemized = cmp.by_family.iter().map(|(_, n)| n).sum::<usize>() == cmp.computed;
    (itemized, json!({ "comparison": cmp }))
}

fn psi_maxima() -> (bool, Value) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for h in 1..=8u64 {
        for e in 1..=3u64 {
            for fs in partitions(e) {
                cases += 1;
                let iso = psi_max(h, &fs, Regime::Isotropic).expect("valid input");
                let full = psi_max(h, &fs, Regime::Full).expect("valid input");
                let gamma = gamma_simple(&SimpleFactor::simple(AlbertType::III, e, h).expect("small"));
                let ok = iso == psi_grid_max(h, &fs, 0)
                    && full == psi_grid_max(h, &fs, 1)
                    && iso.clone().max(full.clone()) == gamma;
                if !ok {
                    failures.push(json!({ "h": h, "residue_degrees": fs }));
                }
            }
        }
    }
    (failures.is_empty(), json!({ "cases": cases, "failures": failures }))
}

/// The 72 factors with type in {I, II, III}, e ≤ 2, h ≤ 4, n ≤ 3.
fn factor_menu() -> Vec<SimpleFactor> {
    let mut out = Vec::new();
    for t in [AlbertType::I, AlbertType::II, AlbertType::III] {
        for e in 1..=2 {
            for h in 1..=4 {
                for n in 1..=3 {
                    out.push(SimpleFactor::new(t, e, h, n).expect("small invariants"));
                }
            }
        }
    }
    out
}

type Key = [u8; 4];

/// Outcome for one product: its γ, how many subsets were compared and the
/// first disagreement between the two forms, if any.
struct ProductCheck {
    key: Key,
    gamma: (u64, u64),
    subsets: usize,
    mismatch: Option<Value>,
}
const EMPTY: u8 = u8::MAX;

/// Non-decreasing index tuples of length `1..=max_len`, padded with `EMPTY`.
fn multisets(menu_len: usize, max_len: usize) -> Vec<Key> {
    fn go(start: usize, menu_len: usize, max_len: usize, cur: &mut Vec<u8>, out: &mut Vec<Key>) {
        for i in start..menu_len {
            cur.push(i as u8);
            let mut key = [EMPTY; 4];
            key[..cur.len()].copy_from_slice(cur);
            out.push(key);
            if cur.len() < max_len {
                go(i, menu_len, max_len, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, menu_len, max_len, &mut Vec::new(), &mut out);
    out
}

fn small_fraction(f: &Fraction) -> (u64, u64) {
    (
        f.numer().to_u64().expect("small numerator"),
        f.denom().to_u64().expect("small denominator"),
    )
}

fn product_gamma(opts: &VerifyOptions) -> (bool, Value) {
    let menu = factor_menu();
    let max_len = if opts.quick { 3 } else { 4 };
    let keys = multisets(menu.len(), max_len);

    // every subset of every product, both forms
    let results: Vec<ProductCheck> = keys
        .par_iter()
        .map(|&key| {
            let factors: Vec<SimpleFactor> = key
                .iter()
                .take_while(|&&i| i != EMPTY)
                .map(|&i| menu[i as usize])
                .collect();
            let v = VarietyProduct::new(factors).expect("nonempty");
            let r = gamma_product(&v, &GammaConfig::audited()).expect("at most four factors");
            let audit = r.per_subset.as_deref().unwrap_or_default();
            let mut mismatch = None;
            for s in audit {
                let other = gamma_conjectural_form(&v, &s.subset).expect("valid subset");
                if other != s.value.0 && mismatch.is_none() {
                    mismatch = Some(json!({
                        "product": v, "subset": s.subset, "engine": s.value, "conjectural_form": Fraction(other),
                    }));
                }
            }
            ProductCheck {
                key,
                gamma: small_fraction(&r.value),
                subsets: audit.len(),
                mismatch,
            }
        })
        .collect();

    let subsets_checked: usize = results.iter().map(|r| r.subsets).sum();
    let form_mismatches: Vec<Value> = results.iter().filter_map(|r| r.mismatch.clone()).take(5).collect();
    let expected_subsets: usize = keys
        .iter()
        .map(|k| (1usize << k.iter().filter(|&&i| i != EMPTY).count()) - 1)
        .sum();

    // γ(P + f) ≥ γ(P): look up every product with one factor removed
    let gamma: HashMap<Key, (u64, u64)> = results.iter().map(|r| (r.key, r.gamma)).collect();
    let mut monotonicity_checks = 0usize;
    let mut monotonicity_failures = Vec::new();
    for ProductCheck { key, gamma: (n, d), .. } in &results {
        let len = key.iter().take_while(|&&i| i != EMPTY).count();
        if len < 2 {
            continue;
        }
        for drop in 0..len {
            let mut smaller = [EMPTY; 4];
            let rest: Vec<u8> = (0..len).filter(|&i| i != drop).map(|i| key[i]).collect();
            smaller[..rest.len()].copy_from_slice(&rest);
            let (sn, sd) = gamma[&smaller];
            monotonicity_checks += 1;
            if (*n as u128) * (sd as u128) < (sn as u128) * (*d as u128) && monotonicity_failures.len() < 5 {
                monotonicity_failures.push(json!({ "larger": key, "smaller": smaller }));
            }
        }
    }

    let example = VarietyProduct::new(vec![
        SimpleFactor::new(AlbertType::I, 1, 1, 1).expect("valid"),
        SimpleFactor::new(AlbertType::III, 1, 5, 1).expect("valid"),
    ])
    .expect("nonempty");
    let r = gamma_product(&example, &GammaConfig::default()).expect("two factors");
    let example_ok = r.value == Fraction::new(1, 2) && r.argmax == vec![0];

    let passed = form_mismatches.is_empty()
        && subsets_checked == expected_subsets
        && monotonicity_failures.is_empty()
        && example_ok;
    (
        passed,
        json!({
            "factor_choices": menu.len(),
            "max_factors": max_len,
            "products": keys.len(),
            "subsets_checked": subsets_checked,
            "form_mismatches": form_mismatches,
            "monotonicity_checks": monotonicity_checks,
            "monotonicity_failures": monotonicity_failures,
            "worked_example": { "gamma": r.value, "argmax_one_based": r.argmax.iter().map(|i| i + 1).collect::<Vec<_>>() },
        }),
    )
}

fn stabilizer_dims(opts: &VerifyOptions) -> (bool, Value) {
    let trials = if opts.quick { 10 } else { 50 };
    match verify_dimensions(&[2, 4, 6, 8], trials, opts.seed, FieldChoice::default()) {
        Ok(cases) => {
            let failures: Vec<_> = cases.iter().filter(|c| !c.passed()).take(5).cloned().collect();
            let crafted = cases.iter().filter(|c| c.crafted).count();
            let kinds_covered = [FormKind::Symplectic, FormKind::Orthogonal]
                .iter()
                .all(|k| cases.iter().any(|c| c.kind == *k));
            let passed = failures.is_empty() && kinds_covered && crafted > 0;
            (
                passed,
                json!({
                    "cases": cases.len(), "crafted": crafted, "random_per_dimension": trials,
                    "seed": opts.seed, "failures": failures,
                }),
            )
        }
        Err(e) => (false, json!({ "error": e.to_string() })),
    }
}

fn index_law() -> (bool, Value) {
    let (lo, hi) = (
        BigRational::new(1.into(), 4.into()),
        BigRational::from_integer(4.into()),
    );
    let mut rows = Vec::new();
    let mut all_in_range = true;
    let mut worked_case = false;
    for ell in [2u64, 3, 5] {
        for level in 1..=2u32 {
            for p in toy_profiles(level) {
                let pc = point_count_index(ell, level, &p).expect("toy grid");
                let in_range = pc.ratio.0 >= lo && pc.ratio.0 <= hi;
                all_in_range &= in_range;
                worked_case |= ell == 5 && level == 1 && pc.index == 24 && pc.predicted_exponent == 2;
                rows.push(json!({
                    "ell": ell, "level": level, "ranks": p.ranks, "exponents": p.exponents,
                    "index": pc.index, "predicted": BigInt::from(ell).pow(pc.predicted_exponent).to_string(),
                    "ratio": pc.ratio, "in_range": in_range,
                }));
            }
        }
    }
    (
        all_in_range && worked_case,
        json!({ "profiles": rows.len(), "worked_case_found": worked_case, "rows": rows }),
    )
}

fn minuscule_generator() -> (bool, Value) {
    let dims = exclusion_dimensions(2000);
    let odd: Vec<u64> = dims.iter().copied().filter(|d| d % 2 == 1).collect();
    let halved: Vec<u64> = dims.iter().map(|d| d / 2).collect();
    let closed: Vec<u64> = enumerate_set(SetTag::SigmaPrime, 1000)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    let only_generated: Vec<u64> = halved.iter().copied().filter(|h| !closed.contains(h)).collect();
    let only_closed: Vec<u64> = closed.iter().copied().filter(|h| !halved.contains(h)).collect();
    let passed = odd.is_empty() && halved == closed;
    (
        passed,
        json!({
            "generated": dims.len(), "closed_family_values": closed.len(),
            "odd_dimensions": odd, "only_generated": only_generated, "only_closed": only_closed,
        }),
    )
}

fn two_adic() -> (bool, Value) {
    let parity_failures: Vec<u64> = (0..=10_000u64)
        .filter(|&k| half_is_odd(k) != (k + 1).is_power_of_two())
        .collect();
    let valuation_failures: Vec<u64> = (0..=200u64)
        .filter(|&k| v2_central_binomial(k) as u64 != v2(&binomial_factorial(4 * k + 4, 2 * k + 2)))
        .collect();
    (
        parity_failures.is_empty() && valuation_failures.is_empty(),
        json!({
            "parity_range": [0, 10_000], "valuation_range": [0, 200],
            "parity_failures": parity_failures, "valuation_failures": valuation_failures,
        }),
    )
}

struct Instance {
    a: Vec<BigRational>,
    b: Vec<BigRational>,
}

fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let len = rng.gen_range(1..=8);
    let mut q = || BigRational::new(rng.gen_range(1i64..=50).into(), rng.gen_range(1i64..=6).into());
    let a = (0..len).map(|_| q()).collect();
    let b = (0..len).map(|_| q()).collect();
    Instance { a, b }
}

/// Clear denominators so samples can be compared in machine integers.
fn integer_weights(xs: &[BigRational], ys: &[BigRational]) -> (Vec<i128>, Vec<i128>) {
    let lcm = xs.iter().chain(ys).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = |v: &[BigRational]| {
        v.iter()
            .map(|x| {
                (x * BigRational::from_integer(lcm.clone()))
                    .to_integer()
                    .to_i128()
                    .expect("small")
            })
            .collect()
    };
    (scale(xs), scale(ys))
}

fn prefix_lemma(opts: &VerifyOptions) -> (bool, Value) {
    let (instances, samples) = if opts.quick { (20, 1_000) } else { (100, 10_000) };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cases: Vec<(Instance, u64)> = (0..instances).map(|_| (random_instance(&mut rng), rng.gen())).collect();

    let outcomes: Vec<(bool, bool, usize)> = cases
        .par_iter()
        .map(|(inst, sample_seed)| {
            let (value, k) = prefix_max(&inst.a, &inst.b).expect("positive weights");
            let indicator: Vec<BigRational> = (0..inst.a.len())
                .map(|i| if i < k { BigRational::one() } else { BigRational::zero() })
                .collect();
            let attained = weighted_ratio(&inst.a, &inst.b, &indicator) == Some(value.clone());

            let (a, b) = integer_weights(&inst.a, &inst.b);
            let (p, q) = (
                value.numer().to_i128().expect("small"),
                value.denom().to_i128().expect("small"),
            );
            let mut rng = ChaCha8Rng::seed_from_u64(*sample_seed);
            let mut exceeded = 0;
            let mut m = vec![0i128; a.len()];
            for _ in 0..samples {
                for x in m.iter_mut() {
                    *x = rng.gen_range(0..=100);
                }
                m.sort_unstable_by(|x, y| y.cmp(x));
                if m[0] == 0 {
                    m[0] = 1;
                }
                let num: i128 = a.iter().zip(&m).map(|(x, w)| x * w).sum();
                let den: i128 = b.iter().zip(&m).map(|(x, w)| x * w).sum();
                // num/den > p/q with den, q > 0
                if num * q > p * den {
                    exceeded += 1;
                }
            }
            (attained, exceeded == 0, samples)
        })
        .collect();

    let not_attained = outcomes.iter().filter(|o| !o.0).count();
    let exceeded = outcomes.iter().filter(|o| !o.1).count();
    (
        not_attained == 0 && exceeded == 0,
        json!({
            "instances": instances, "samples_per_instance": samples, "seed": opts.seed,
            "instances_not_attained": not_attained, "instances_exceeded": exceeded,
            "total_samples": outcomes.iter().map(|o| o.2).sum::<usize>(),
        }),
    )
}
