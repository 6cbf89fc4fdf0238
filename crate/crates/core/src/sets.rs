//! Exceptional dimension sets and their membership certificates.
//!
//! * Σ: `g = 2^{k−1}·a^k` (k ≥ 3, a ≥ 1) or `2g = C(2k, k)` (k ≥ 3).
//! * Σ′: the union of six families, every one with `s ≥ 1`:
//!   - F1 `2^{(4k+3)s−1}`, k ≥ 0
//!   - F2 `2^{4ks−1}`, k ≥ 1
//!   - F3 `2^{2s(4k+1)−1}`, k ≥ 1
//!   - F4 `2^{2s−1}·k^{2s}`, k ≥ 2
//!   - F5 `½·C(4k+4, 2k+2)^s`, k ≥ 0
//!   - F6 `½·C(4k+2, 2k+1)^{2s}`, k ≥ 0
//! * the odd type-III exclusion set `½·C(2^{m+2}, 2^{m+1})`, m ≥ 0.
//!
//! The closed form of Σ′ is sometimes displayed with `s > 1`; the
//! tensor-decomposition analysis behind it produces every family with
//! `s ≥ 1`, which is what [`in_sigma_prime`] uses. [`in_sigma_prime_from`]
//! takes the lower bound on `s` explicitly.
//!
//! Searches are exact (`u128` with overflow treated as "too large") and
//! complete: every family is strictly increasing in each parameter, so each
//! loop stops at the first value past the target.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::intmath::{binary_digit_sum, binomial, binomial_u128, checked_pow, exact_root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetTag {
    Sigma,
    SigmaPrime,
    OddExclusion,
}

impl SetTag {
    pub fn parse(s: &str) -> Option<SetTag> {
        match s {
            "sigma" => Some(SetTag::Sigma),
            "sigma-prime" => Some(SetTag::SigmaPrime),
            "odd-exclusion" => Some(SetTag::OddExclusion),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SetTag::Sigma => "sigma",
            SetTag::SigmaPrime => "sigma-prime",
            SetTag::OddExclusion => "odd-exclusion",
        }
    }

    /// Families of the set in the order membership tests try them.
    pub fn families(self) -> &'static [Family] {
        use Family::*;
        match self {
            SetTag::Sigma => &[SigmaPower, SigmaBinomial],
            SetTag::SigmaPrime => &[F1, F2, F3, F4, F5, F6],
            SetTag::OddExclusion => &[DyadicBinomial],
        }
    }
}

/// One parametrized family of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `2^{k−1}·a^k`
    SigmaPower,
    /// `½·C(2k, k)`
    SigmaBinomial,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    /// `½·C(2^{m+2}, 2^{m+1})`
    DyadicBinomial,
}

impl Family {
    pub fn id(self) -> &'static str {
        match self {
            Family::SigmaPower => "sigma-power",
            Family::SigmaBinomial => "sigma-binomial",
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
            Family::F4 => "F4",
            Family::F5 => "F5",
            Family::F6 => "F6",
            Family::DyadicBinomial => "dyadic-binomial",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Family::SigmaPower => "2^(k-1)*a^k, k>=3, a>=1",
            Family::SigmaBinomial => "C(2k,k)/2, k>=3",
            Family::F1 => "2^((4k+3)s-1), k>=0",
            Family::F2 => "2^(4ks-1), k>=1",
            Family::F3 => "2^(2s(4k+1)-1), k>=1",
            Family::F4 => "2^(2s-1)*k^(2s), k>=2",
            Family::F5 => "C(4k+4,2k+2)^s/2, k>=0",
            Family::F6 => "C(4k+2,2k+1)^(2s)/2, k>=0",
            Family::DyadicBinomial => "C(2^(m+2),2^(m+1))/2, m>=0",
        }
    }

    /// Exact value of the family at the given parameters, `None` when a
    /// parameter is missing or outside the family's range.
    pub fn evaluate(self, w: &BTreeMap<String, u64>) -> Option<BigUint> {
        let get = |name: &str| w.get(name).copied();
        let two = BigUint::from(2u8);
        let pow2 = |e: u64| -> Option<BigUint> { Some(BigUint::one() << e) };
        match self {
            Family::SigmaPower => {
                let (k, a) = (get("k")?, get("a")?);
                (k >= 3 && a >= 1).then_some(())?;
                Some(pow2(k - 1)? * BigUint::from(a).pow(k as u32))
            }
            Family::SigmaBinomial => {
                let k = get("k")?;
                (k >= 3).then_some(())?;
                Some(binomial(2 * k, k) / two)
            }
            Family::F1 => {
                let (k, s) = (get("k")?, get("s")?);
                (s >= 1).then_some(())?;
                pow2((4 * k + 3) * s - 1)
            }
            Family::F2 => {
                let (k, s) = (get("k")?, get("s")?);
                (k >= 1 && s >= 1).then_some(())?;
                pow2(4 * k * s - 1)
            }
            Family::F3 => {
                let (k, s) = (get("k")?, get("s")?);
                (k >= 1 && s >= 1).then_some(())?;
                pow2(2 * s * (4 * k + 1) - 1)
            }
            Family::F4 => {
                let (k, s) = (get("k")?, get("s")?);
                (k >= 2 && s >= 1).then_some(())?;
                Some(pow2(2 * s - 1)? * BigUint::from(k).pow(2 * s as u32))
            }
            Family::F5 => {
                let (k, s) = (get("k")?, get("s")?);
                (s >= 1).then_some(())?;
                Some(binomial(4 * k + 4, 2 * k + 2).pow(s as u32) / two)
            }
            Family::F6 => {
                let (k, s) = (get("k")?, get("s")?);
                (s >= 1).then_some(())?;
                Some(binomial(4 * k + 2, 2 * k + 1).pow(2 * s as u32) / two)
            }
            Family::DyadicBinomial => {
                let m = get("m")?;
                (m < 32).then_some(())?;
                let n = 1u64 << (m + 2);
                Some(binomial(n, n / 2) / two)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Proof that `value` belongs to a set: the family and its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub set_tag: SetTag,
    pub family: Family,
    pub witnesses: BTreeMap<String, u64>,
    #[serde(serialize_with = "ser_biguint")]
    pub value: BigUint,
}

fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

impl MembershipCertificate {
    fn new(set_tag: SetTag, family: Family, witnesses: &[(&str, u64)], value: u128) -> Self {
        MembershipCertificate {
            set_tag,
            family,
            witnesses: witnesses.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            value: BigUint::from(value),
        }
    }

    /// Re-evaluate the family formula at the witnesses (with arbitrary
    /// precision) and compare with the certified value.
    pub fn verify(&self) -> bool {
        self.set_tag.families().contains(&self.family)
            && self.family.evaluate(&self.witnesses).as_ref() == Some(&self.value)
    }

    pub fn value_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }
}

impl fmt::Display for MembershipCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.witnesses.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{} = {} [{}, {}]",
            self.value,
            self.family.formula(),
            self.family.id(),
            params.join(", ")
        )
    }
}

fn pow2(e: u64) -> Option<u128> {
    (e < 128).then(|| 1u128 << e)
}

/// Membership in Σ.
pub fn in_sigma(g: u64) -> Option<MembershipCertificate> {
    if g == 0 {
        return None;
    }
    let g = g as u128;
    // 2^{k−1} ≤ g bounds k
    let max_k = 128 - g.leading_zeros() as u64;
    for k in 3..=max_k {
        let scale = pow2(k - 1)?;
        if !g.is_multiple_of(scale) {
            continue;
        }
        if let Some(a) = exact_root(g / scale, k as u32) {
            if a >= 1 {
                return Some(MembershipCertificate::new(
                    SetTag::Sigma,
                    Family::SigmaPower,
                    &[("k", k), ("a", a as u64)],
                    g,
                ));
            }
        }
    }
    for k in 3.. {
        match binomial_u128(2 * k, k) {
            Some(c) if c == 2 * g => {
                return Some(MembershipCertificate::new(
                    SetTag::Sigma,
                    Family::SigmaBinomial,
                    &[("k", k)],
                    g,
                ))
            }
            Some(c) if c < 2 * g => continue,
            _ => break,
        }
    }
    None
}

/// Membership in Σ′ with every family taken over `s ≥ 1`.
pub fn in_sigma_prime(h: u64) -> Option<MembershipCertificate> {
    in_sigma_prime_from(h, 1)
}

/// Membership in Σ′ with `s ≥ min_s` in every family.
pub fn in_sigma_prime_from(h: u64, min_s: u64) -> Option<MembershipCertificate> {
    if h == 0 {
        return None;
    }
    let min_s = min_s.max(1);
    let target = h as u128;
    let cert = |family, w: &[(&str, u64)]| Some(MembershipCertificate::new(SetTag::SigmaPrime, family, w, target));

    // F1..F3: h = 2^E, parametrized through N = E + 1
    if target.is_power_of_two() {
        let n = target.trailing_zeros() as u64 + 1;
        for s in min_s..=n {
            if n.is_multiple_of(s) && (n / s) % 4 == 3 {
                return cert(Family::F1, &[("k", (n / s - 3) / 4), ("s", s)]);
            }
        }
        for s in min_s..=n {
            if n.is_multiple_of(s) && (n / s).is_multiple_of(4) {
                return cert(Family::F2, &[("k", n / s / 4), ("s", s)]);
            }
        }
        for s in min_s..=n {
            if n.is_multiple_of(2 * s) {
                let q = n / (2 * s);
                if q % 4 == 1 && q >= 5 {
                    return cert(Family::F3, &[("k", (q - 1) / 4), ("s", s)]);
                }
            }
        }
    }

    // F4: h = 2^{2s−1}·k^{2s}, smallest member of each s-row is at k = 2
    let mut s = min_s;
    let row_start = |s: u64| {
        let scale = pow2(2 * s - 1)?;
        let first = checked_pow(2, 2 * s as u32)?.checked_mul(scale)?;
        Some((scale, first))
    };
    while let Some((scale, first)) = row_start(s) {
        if first > target {
            break;
        }
        if target.is_multiple_of(scale) {
            if let Some(k) = exact_root(target / scale, 2 * s as u32) {
                if k >= 2 {
                    return cert(Family::F4, &[("k", k as u64), ("s", s)]);
                }
            }
        }
        s += 1;
    }

    // F5, F6: rows in s, binomials increasing in k
    for (family, exponent_per_s, n_of_k) in [
        (
            Family::F5,
            1u64,
            (|k: u64| (4 * k + 4, 2 * k + 2)) as fn(u64) -> (u64, u64),
        ),
        (Family::F6, 2u64, |k: u64| (4 * k + 2, 2 * k + 1)),
    ] {
        let mut s = min_s;
        loop {
            let mut row_nonempty = false;
            for k in 0.. {
                let (n, r) = n_of_k(k);
                let v = binomial_u128(n, r)
                    .and_then(|c| checked_pow(c, (exponent_per_s * s) as u32))
                    .map(|p| p / 2);
                match v {
                    Some(v) if v == target => return cert(family, &[("k", k), ("s", s)]),
                    Some(v) if v < target => row_nonempty = true,
                    _ => break,
                }
            }
            if !row_nonempty {
                break;
            }
            s += 1;
        }
    }
    None
}

/// Membership in the odd exclusion set `{½·C(2^{m+2}, 2^{m+1}) : m ≥ 0}`.
pub fn in_odd_exclusion(h: u64) -> Option<MembershipCertificate> {
    let target = h as u128;
    for m in 0..6u64 {
        let n = 1u64 << (m + 2);
        let Some(v) = binomial_u128(n, n / 2).map(|c| c / 2) else {
            break;
        };
        if v == target {
            return Some(MembershipCertificate::new(
                SetTag::OddExclusion,
                Family::DyadicBinomial,
                &[("m", m)],
                target,
            ));
        }
        if v > target {
            break;
        }
    }
    None
}

/// Dispatch on the set tag.
pub fn membership(tag: SetTag, x: u64) -> Option<MembershipCertificate> {
    match tag {
        SetTag::Sigma => in_sigma(x),
        SetTag::SigmaPrime => in_sigma_prime(x),
        SetTag::OddExclusion => in_odd_exclusion(x),
    }
}

/// Candidate values `≤ bound` produced by the families of `tag`; not
/// deduplicated against membership yet.
fn candidates(tag: SetTag, bound: u64, min_s: u64) -> BTreeSet<u64> {
    let bound_w = bound as u128;
    let mut out = BTreeSet::new();
    let mut push = |v: u128| {
        if v >= 1 && v <= bound_w {
            out.insert(v as u64);
        }
    };
    match tag {
        SetTag::Sigma => {
            for k in 3..128u32 {
                let Some(scale) = pow2(k as u64 - 1) else { break };
                if scale > bound_w {
                    break;
                }
                for a in 1u128.. {
                    match checked_pow(a, k).and_then(|p| p.checked_mul(scale)) {
                        Some(v) if v <= bound_w => push(v),
                        _ => break,
                    }
                }
            }
            for k in 3.. {
                match binomial_u128(2 * k, k) {
                    Some(c) if c / 2 <= bound_w => push(c / 2),
                    _ => break,
                }
            }
        }
        SetTag::SigmaPrime => {
            // powers of two: membership decides F1..F3
            for e in 0..64 {
                push(1u128 << e);
            }
            let mut s = min_s.max(1) as u32;
            while let Some(scale) = pow2(2 * s as u64 - 1) {
                if scale.saturating_mul(1 << (2 * s)) > bound_w {
                    break;
                }
                for k in 2u128.. {
                    match checked_pow(k, 2 * s).and_then(|p| p.checked_mul(scale)) {
                        Some(v) if v <= bound_w => push(v),
                        _ => break,
                    }
                }
                s += 1;
            }
            for (per_s, n_of_k) in [
                (1u32, (|k: u64| (4 * k + 4, 2 * k + 2)) as fn(u64) -> (u64, u64)),
                (2u32, |k: u64| (4 * k + 2, 2 * k + 1)),
            ] {
                for s in (min_s.max(1) as u32)..128 {
                    let mut any = false;
                    for k in 0.. {
                        let (n, r) = n_of_k(k);
                        match binomial_u128(n, r).and_then(|c| checked_pow(c, per_s * s)) {
                            Some(p) if p / 2 <= bound_w => {
                                push(p / 2);
                                any = true;
                            }
                            _ => break,
                        }
                    }
                    if !any {
                        break;
                    }
                }
            }
        }
        SetTag::OddExclusion => {
            for m in 0..6u64 {
                let n = 1u64 << (m + 2);
                match binomial_u128(n, n / 2) {
                    Some(c) if c / 2 <= bound_w => push(c / 2),
                    _ => break,
                }
            }
        }
    }
    out
}

/// All members `≤ bound`, sorted, one certificate each (the one the
/// membership test returns).
pub fn enumerate_set(tag: SetTag, bound: u64) -> Vec<(u64, MembershipCertificate)> {
    candidates(tag, bound, 1)
        .into_iter()
        .filter_map(|v| membership(tag, v).map(|c| (v, c)))
        .collect()
}

/// Σ′ members `≤ bound` with `s ≥ min_s` in every family.
pub fn enumerate_sigma_prime_from(bound: u64, min_s: u64) -> Vec<(u64, MembershipCertificate)> {
    candidates(SetTag::SigmaPrime, bound, min_s)
        .into_iter()
        .filter_map(|v| in_sigma_prime_from(v, min_s).map(|c| (v, c)))
        .collect()
}

/// `{2h : h ∈ Σ′, 2h ≤ bound}` with the certificate for `h`.
pub fn doubled_sigma_prime(bound: u64) -> Vec<(u64, MembershipCertificate)> {
    enumerate_set(SetTag::SigmaPrime, bound / 2)
        .into_iter()
        .map(|(h, c)| (2 * h, c))
        .collect()
}

/// 2-adic valuation of `C(4k+4, 2k+2)`, equal to the binary digit sum of
/// `k + 1`.
pub fn v2_central_binomial(k: u64) -> u32 {
    binary_digit_sum(k + 1)
}

/// Whether `½·C(4k+4, 2k+2)` is odd.
pub fn half_is_odd(k: u64) -> bool {
    v2_central_binomial(k) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(c: &Option<MembershipCertificate>) -> Option<(Family, Vec<(String, u64)>)> {
        c.as_ref()
            .map(|c| (c.family, c.witnesses.clone().into_iter().collect()))
    }

    fn w(pairs: &[(&str, u64)]) -> Vec<(String, u64)> {
        let mut v: Vec<_> = pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        v.sort();
        v
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(fam(&in_sigma(4)), Some((Family::SigmaPower, w(&[("k", 3), ("a", 1)]))));
        assert_eq!(fam(&in_sigma(10)), Some((Family::SigmaBinomial, w(&[("k", 3)]))));
        assert_eq!(in_sigma(5), None);
        assert_eq!(in_sigma(1), None);
        assert_eq!(in_sigma(0), None);
        // 2^2·2^3 = 32 with k=3, a=2
        assert_eq!(fam(&in_sigma(32)), Some((Family::SigmaPower, w(&[("k", 3), ("a", 2)]))));
        // 8 = 2^3 needs k=4, a=1
        assert_eq!(fam(&in_sigma(8)), Some((Family::SigmaPower, w(&[("k", 4), ("a", 1)]))));
        // ½·C(8,4) = 35
        assert_eq!(fam(&in_sigma(35)), Some((Family::SigmaBinomial, w(&[("k", 4)]))));
    }

    #[test]
    fn sigma_prime_examples() {
        assert_eq!(fam(&in_sigma_prime(3)), Some((Family::F5, w(&[("k", 0), ("s", 1)]))));
        assert_eq!(fam(&in_sigma_prime(35)), Some((Family::F5, w(&[("k", 1), ("s", 1)]))));
        assert_eq!(in_sigma_prime(5), None);
        assert_eq!(fam(&in_sigma_prime(8)), Some((Family::F2, w(&[("k", 1), ("s", 1)]))));
        assert_eq!(fam(&in_sigma_prime(4)), Some((Family::F1, w(&[("k", 0), ("s", 1)]))));
        assert_eq!(fam(&in_sigma_prime(2)), Some((Family::F6, w(&[("k", 0), ("s", 1)]))));
        assert_eq!(fam(&in_sigma_prime(108)), Some((Family::F5, w(&[("k", 0), ("s", 3)]))));
        assert_eq!(fam(&in_sigma_prime(18)), Some((Family::F4, w(&[("k", 3), ("s", 1)]))));
        // 2^9: N = 10 = 2·1·5 → F3 only
        assert_eq!(fam(&in_sigma_prime(512)), Some((Family::F3, w(&[("k", 1), ("s", 1)]))));
        assert_eq!(in_sigma_prime(1), None);
        assert_eq!(in_sigma_prime(500), None);
    }

    #[test]
    fn sigma_prime_strict_s_reading() {
        assert_eq!(in_sigma_prime_from(3, 2), None);
        assert_eq!(
            fam(&in_sigma_prime_from(18, 2)),
            Some((Family::F5, w(&[("k", 0), ("s", 2)])))
        );
        assert_eq!(
            fam(&in_sigma_prime_from(8, 2)),
            Some((Family::F6, w(&[("k", 0), ("s", 2)])))
        );
    }

    #[test]
    fn odd_exclusion_examples() {
        assert_eq!(
            fam(&in_odd_exclusion(3)),
            Some((Family::DyadicBinomial, w(&[("m", 0)])))
        );
        assert_eq!(
            fam(&in_odd_exclusion(6435)),
            Some((Family::DyadicBinomial, w(&[("m", 2)])))
        );
        assert_eq!(in_odd_exclusion(7), None);
        assert_eq!(
            fam(&in_odd_exclusion(300_540_195)),
            Some((Family::DyadicBinomial, w(&[("m", 3)])))
        );
    }

    #[test]
    fn enumerations() {
        let vals = |t, b| enumerate_set(t, b).into_iter().map(|(v, _)| v).collect::<Vec<_>>();
        assert_eq!(vals(SetTag::OddExclusion, 1_000_000), vec![3, 35, 6435]);
        assert_eq!(vals(SetTag::SigmaPrime, 2), vec![2]);
        assert_eq!(vals(SetTag::Sigma, 4), vec![4]);
        assert_eq!(vals(SetTag::Sigma, 40), vec![4, 8, 10, 16, 32, 35]);
    }

    #[test]
    fn certificates_verify() {
        for tag in [SetTag::Sigma, SetTag::SigmaPrime, SetTag::OddExclusion] {
            for (v, c) in enumerate_set(tag, 200_000) {
                assert!(c.verify(), "{c}");
                assert_eq!(c.value_u64(), Some(v));
            }
        }
        let mut bad = in_sigma_prime(35).unwrap();
        bad.witnesses.insert("s".into(), 2);
        assert!(!bad.verify());
        let mut wrong_set = in_sigma(4).unwrap();
        wrong_set.set_tag = SetTag::SigmaPrime;
        assert!(!wrong_set.verify());
    }

    #[test]
    fn v2_lemma() {
        assert_eq!(v2_central_binomial(0), 1);
        assert_eq!(v2_central_binomial(2), 2);
        assert_eq!(v2_central_binomial(3), 1);
        assert!(half_is_odd(0) && half_is_odd(1) && half_is_odd(3) && !half_is_odd(2));
    }

    #[test]
    fn certificate_json() {
        let c = in_sigma_prime(35).unwrap();
        let j = serde_json::to_value(&c).unwrap();
        assert_eq!(j["set_tag"], "sigma-prime");
        assert_eq!(j["family"], "F5");
        assert_eq!(j["witnesses"]["k"], 1);
        assert_eq!(j["value"], 35);
    }
}
