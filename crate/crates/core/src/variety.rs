//! Combinatorial descriptions of abelian varieties.
//!
//! A simple factor is recorded by its Albert type, the degree `e` of the
//! center of its endomorphism algebra, its relative dimension `h` and its
//! multiplicity `n` in the product. Isogeny between factors is not (and
//! cannot be) detected from these invariants; factors are assumed pairwise
//! non-isogenous.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on each of `e`, `h`, `n`. Keeps every per-factor invariant
/// inside `u64`.
pub const MAX_INVARIANT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum AlbertType {
    I,
    II,
    III,
}

impl AlbertType {
    /// Square root of `[D:E]`: 1 for type I, 2 for types II and III.
    pub fn d(self) -> u64 {
        match self {
            AlbertType::I => 1,
            AlbertType::II | AlbertType::III => 2,
        }
    }

    /// Sign distinguishing symplectic (+1, types I/II) from orthogonal
    /// (−1, type III) Hodge groups.
    pub fn eta(self) -> i64 {
        match self {
            AlbertType::I | AlbertType::II => 1,
            AlbertType::III => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AlbertType::I => "I",
            AlbertType::II => "II",
            AlbertType::III => "III",
        }
    }
}

impl FromStr for AlbertType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" | "1" => Ok(AlbertType::I),
            "II" | "2" => Ok(AlbertType::II),
            "III" | "3" => Ok(AlbertType::III),
            "IV" | "4" => Err(Error::TypeIV),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

impl TryFrom<String> for AlbertType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<AlbertType> for String {
    fn from(t: AlbertType) -> String {
        t.as_str().to_string()
    }
}

impl fmt::Display for AlbertType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One simple factor `A_i^{n_i}` of the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFactor")]
pub struct SimpleFactor {
    #[serde(rename = "type")]
    albert: AlbertType,
    e: u64,
    h: u64,
    n: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    #[serde(rename = "type")]
    albert: String,
    e: u64,
    h: u64,
    #[serde(default = "one")]
    n: u64,
}

fn one() -> u64 {
    1
}

impl TryFrom<RawFactor> for SimpleFactor {
    type Error = Error;
    fn try_from(raw: RawFactor) -> Result<Self> {
        SimpleFactor::new(raw.albert.parse()?, raw.e, raw.h, raw.n)
    }
}

fn check(field: &'static str, value: u64) -> Result<u64> {
    if value == 0 {
        return Err(Error::ZeroInvariant { field });
    }
    if value > MAX_INVARIANT {
        return Err(Error::InvariantTooLarge {
            field,
            value,
            max: MAX_INVARIANT,
        });
    }
    Ok(value)
}

impl SimpleFactor {
    pub fn new(albert: AlbertType, e: u64, h: u64, n: u64) -> Result<Self> {
        Ok(SimpleFactor {
            albert,
            e: check("e", e)?,
            h: check("h", h)?,
            n: check("n", n)?,
        })
    }

    /// A single copy (`n = 1`).
    pub fn simple(albert: AlbertType, e: u64, h: u64) -> Result<Self> {
        Self::new(albert, e, h, 1)
    }

    pub fn albert(&self) -> AlbertType {
        self.albert
    }
    pub fn e(&self) -> u64 {
        self.e
    }
    pub fn h(&self) -> u64 {
        self.h
    }
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The same factor with multiplicity 1.
    pub fn single_copy(&self) -> Self {
        SimpleFactor { n: 1, ..*self }
    }

    /// `dim A_i = d·e·h` for one copy.
    pub fn dimension(&self) -> u64 {
        factor_dimension(self)
    }

    /// `dim Hg(A_i) = e·(2h² + η·h)`.
    pub fn hodge_dimension(&self) -> u64 {
        let h = self.h as i128;
        let inner = 2 * h * h + self.albert.eta() as i128 * h;
        (self.e as i128 * inner) as u64
    }
}

/// Ordered list of simple factors, at least one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProduct")]
pub struct VarietyProduct {
    factors: Vec<SimpleFactor>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    factors: Vec<SimpleFactor>,
}

impl TryFrom<RawProduct> for VarietyProduct {
    type Error = Error;
    fn try_from(raw: RawProduct) -> Result<Self> {
        VarietyProduct::new(raw.factors)
    }
}

impl VarietyProduct {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(VarietyProduct { factors })
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product with one more factor appended.
    pub fn with_factor(&self, f: SimpleFactor) -> Self {
        let mut factors = self.factors.clone();
        factors.push(f);
        VarietyProduct { factors }
    }

    /// `g = Σ n_i·d_i·e_i·h_i`.
    pub fn total_dimension(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| f.n as u128 * factor_dimension(f) as u128)
            .sum()
    }

    /// Parse the canonical JSON form
    /// `{"factors":[{"type":"III","e":1,"h":5,"n":1}, ...]}`.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| {
            // serde wraps our own errors as custom messages; surface the
            // type-IV case with its dedicated variant
            let msg = e.to_string();
            if msg.starts_with(&Error::TypeIV.to_string()) {
                Error::TypeIV
            } else {
                Error::Malformed(msg)
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// The factors picked by `subset` (0-based indices).
    pub fn select(&self, subset: &[usize]) -> Result<Vec<SimpleFactor>> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = vec![false; self.factors.len()];
        subset
            .iter()
            .map(|&i| {
                let f = self.factors.get(i).ok_or(Error::IndexOutOfRange {
                    index: i,
                    len: self.factors.len(),
                })?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::DuplicateIndex(i));
                }
                Ok(*f)
            })
            .collect()
    }
}

/// Dimension of one copy of the factor: `e·h` for type I, `2·e·h` for
/// types II and III.
pub fn factor_dimension(f: &SimpleFactor) -> u64 {
    f.albert.d() * f.e * f.h
}

/// `Σ e_i(2h_i² + η_i·h_i)` over the subset, the dimension of the Hodge
/// group of the product of the chosen factors. Multiplicities do not enter.
pub fn hodge_dimension(subset: &[SimpleFactor]) -> Result<u128> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(subset.iter().map(|f| f.hodge_dimension() as u128).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlbertType::*;

    fn f(t: AlbertType, e: u64, h: u64) -> SimpleFactor {
        SimpleFactor::simple(t, e, h).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(factor_dimension(&f(I, 1, 1)), 1);
        assert_eq!(factor_dimension(&f(III, 1, 5)), 10);
        assert_eq!(factor_dimension(&f(II, 3, 2)), 12);
    }

    #[test]
    fn hodge_dimensions() {
        assert_eq!(hodge_dimension(&[f(III, 1, 5)]).unwrap(), 45);
        assert_eq!(hodge_dimension(&[f(I, 1, 1)]).unwrap(), 3);
        assert_eq!(hodge_dimension(&[f(I, 2, 1), f(III, 1, 2)]).unwrap(), 12);
        assert_eq!(hodge_dimension(&[]), Err(Error::EmptySubset));
    }

    #[test]
    fn closed_forms_agree() {
        for t in [I, II, III] {
            for e in 1..5 {
                for h in 1..30 {
                    let expected = match t {
                        III => e * h * (2 * h - 1),
                        _ => e * h * (2 * h + 1),
                    };
                    assert_eq!(f(t, e, h).hodge_dimension(), expected);
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_invariants() {
        assert_eq!(SimpleFactor::new(I, 0, 1, 1), Err(Error::ZeroInvariant { field: "e" }));
        assert_eq!(
            SimpleFactor::new(III, 1, 0, 1),
            Err(Error::ZeroInvariant { field: "h" })
        );
        assert_eq!(SimpleFactor::new(II, 1, 1, 0), Err(Error::ZeroInvariant { field: "n" }));
        assert!(matches!(
            SimpleFactor::new(II, 1, MAX_INVARIANT + 1, 1),
            Err(Error::InvariantTooLarge { field: "h", .. })
        ));
        assert_eq!(VarietyProduct::new(vec![]), Err(Error::EmptyProduct));
    }

    #[test]
    fn json_parsing() {
        let v = VarietyProduct::from_json(
            r#"{"factors":[{"type":"I","e":1,"h":1,"n":1},{"type":"III","e":1,"h":5,"n":2}]}"#,
        )
        .unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v.factors()[1].n(), 2);
        assert_eq!(v.total_dimension(), 1 + 2 * 10);

        let err = VarietyProduct::from_json(r#"{"factors":[{"type":"IV","e":1,"h":1,"n":1}]}"#);
        assert_eq!(err, Err(Error::TypeIV));

        let err = VarietyProduct::from_json(r#"{"factors":[{"type":"I","e":1,"h":1,"n":1,"x":0}]}"#);
        assert!(matches!(err, Err(Error::Malformed(_))));
        let err = VarietyProduct::from_json(r#"{"factors":[],"extra":1}"#);
        assert!(matches!(err, Err(Error::Malformed(_))));
        let err = VarietyProduct::from_json(r#"{"factors":[]}"#);
        assert!(matches!(err, Err(Error::Malformed(_))));
        let err = VarietyProduct::from_json(r#"{"factors":[{"type":"I","e":0,"h":1,"n":1}]}"#);
        assert!(matches!(err, Err(Error::Malformed(m)) if m.contains("`e` must be positive")));
    }

    #[test]
    fn json_round_trip() {
        let v = VarietyProduct::new(vec![f(II, 3, 2), f(III, 1, 7)]).unwrap();
        let back = VarietyProduct::from_json(&v.to_json()).unwrap();
        assert_eq!(v, back);
        assert!(v.to_json().contains(r#""type":"II""#));
    }

    #[test]
    fn select_validates() {
        let v = VarietyProduct::new(vec![f(I, 1, 1), f(III, 1, 5)]).unwrap();
        assert_eq!(v.select(&[1]).unwrap(), vec![f(III, 1, 5)]);
        assert_eq!(v.select(&[]), Err(Error::EmptySubset));
        assert_eq!(v.select(&[2]), Err(Error::IndexOutOfRange { index: 2, len: 2 }));
        assert_eq!(v.select(&[0, 0]), Err(Error::DuplicateIndex(0)));
    }
}
