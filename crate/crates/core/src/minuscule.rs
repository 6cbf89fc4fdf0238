//! Minuscule weights of the classical root systems, their dimensions and
//! Frobenius–Schur indicators, and the tensor-power generator for the
//! exceptional relative dimensions of type III.
//!
//! | type | weight              | dimension     | duality                                   |
//! |------|---------------------|---------------|-------------------------------------------|
//! | A_ℓ  | ω_r, 1 ≤ r ≤ ℓ      | C(ℓ+1, r)     | (−1)^r if 2r = ℓ+1, else 0                |
//! | B_ℓ  | ω_ℓ                 | 2^ℓ           | +1 if ℓ ≡ 0, 3 (mod 4), else −1           |
//! | C_ℓ  | ω_1                 | 2ℓ            | −1                                        |
//! | D_ℓ  | ω_1                 | 2ℓ            | +1                                        |
//! | D_ℓ  | ω_{ℓ−1}, ω_ℓ        | 2^{ℓ−1}       | +1 if ℓ ≡ 0, −1 if ℓ ≡ 2 (mod 4), 0 if odd |
//!
//! Ranks: A ℓ ≥ 1, B ℓ ≥ 2, C ℓ ≥ 2, D ℓ ≥ 3.
//!
//! A tensor power `E^{⊗s}` of one minuscule representation carries an
//! invariant symmetric form when `E` is orthogonal, or when `E` is
//! symplectic and `s` is even. Every such dimension other than the standard
//! representation of a special orthogonal group is an exceptional `2h`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intmath::{binomial_u128, checked_pow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootSystem {
    A,
    B,
    C,
    D,
}

impl RootSystem {
    pub const ALL: [RootSystem; 4] = [RootSystem::A, RootSystem::B, RootSystem::C, RootSystem::D];

    pub fn min_rank(self) -> u32 {
        match self {
            RootSystem::A => 1,
            RootSystem::B | RootSystem::C => 2,
            RootSystem::D => 3,
        }
    }

    /// Indices `r` of the minuscule fundamental weights `ω_r` at rank `l`.
    pub fn minuscule_weights(self, l: u32) -> Vec<u32> {
        match self {
            RootSystem::A => (1..=l).collect(),
            RootSystem::B => vec![l],
            RootSystem::C => vec![1],
            RootSystem::D => vec![1, l - 1, l],
        }
    }

    pub fn is_minuscule(self, l: u32, r: u32) -> bool {
        match self {
            RootSystem::A => (1..=l).contains(&r),
            RootSystem::B => r == l,
            RootSystem::C => r == 1,
            RootSystem::D => r == 1 || r + 1 == l || r == l,
        }
    }
}

impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(RootSystem::A),
            "B" | "b" => Ok(RootSystem::B),
            "C" | "c" => Ok(RootSystem::C),
            "D" | "d" => Ok(RootSystem::D),
            other => Err(Error::OutOfTable(format!("unknown root system {other:?}"))),
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Frobenius–Schur indicator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Duality {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl Duality {
    pub fn sign(self) -> i8 {
        match self {
            Duality::Orthogonal => 1,
            Duality::Symplectic => -1,
            Duality::NotSelfDual => 0,
        }
    }
}

impl Serialize for Duality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.sign())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MinusculeEntry {
    pub root_system: RootSystem,
    pub rank: u32,
    pub weight_index: u32,
    #[serde(serialize_with = "ser_dim")]
    pub dimension: BigUint,
    pub duality: Duality,
}

fn ser_dim<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

impl fmt::Display for MinusculeEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} w{} (dim {}, duality {:+})",
            self.root_system,
            self.rank,
            self.weight_index,
            self.dimension,
            self.duality.sign()
        )
    }
}

fn dimension_u128(rs: RootSystem, l: u32, r: u32) -> Option<u128> {
    match rs {
        RootSystem::A => binomial_u128(l as u64 + 1, r as u64),
        RootSystem::B => checked_pow(2, l),
        RootSystem::C => Some(2 * l as u128),
        RootSystem::D if r == 1 => Some(2 * l as u128),
        RootSystem::D => checked_pow(2, l - 1),
    }
}

fn dimension_big(rs: RootSystem, l: u32, r: u32) -> BigUint {
    match rs {
        RootSystem::A => crate::intmath::binomial(l as u64 + 1, r as u64),
        RootSystem::B => BigUint::from(1u8) << l,
        RootSystem::C => BigUint::from(2 * l as u64),
        RootSystem::D if r == 1 => BigUint::from(2 * l as u64),
        RootSystem::D => BigUint::from(1u8) << (l - 1),
    }
}

fn duality(rs: RootSystem, l: u32, r: u32) -> Duality {
    match rs {
        RootSystem::A if 2 * r == l + 1 => {
            if r.is_multiple_of(2) {
                Duality::Orthogonal
            } else {
                Duality::Symplectic
            }
        }
        RootSystem::A => Duality::NotSelfDual,
        RootSystem::B => match l % 4 {
            0 | 3 => Duality::Orthogonal,
            _ => Duality::Symplectic,
        },
        RootSystem::C => Duality::Symplectic,
        RootSystem::D if r == 1 => Duality::Orthogonal,
        RootSystem::D => match l % 4 {
            0 => Duality::Orthogonal,
            2 => Duality::Symplectic,
            _ => Duality::NotSelfDual,
        },
    }
}

/// Row of the table for `(root_system, rank, ω_r)`.
pub fn table_lookup(root_system: RootSystem, rank: u32, weight_index: u32) -> Result<MinusculeEntry> {
    if rank < root_system.min_rank() {
        return Err(Error::OutOfTable(format!(
            "{root_system}{rank}: rank must be at least {}",
            root_system.min_rank()
        )));
    }
    if !root_system.is_minuscule(rank, weight_index) {
        return Err(Error::OutOfTable(format!(
            "w{weight_index} is not a minuscule weight of {root_system}{rank}"
        )));
    }
    Ok(MinusculeEntry {
        root_system,
        rank,
        weight_index,
        dimension: dimension_big(root_system, rank, weight_index),
        duality: duality(root_system, rank, weight_index),
    })
}

/// `E^{⊗s}` for a single minuscule representation `E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorDecomposition {
    pub entry: MinusculeEntry,
    pub factor_count: u32,
    #[serde(serialize_with = "ser_dim")]
    pub total_dimension: BigUint,
}

impl TensorDecomposition {
    pub fn new(entry: MinusculeEntry, factor_count: u32) -> Result<Self> {
        if factor_count == 0 {
            return Err(Error::OutOfRange("tensor power must be at least 1".into()));
        }
        let total_dimension = entry.dimension.pow(factor_count);
        Ok(TensorDecomposition {
            entry,
            factor_count,
            total_dimension,
        })
    }

    /// The standard representation of a special orthogonal group.
    pub fn is_standard(&self) -> bool {
        self.factor_count == 1 && self.in_standard_row()
    }

    /// Any tensor power of the vector representation of `D_ℓ`.
    pub fn in_standard_row(&self) -> bool {
        self.entry.root_system == RootSystem::D && self.entry.weight_index == 1
    }
}

/// Whether `E^{⊗s}` carries an invariant symmetric form.
pub fn orthogonal_admissible(decomp: &TensorDecomposition) -> bool {
    match decomp.entry.duality {
        Duality::Orthogonal => true,
        Duality::Symplectic => decomp.factor_count.is_multiple_of(2),
        Duality::NotSelfDual => false,
    }
}

/// Which decompositions [`exclusion_dimensions_with`] leaves out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExclusionPolicy {
    /// Leave out every tensor power of the vector representation of `D_ℓ`.
    #[default]
    StandardRow,
    /// Leave out only the vector representation itself (`s = 1`).
    StandardOnly,
}

/// Every minuscule entry of dimension `2 ≤ dim ≤ bound`.
///
/// Within a rank, `C(ℓ+1, r)` increases up to the middle weight, so type A
/// only scans `r ≤ (ℓ+1)/2` until the bound is passed and mirrors the rest.
/// Every row's smallest dimension increases with the rank, which ends the
/// rank loop.
pub fn entries_up_to(bound: u64) -> Vec<MinusculeEntry> {
    let bound = bound as u128;
    let mut out = Vec::new();
    for rs in RootSystem::ALL {
        let mut l = rs.min_rank();
        loop {
            let weights: Vec<u32> = match rs {
                RootSystem::A => {
                    let mut low = Vec::new();
                    for r in 1..=l.div_ceil(2) {
                        match dimension_u128(rs, l, r) {
                            Some(d) if d <= bound => low.push(r),
                            _ => break,
                        }
                    }
                    let mut all = low.clone();
                    all.extend(low.iter().map(|&r| l + 1 - r).filter(|r| !low.contains(r)));
                    all.sort_unstable();
                    all
                }
                _ => rs
                    .minuscule_weights(l)
                    .into_iter()
                    .filter(|&r| dimension_u128(rs, l, r).is_some_and(|d| d <= bound))
                    .collect(),
            };
            if weights.is_empty() {
                break;
            }
            for r in weights {
                out.push(table_lookup(rs, l, r).expect("weight from the table"));
            }
            l += 1;
        }
    }
    out
}

/// All admissible decompositions with total dimension `≤ bound`, except the
/// ones the policy leaves out.
pub fn exclusion_decompositions(bound: u64, policy: ExclusionPolicy) -> Vec<TensorDecomposition> {
    let mut out = Vec::new();
    for entry in entries_up_to(bound) {
        let base = dimension_u128(entry.root_system, entry.rank, entry.weight_index).expect("bounded");
        let mut power = base;
        let mut s = 1u32;
        while power <= bound as u128 {
            let d = TensorDecomposition::new(entry.clone(), s).expect("s >= 1");
            let skip = match policy {
                ExclusionPolicy::StandardRow => d.in_standard_row(),
                ExclusionPolicy::StandardOnly => d.is_standard(),
            };
            if !skip && orthogonal_admissible(&d) {
                out.push(d);
            }
            match power.checked_mul(base) {
                Some(p) => power = p,
                None => break,
            }
            s += 1;
        }
    }
    out
}

/// Dimensions `n ≤ bound` of admissible decompositions other than the
/// standard orthogonal row.
pub fn exclusion_dimensions(bound: u64) -> BTreeSet<u64> {
    exclusion_dimensions_with(bound, ExclusionPolicy::default())
}

pub fn exclusion_dimensions_with(bound: u64, policy: ExclusionPolicy) -> BTreeSet<u64> {
    exclusion_decompositions(bound, policy)
        .into_iter()
        .map(|d| u64::try_from(&d.total_dimension).expect("bounded by a u64"))
        .collect()
}

/// Dimensions that only tensor powers (`s ≥ 2`) of the `D_ℓ` vector
/// representation produce, i.e. the difference between the two policies.
pub fn standard_row_extras(bound: u64) -> Vec<TensorDecomposition> {
    let others = exclusion_dimensions_with(bound, ExclusionPolicy::StandardRow);
    exclusion_decompositions(bound, ExclusionPolicy::StandardOnly)
        .into_iter()
        .filter(|d| d.in_standard_row())
        .filter(|d| !others.contains(&u64::try_from(&d.total_dimension).expect("bounded")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(e: &MinusculeEntry) -> u64 {
        u64::try_from(&e.dimension).unwrap()
    }

    #[test]
    fn lookup_examples() {
        let e = table_lookup(RootSystem::D, 5, 1).unwrap();
        assert_eq!((dim(&e), e.duality), (10, Duality::Orthogonal));
        let e = table_lookup(RootSystem::A, 7, 4).unwrap();
        assert_eq!((dim(&e), e.duality), (70, Duality::Orthogonal));
        let e = table_lookup(RootSystem::B, 5, 5).unwrap();
        assert_eq!((dim(&e), e.duality), (32, Duality::Symplectic));
        let e = table_lookup(RootSystem::A, 3, 1).unwrap();
        assert_eq!(e.duality, Duality::NotSelfDual);
        let e = table_lookup(RootSystem::D, 6, 6).unwrap();
        assert_eq!((dim(&e), e.duality), (32, Duality::Symplectic));
        let e = table_lookup(RootSystem::D, 5, 4).unwrap();
        assert_eq!(e.duality, Duality::NotSelfDual);
    }

    #[test]
    fn lookup_domain() {
        assert!(table_lookup(RootSystem::D, 2, 1).is_err());
        assert!(table_lookup(RootSystem::B, 1, 1).is_err());
        assert!(table_lookup(RootSystem::B, 4, 1).is_err());
        assert!(table_lookup(RootSystem::C, 3, 3).is_err());
        assert!(table_lookup(RootSystem::A, 3, 4).is_err());
        assert!(table_lookup(RootSystem::A, 3, 0).is_err());
        assert!(table_lookup(RootSystem::D, 5, 3).is_err());
    }

    #[test]
    fn admissibility() {
        let c = |l, s| TensorDecomposition::new(table_lookup(RootSystem::C, l, 1).unwrap(), s).unwrap();
        assert!(orthogonal_admissible(&c(3, 2)));
        assert!(!orthogonal_admissible(&c(3, 1)));
        let d = TensorDecomposition::new(table_lookup(RootSystem::D, 4, 1).unwrap(), 1).unwrap();
        assert!(orthogonal_admissible(&d) && d.is_standard());
        let a = TensorDecomposition::new(table_lookup(RootSystem::A, 4, 1).unwrap(), 2).unwrap();
        assert!(!orthogonal_admissible(&a));
    }

    #[test]
    fn small_exclusions() {
        assert!(exclusion_dimensions(3).is_empty());
        let e8: Vec<u64> = exclusion_dimensions(8).into_iter().collect();
        assert_eq!(e8, vec![4, 6, 8]);
        assert!(exclusion_dimensions(10).contains(&8));
    }

    #[test]
    fn literal_policy_adds_uncovered_powers() {
        let extras: Vec<u64> = standard_row_extras(2000)
            .iter()
            .map(|d| u64::try_from(&d.total_dimension).unwrap())
            .collect();
        assert_eq!(extras, vec![1000, 1728]);
    }
}
