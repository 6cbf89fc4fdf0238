//! The ψ maximization, the prefix-max reduction for weighted ratios, the
//! torsion-count exponent and the degree lower bound ingredients.
//!
//! For a type-III factor of relative dimension `h`, places `λ` with residue
//! degrees `f(λ)` (summing to `e`) and ranks `0 ≤ r_λ ≤ 2h`,
//!
//! ```text
//! ψ(r) = 2·Σ f(λ)·r_λ / (δ + Σ f(λ)·r_λ(4h − 1 − r_λ)/2)
//! ```
//!
//! With `δ = 0` (every `r_λ ≤ h`) the maximum is `4/(3h − 1)`; with `δ = 1`
//! (`r_λ ≤ 2h`) it is `4eh/(1 + e(2h² − h))`, which is the larger of the two
//! and equals γ of the factor.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmath::omega;
use crate::stabilizer::{codimension_in_so, FiltrationProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiInput {
    pub h: u64,
    pub residue_degrees: Vec<u64>,
    pub ranks: Vec<u64>,
    pub delta: u8,
}

impl PsiInput {
    pub fn validate(&self) -> Result<()> {
        if self.h == 0 {
            return Err(Error::ZeroInvariant { field: "h" });
        }
        if self.residue_degrees.len() != self.ranks.len() {
            return Err(Error::LengthMismatch(self.residue_degrees.len(), self.ranks.len()));
        }
        if self.residue_degrees.is_empty() {
            return Err(Error::OutOfRange("at least one place is required".into()));
        }
        if self.residue_degrees.contains(&0) {
            return Err(Error::ZeroInvariant {
                field: "residue degree",
            });
        }
        if self.delta > 1 {
            return Err(Error::OutOfRange(format!("delta must be 0 or 1, got {}", self.delta)));
        }
        if let Some(&r) = self.ranks.iter().find(|&&r| r > 2 * self.h) {
            return Err(Error::RankTooLarge {
                rank: r.min(u32::MAX as u64) as u32,
                max: 2 * self.h,
            });
        }
        if self.delta == 0 && self.ranks.iter().any(|&r| r > self.h) {
            return Err(Error::OutOfRange(format!(
                "delta = 0 requires every rank to be at most h = {}",
                self.h
            )));
        }
        Ok(())
    }

    pub fn e(&self) -> u64 {
        self.residue_degrees.iter().sum()
    }
}

fn q(n: u128, d: u128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn psi(input: &PsiInput) -> Result<BigRational> {
    input.validate()?;
    let h = input.h;
    let mut num: u128 = 0;
    let mut den: u128 = input.delta as u128;
    for (&f, &r) in input.residue_degrees.iter().zip(&input.ranks) {
        num += 2 * f as u128 * r as u128;
        den += f as u128 * codimension_in_so(r, h) as u128;
    }
    if den == 0 {
        return Err(Error::TrivialSubgroup);
    }
    Ok(q(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `δ = 0`, ranks at most `h`.
    Isotropic,
    /// `δ = 1`, ranks at most `2h`.
    Full,
}

/// Closed-form maximum of ψ over the regime.
pub fn psi_max(h: u64, residue_degrees: &[u64], regime: Regime) -> Result<BigRational> {
    if h == 0 {
        return Err(Error::ZeroInvariant { field: "h" });
    }
    if residue_degrees.is_empty() || residue_degrees.contains(&0) {
        return Err(Error::ZeroInvariant {
            field: "residue degree",
        });
    }
    let (h, e) = (h as u128, residue_degrees.iter().map(|&f| f as u128).sum::<u128>());
    Ok(match regime {
        Regime::Isotropic => q(4, 3 * h - 1),
        Regime::Full => q(4 * e * h, 1 + e * (2 * h * h - h)),
    })
}

/// `max_k (Σ_{i≤k} a_i)/(Σ_{i≤k} b_i)` and the smallest maximizing `k`
/// (1-based). This is the supremum of `Σ a_i m_i / Σ b_i m_i` over weights
/// `m_1 ≥ … ≥ m_t ≥ 0` not all zero, attained by `m = (1,…,1,0,…,0)`.
pub fn prefix_max(a: &[BigRational], b: &[BigRational]) -> Result<(BigRational, usize)> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(Error::OutOfRange("sequences must be nonempty".into()));
    }
    let (mut sa, mut sb) = (BigRational::zero(), BigRational::zero());
    let mut best: Option<(BigRational, usize)> = None;
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        sa += x;
        sb += y;
        if !sb.is_positive() {
            return Err(Error::NonPositivePrefix(k + 1));
        }
        let v = &sa / &sb;
        if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
            best = Some((v, k + 1));
        }
    }
    Ok(best.expect("nonempty"))
}

/// `Σ a_i m_i / Σ b_i m_i` for an explicit weight sequence.
pub fn weighted_ratio(a: &[BigRational], b: &[BigRational], m: &[BigRational]) -> Option<BigRational> {
    let num: BigRational = a.iter().zip(m).map(|(x, w)| x * w).sum();
    let den: BigRational = b.iter().zip(m).map(|(x, w)| x * w).sum();
    (!den.is_zero()).then(|| num / den)
}

/// `d·f·Σ (r_i − r_{i+1})·m_i` with `r_{t+1} = 0`: the exponent of `ℓ` in
/// `|H|` for a filtered subgroup, `d` being the Albert constant.
pub fn torsion_card_exponent(profile: &FiltrationProfile, d_albert: u64) -> Result<u64> {
    profile.validate_shape()?;
    let t = profile.len();
    let sum: u64 = (0..t)
        .map(|i| {
            let next = if i + 1 < t { profile.ranks[i + 1] } else { 0 };
            (profile.ranks[i] - next) as u64 * profile.exponents[i] as u64
        })
        .sum();
    Ok(d_albert * profile.residue_degree as u64 * sum)
}

/// Weights `(a, b)` of the torsion-count and δ-augmented index exponents
/// of a filtration, ordered from the smallest subspace `W_t` to `W_1` so
/// that the exponents `m_t ≥ … ≥ m_1` are non-increasing:
/// `Σ a_j m_j = torsion_card_exponent` and `Σ b_j m_j` is the augmented
/// index exponent.
pub fn filtration_weights(
    profile: &FiltrationProfile,
    h: u64,
    d_albert: u64,
) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    profile.validate(h)?;
    let t = profile.len();
    let f = profile.residue_degree as u64;
    let cost = |i: usize| -> u64 {
        if i >= t {
            0
        } else {
            codimension_in_so(profile.ranks[i] as u64, h) + profile.isotropy[i] as u64
        }
    };
    let rank = |i: usize| -> u64 {
        if i >= t {
            0
        } else {
            profile.ranks[i] as u64
        }
    };
    let int = |x: u64| BigRational::from_integer(BigInt::from(x));
    let mut a = Vec::with_capacity(t);
    let mut b = Vec::with_capacity(t);
    for i in (0..t).rev() {
        a.push(int(d_albert * f * (rank(i) - rank(i + 1))));
        b.push(int(f * (cost(i) - cost(i + 1))));
    }
    Ok((a, b))
}

/// `(ω(m), m^{2h})`: the structural parts of the lower bound
/// `c^{ω(m)}·m^{2h}` for the degree of the field generated by a point of
/// order `m`.
pub fn degree_lower_bound(m: u64, h: u64) -> Result<(u32, BigUint)> {
    if m == 0 {
        return Err(Error::ZeroInvariant { field: "m" });
    }
    if h == 0 {
        return Err(Error::ZeroInvariant { field: "h" });
    }
    let exp = u32::try_from(2 * h).map_err(|_| Error::OutOfRange(format!("h = {h} is too large")))?;
    Ok((omega(m), BigUint::from(m).pow(exp)))
}

pub const OMEGA_CHECK_MAX_BOUND: u64 = 100_000_000;

/// Robin's explicit constant: `ω(m) ≤ 1.3841·log m / log log m` for `m ≥ 3`.
pub const ROBIN_CONSTANT: f64 = 1.3841;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaCheck {
    pub bound: u64,
    /// Largest `ω(m)·log log m / log m` over `3 ≤ m ≤ bound` (double precision).
    pub ratio: f64,
    /// Smallest `m` attaining it.
    pub argmax: u64,
    pub omega: u32,
    pub within_robin_bound: bool,
}

/// Empirical maximum of `ω(m)·log log m / log m`. This is the one place the
/// crate uses floating point; ratios are compared in `f64`.
pub fn omega_asymptotic_check(bound: u64) -> Result<OmegaCheck> {
    if !(3..=OMEGA_CHECK_MAX_BOUND).contains(&bound) {
        return Err(Error::OutOfRange(format!(
            "bound must lie in 3..={OMEGA_CHECK_MAX_BOUND}, got {bound}"
        )));
    }
    let n = bound as usize;
    let mut counts = vec![0u8; n + 1];
    for p in 2..=n {
        if counts[p] == 0 {
            for k in (p..=n).step_by(p) {
                counts[k] += 1;
            }
        }
    }
    let mut best = (f64::NEG_INFINITY, 0u64, 0u32);
    for (m, &w) in counts.iter().enumerate().skip(3) {
        let x = m as f64;
        let ratio = w as f64 * x.ln().ln() / x.ln();
        if ratio > best.0 {
            best = (ratio, m as u64, w as u32);
        }
    }
    Ok(OmegaCheck {
        bound,
        ratio: best.0,
        argmax: best.1,
        omega: best.2,
        within_robin_bound: best.0 <= ROBIN_CONSTANT,
    })
}
