//! Exact torsion exponent γ(A).
//!
//! For a product `∏ A_i^{n_i}` of simple factors of type I/II/III,
//!
//! ```text
//! γ(A) = max over nonempty I of  2·Σ_{i∈I} n_i·d_i·e_i·h_i / (1 + Σ_{i∈I} e_i·(2h_i² + η_i·h_i))
//! ```
//!
//! The maximum is taken exhaustively over all `2^d − 1` subsets. Ties go to
//! the lexicographically smallest index set.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::variety::{factor_dimension, hodge_dimension, SimpleFactor, VarietyProduct};

pub const DEFAULT_MAX_FACTORS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaConfig {
    /// Largest number of factors accepted for exhaustive search.
    pub max_factors: usize,
    /// Record the fraction of every subset in [`GammaResult::per_subset`].
    pub audit: bool,
}

impl Default for GammaConfig {
    fn default() -> Self {
        GammaConfig {
            max_factors: DEFAULT_MAX_FACTORS,
            audit: false,
        }
    }
}

impl GammaConfig {
    pub fn audited() -> Self {
        GammaConfig {
            audit: true,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetValue {
    /// 0-based factor indices, increasing.
    pub subset: Vec<usize>,
    pub value: Fraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub value: Fraction,
    /// 0-based indices of the lexicographically smallest maximizing subset.
    pub argmax: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_subset: Option<Vec<SubsetValue>>,
}

/// `2·d·e·h / (1 + e·(2h² + η·h))` for a single copy of `f` (`n` ignored).
pub fn gamma_simple(f: &SimpleFactor) -> BigRational {
    let num = 2 * factor_dimension(f) as u128;
    let den = 1 + f.hodge_dimension() as u128;
    ratio(num, den)
}

fn ratio(num: u128, den: u128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Compare `a/b` with `c/d` for positive denominators.
fn cmp_fractions(a: u128, b: u128, c: u128, d: u128) -> Ordering {
    match (a.checked_mul(d), c.checked_mul(b)) {
        (Some(l), Some(r)) => l.cmp(&r),
        _ => (BigUint::from(a) * BigUint::from(d)).cmp(&(BigUint::from(c) * BigUint::from(b))),
    }
}

fn mask_indices(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|i| mask >> i & 1 == 1).collect()
}

/// Exhaustive maximization over all nonempty subsets of factors.
pub fn gamma_product(v: &VarietyProduct, config: &GammaConfig) -> Result<GammaResult> {
    let factors = v.factors();
    let len = factors.len();
    if len > config.max_factors || len > 63 {
        return Err(Error::TooManyFactors {
            count: len,
            cap: config.max_factors.min(63),
        });
    }

    let weights: Vec<(u128, u128)> = factors
        .iter()
        .map(|f| {
            (
                2 * f.n() as u128 * factor_dimension(f) as u128,
                f.hodge_dimension() as u128,
            )
        })
        .collect();

    let total = 1usize << len;
    // subset sums by peeling off the lowest set bit
    let mut num = vec![0u128; total];
    let mut hodge = vec![0u128; total];
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut audit = config.audit.then(|| Vec::with_capacity(total - 1));

    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        num[mask] = num[rest] + weights[low].0;
        hodge[mask] = hodge[rest] + weights[low].1;
        let (n, d) = (num[mask], hodge[mask] + 1);

        if let Some(a) = audit.as_mut() {
            a.push(SubsetValue {
                subset: mask_indices(mask as u64, len),
                value: Fraction(ratio(n, d)),
            });
        }

        let replace = match &best {
            None => true,
            Some((bm, bidx)) => {
                let bm = *bm as usize;
                match cmp_fractions(n, d, num[bm], hodge[bm] + 1) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => mask_indices(mask as u64, len) < *bidx,
                }
            }
        };
        if replace {
            best = Some((mask as u64, mask_indices(mask as u64, len)));
        }
    }

    let (bm, argmax) = best.expect("at least one factor");
    let bm = bm as usize;
    if let Some(a) = audit.as_mut() {
        a.sort_by(|x, y| x.subset.cmp(&y.subset));
    }
    Ok(GammaResult {
        value: Fraction(ratio(num[bm], hodge[bm] + 1)),
        argmax,
        per_subset: audit,
    })
}

/// The second displayed form, `2·Σ n_i·dim A_i / (1 + dim Hg(∏_{i∈I} A_i))`,
/// evaluated for one subset (0-based indices).
pub fn gamma_conjectural_form(v: &VarietyProduct, subset: &[usize]) -> Result<BigRational> {
    let chosen = v.select(subset)?;
    let twice_dim: u128 = chosen.iter().map(|f| 2 * f.n() as u128 * f.dimension() as u128).sum();
    let hg = hodge_dimension(&chosen)?;
    Ok(ratio(twice_dim, 1 + hg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::AlbertType::{self, *};

    fn f(t: AlbertType, e: u64, h: u64, n: u64) -> SimpleFactor {
        SimpleFactor::new(t, e, h, n).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn simple_values() {
        assert_eq!(gamma_simple(&f(III, 1, 2, 1)), q(8, 7));
        assert_eq!(gamma_simple(&f(I, 1, 1, 1)), q(1, 2));
        assert_eq!(gamma_simple(&f(II, 1, 1, 1)), q(1, 1));
        // n is ignored by the simple form
        assert_eq!(gamma_simple(&f(III, 1, 2, 5)), q(8, 7));
    }

    #[test]
    fn product_examples() {
        let v = VarietyProduct::new(vec![f(III, 1, 2, 1), f(III, 1, 2, 1)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::audited()).unwrap();
        assert_eq!(r.value.0, q(16, 13));
        assert_eq!(r.argmax, vec![0, 1]);
        let audit = r.per_subset.unwrap();
        let values: Vec<_> = audit.iter().map(|s| s.value.0.clone()).collect();
        assert_eq!(values, vec![q(8, 7), q(16, 13), q(8, 7)]);

        let v = VarietyProduct::new(vec![f(I, 1, 1, 1), f(III, 1, 5, 1)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::default()).unwrap();
        assert_eq!(r.value.0, q(1, 2));
        assert_eq!(r.argmax, vec![0]);
        assert!(r.per_subset.is_none());

        let v = VarietyProduct::new(vec![f(III, 2, 5, 1)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::default()).unwrap();
        // 2·2·2·5 / (1 + 2·45)
        assert_eq!(r.value.0, q(40, 91));
        assert_eq!(r.value.0, gamma_simple(&v.factors()[0]));
    }

    #[test]
    fn ties_take_lexicographically_smallest() {
        // {0}, {1}: 1/2 each; {0,1}: 4/7
        let v = VarietyProduct::new(vec![f(I, 1, 1, 1), f(I, 1, 1, 1)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::default()).unwrap();
        assert_eq!(r.value.0, q(4, 7));
        assert_eq!(r.argmax, vec![0, 1]);

        // {1}, {2}: 2 each; {1,2}: 8/3; anything with factor 0 is smaller
        let v = VarietyProduct::new(vec![f(III, 1, 5, 1), f(III, 1, 1, 1), f(III, 1, 1, 1)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::audited()).unwrap();
        assert_eq!(r.value.0, q(8, 3));
        assert_eq!(r.argmax, vec![1, 2]);

        // {0}: 8/7, {1}: 32/29, {0,1}: 40/35 = 8/7; the tie goes to {0}
        let v = VarietyProduct::new(vec![f(III, 1, 2, 1), f(III, 1, 4, 2)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::audited()).unwrap();
        assert_eq!(r.value.0, q(8, 7));
        assert_eq!(r.argmax, vec![0]);
        // same tie with the order reversed: {1} vs {0,1}, and [0,1] < [1]
        let v = VarietyProduct::new(vec![f(III, 1, 4, 2), f(III, 1, 2, 1)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::default()).unwrap();
        assert_eq!(r.value.0, q(8, 7));
        assert_eq!(r.argmax, vec![0, 1]);
    }

    #[test]
    fn conjectural_form_examples() {
        let v = VarietyProduct::new(vec![f(III, 1, 5, 1)]).unwrap();
        assert_eq!(gamma_conjectural_form(&v, &[0]).unwrap(), q(10, 23));
        let v = VarietyProduct::new(vec![f(I, 1, 1, 1)]).unwrap();
        assert_eq!(gamma_conjectural_form(&v, &[0]).unwrap(), q(1, 2));
        let v = VarietyProduct::new(vec![f(II, 3, 2, 2)]).unwrap();
        assert_eq!(gamma_conjectural_form(&v, &[0]).unwrap(), q(48, 31));
        assert_eq!(
            gamma_conjectural_form(&v, &[1]),
            Err(Error::IndexOutOfRange { index: 1, len: 1 })
        );
        assert_eq!(gamma_conjectural_form(&v, &[]), Err(Error::EmptySubset));
    }

    #[test]
    fn cap_is_enforced() {
        let v = VarietyProduct::new(vec![f(I, 1, 1, 1); 21]).unwrap();
        assert!(matches!(
            gamma_product(&v, &GammaConfig::default()),
            Err(Error::TooManyFactors { count: 21, cap: 20 })
        ));
        let cfg = GammaConfig {
            max_factors: 3,
            audit: false,
        };
        let v = VarietyProduct::new(vec![f(I, 1, 1, 1); 4]).unwrap();
        assert!(gamma_product(&v, &cfg).is_err());
    }

    #[test]
    fn huge_invariants_stay_exact() {
        let m = crate::variety::MAX_INVARIANT;
        let v = VarietyProduct::new(vec![f(II, m, m, m), f(III, m, m, m), f(I, m, m, m)]).unwrap();
        let r = gamma_product(&v, &GammaConfig::audited()).unwrap();
        for s in r.per_subset.as_ref().unwrap() {
            assert_eq!(s.value.0, gamma_conjectural_form(&v, &s.subset).unwrap());
            assert!(s.value <= r.value);
        }
    }
}
