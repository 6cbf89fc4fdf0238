//! Slow, direct reference computations.
//!
//! Nothing here depends on `lefschetz-core`; each function evaluates a
//! definition as literally as possible (arbitrary precision everywhere,
//! no closed forms, no early cutoffs beyond what the definition implies) so
//! that agreement with the optimized code is meaningful.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A factor as plain numbers: Albert type as 1, 2 or 3, then `e, h, n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub albert: u8,
    pub e: u64,
    pub h: u64,
    pub n: u64,
}

fn rat(n: BigUint, d: BigUint) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The subset fraction `2Σ n·d·e·h / (1 + Σ e(2h² + ηh))`, computed from
/// the group-theoretic description: `d·e·h` is the dimension of one copy,
/// and the Hodge group of a type I/II factor is `Res Sp_{2h}` (dimension
/// `e·h(2h+1)`) while for type III it is `Res SO_{2h}` (`e·h(2h−1)`).
pub fn subset_fraction(factors: &[Factor], subset: &[usize]) -> BigRational {
    let mut num = BigUint::zero();
    let mut den = BigUint::one();
    for &i in subset {
        let f = factors[i];
        let d: u64 = if f.albert == 1 { 1 } else { 2 };
        let dim = BigUint::from(d) * f.e * f.h;
        num += BigUint::from(2u8) * f.n * dim;
        let h = BigUint::from(f.h);
        let group = if f.albert == 3 {
            &h * (BigUint::from(2u8) * &h - 1u8)
        } else {
            &h * (BigUint::from(2u8) * &h + 1u8)
        };
        den += group * f.e;
    }
    rat(num, den)
}

/// All nonempty subsets of `0..len` in lexicographic order of their sorted
/// index lists.
pub fn subsets_lex(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn extend(start: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..len {
            cur.push(i);
            out.push(cur.clone());
            extend(i + 1, len, cur, out);
            cur.pop();
        }
    }
    extend(0, len, &mut Vec::new(), &mut out);
    out
}

/// γ by scanning subsets in lexicographic order, keeping the first maximum.
pub fn gamma_brute(factors: &[Factor]) -> (BigRational, Vec<usize>) {
    let mut best: Option<(BigRational, Vec<usize>)> = None;
    for s in subsets_lex(factors.len()) {
        let v = subset_fraction(factors, &s);
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, s));
        }
    }
    best.expect("at least one factor")
}

/// Dimension of the pointwise stabilizer of a rank-`r` subspace in
/// `SO_{2h}`, as `dim SO_{2h} − dim SO_{2h−r}`.
pub fn so_codimension(r: u64, h: u64) -> u64 {
    let so = |n: u64| n * n.saturating_sub(1) / 2;
    so(2 * h) - so(2 * h - r)
}

/// `max ψ` over every rank vector with entries in `0..=cap` (cap `h` when
/// `delta = 0`, `2h` when `delta = 1`), skipping zero denominators.
pub fn psi_grid_max(h: u64, residue_degrees: &[u64], delta: u64) -> BigRational {
    let cap = if delta == 0 { h } else { 2 * h };
    let k = residue_degrees.len();
    let mut ranks = vec![0u64; k];
    let mut best: Option<BigRational> = None;
    loop {
        let num: u64 = residue_degrees.iter().zip(&ranks).map(|(f, r)| 2 * f * r).sum();
        let den: u64 = delta
            + residue_degrees
                .iter()
                .zip(&ranks)
                .map(|(f, &r)| f * so_codimension(r, h))
                .sum::<u64>();
        if den > 0 {
            let v = rat(num.into(), den.into());
            if best.as_ref().is_none_or(|b| v > *b) {
                best = Some(v);
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == k {
                return best.expect("some rank vector has a positive denominator");
            }
            if ranks[i] < cap {
                ranks[i] += 1;
                break;
            }
            ranks[i] = 0;
            i += 1;
        }
    }
}

/// All multisets of positive integers summing to `e`, each non-increasing.
pub fn partitions(e: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

/// `n! / (k!(n−k)!)` from factorials.
pub fn binomial_factorial(n: u64, k: u64) -> BigUint {
    let fact = |m: u64| (1..=m).fold(BigUint::one(), |acc, i| acc * i);
    fact(n) / (fact(k) * fact(n - k))
}

/// 2-adic valuation by repeated halving.
pub fn v2(x: &BigUint) -> u64 {
    assert!(!x.is_zero());
    let two = BigUint::from(2u8);
    let mut x = x.clone();
    let mut v = 0;
    while (&x % &two).is_zero() {
        x /= &two;
        v += 1;
    }
    v
}

fn pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

fn central(n: u64) -> BigUint {
    binomial_factorial(2 * n, n)
}

fn collect(values: impl IntoIterator<Item = BigUint>, bound: u64) -> Vec<u64> {
    let mut v: Vec<u64> = values
        .into_iter()
        .filter_map(|x| x.to_u64())
        .filter(|&x| x >= 1 && x <= bound)
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Σ up to `bound` by nested loops over the defining parameters.
pub fn sigma_naive(bound: u64) -> Vec<u64> {
    let b = BigUint::from(bound);
    let mut vals = Vec::new();
    let mut k = 3;
    while pow(2, k - 1) <= b {
        let mut a = 1;
        loop {
            let v = pow(2, k - 1) * pow(a, k);
            if v > b {
                break;
            }
            vals.push(v);
            a += 1;
        }
        k += 1;
    }
    let mut k = 3;
    loop {
        let v = central(k) / 2u8;
        if v > b {
            break;
        }
        vals.push(v);
        k += 1;
    }
    collect(vals, bound)
}

/// Σ′ up to `bound`, families over `s ≥ min_s`, by nested loops.
pub fn sigma_prime_naive(bound: u64, min_s: u64) -> Vec<u64> {
    let b = BigUint::from(bound);
    let mut vals = Vec::new();
    let log2 = 64 - bound.leading_zeros() as u64 + 1;
    for s in min_s..=log2 {
        for k in 0..=log2 {
            vals.push(pow(2, (4 * k + 3) * s - 1));
            if k >= 1 {
                vals.push(pow(2, 4 * k * s - 1));
                vals.push(pow(2, 2 * s * (4 * k + 1) - 1));
            }
        }
        let mut k = 2;
        loop {
            let v = pow(2, 2 * s - 1) * pow(k, 2 * s);
            if v > b {
                break;
            }
            vals.push(v);
            k += 1;
        }
        for (step, exp) in [(0u64, s), (1, 2 * s)] {
            let mut k = 0;
            loop {
                let c = if step == 0 {
                    binomial_factorial(4 * k + 4, 2 * k + 2)
                } else {
                    binomial_factorial(4 * k + 2, 2 * k + 1)
                };
                let v = c.pow(exp as u32) / 2u8;
                if v > b {
                    break;
                }
                vals.push(v);
                k += 1;
            }
        }
    }
    collect(vals.into_iter().filter(|v| v.bits() <= 64), bound)
}

/// Odd exclusion values up to `bound`.
pub fn odd_exclusion_naive(bound: u64) -> Vec<u64> {
    let mut vals = Vec::new();
    for m in 0..8u32 {
        let n = 1u64 << (m + 2);
        vals.push(binomial_factorial(n, n / 2) / 2u8);
    }
    collect(vals, bound)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Number of distinct primes dividing `m`, by trial division all the way.
pub fn omega_naive(mut m: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            count += 1;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    count + u32::from(m > 1)
}

/// `Σ a_i m_i / Σ b_i m_i`.
pub fn weighted_ratio(a: &[BigRational], b: &[BigRational], m: &[BigRational]) -> Option<BigRational> {
    let mut num = BigRational::zero();
    let mut den = BigRational::zero();
    for i in 0..a.len() {
        num += &a[i] * &m[i];
        den += &b[i] * &m[i];
    }
    (!den.is_zero()).then(|| num / den)
}

/// Exhaustive count of `{g ∈ SL₂(ℤ/q) : g·v ≡ v for all v in gens}` and
/// `|SL₂(ℤ/q)|`, vectors given as pairs.
pub fn sl2_stabilizer_count(q: u64, gens: &[(u64, u64)]) -> (u64, u64) {
    let (mut group, mut stab) = (0, 0);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if (a * d % q + q - b * c % q) % q != 1 {
                        continue;
                    }
                    group += 1;
                    if gens
                        .iter()
                        .all(|&(x, y)| (a * x + b * y) % q == x % q && (c * x + d * y) % q == y % q)
                    {
                        stab += 1;
                    }
                }
            }
        }
    }
    (group, stab)
}
