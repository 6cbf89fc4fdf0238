//! Small exact integer routines: k-th roots, binomials, 2-adic valuations,
//! deterministic primality for `u64` and the prime-factor count ω.

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::One;

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// `Some(r)` when `n = r^k` exactly.
pub fn exact_root(n: u128, k: u32) -> Option<u128> {
    let r = n.nth_root(k);
    (checked_pow(r, k) == Some(n)).then_some(r)
}

/// Binomial coefficient in `u128`, `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n−i)/(i+1) stays integral at every step
        let num = (n - i) as u128;
        let den = (i + 1) as u128;
        let g = acc.gcd(&den);
        acc = (acc / g).checked_mul(num / (den / g))?;
    }
    Some(acc)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of ones in the binary expansion.
pub fn binary_digit_sum(n: u64) -> u32 {
    n.count_ones()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the first twelve primes as bases are
/// sufficient for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Number of distinct prime divisors, ω(0) and ω(1) being 0.
///
/// Trial division runs up to the cube root of the remaining cofactor; what
/// is left then has at most two prime factors, which a primality test and a
/// square test tell apart.
pub fn omega(m: u64) -> u32 {
    if m < 2 {
        return 0;
    }
    let mut rest = m;
    let mut count = 0;
    let mut p: u64 = 2;
    while (p as u128).pow(3) <= rest as u128 {
        if rest.is_multiple_of(p) {
            count += 1;
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    count
        + match rest {
            1 => 0,
            r if is_prime(r) => 1,
            r if exact_root(r as u128, 2).is_some() => 1,
            _ => 2,
        }
}
