//! Gaussian elimination over a prime field or over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The scalar field used by rank computations.
pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn embed(&self, x: i64) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// `F_p` for a prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub const DEFAULT_PRIME: u64 = 10_007;

    /// `None` unless `p` is a prime below `2^32`.
    pub fn new(p: u64) -> Option<Self> {
        (p < 1 << 32 && crate::intmath::is_prime(p)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: Self::DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn embed(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat
        let (mut base, mut e, mut acc) = (*a, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

/// Exact rational arithmetic.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn embed(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

/// Rank of a matrix given as rows of integers, computed in `field`.
pub fn rank<F: Field>(field: &F, rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| field.embed(x)).collect())
        .collect();
    rank_in_place(field, &mut m)
}

/// Rank by row reduction; the matrix is destroyed.
pub fn rank_in_place<F: Field>(field: &F, m: &mut [Vec<F::Elem>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !field.is_zero(&m[r][c])) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(&m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
