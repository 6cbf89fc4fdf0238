//! Pointwise stabilizers in symplectic and orthogonal groups.
//!
//! For a nondegenerate form on `V` (dim `n`) and a subspace `W` of
//! dimension `n − d`, the pointwise stabilizer of `W` in the isometry group
//! has dimension `d(d+1)/2` (symplectic) or `d(d−1)/2` (orthogonal), whether
//! or not the form restricted to `W` is degenerate. The oracle here computes
//! that dimension as the nullity of a linear system at the Lie-algebra
//! level, `{X : XᵀG + GX = 0, Xw = 0 ∀ w ∈ W}`.
//!
//! The module also carries the filtration bookkeeping for index exponents
//! and an exhaustive point count in `SL₂(ℤ/ℓ^m)` for small `ℓ^m`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::linalg::{rank, Field, PrimeField, Rationals};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symplectic,
    Orthogonal,
}

impl FormKind {
    pub fn epsilon(self) -> i64 {
        match self {
            FormKind::Symplectic => 1,
            FormKind::Orthogonal => -1,
        }
    }
}

/// `d(d+ε)/2`.
pub fn stabilizer_dim_formula(d: u64, kind: FormKind) -> u64 {
    match kind {
        FormKind::Symplectic => d * (d + 1) / 2,
        FormKind::Orthogonal => d * d.saturating_sub(1) / 2,
    }
}

/// Even-dimensional space with the standard hyperbolic form: block
/// `[[0, I], [−I, 0]]` for symplectic, ones on the antidiagonal for
/// orthogonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormSpace {
    pub n: usize,
    pub kind: FormKind,
    pub gram: Vec<Vec<i64>>,
}

impl FormSpace {
    pub fn new(n: usize, kind: FormKind) -> Result<Self> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::InvalidSpace(format!("dimension {n} must be even and positive")));
        }
        let half = n / 2;
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            match kind {
                FormKind::Symplectic if i < half => {
                    gram[i][i + half] = 1;
                    gram[i + half][i] = -1;
                }
                FormKind::Symplectic => {}
                FormKind::Orthogonal => gram[i][n - 1 - i] = 1,
            }
        }
        Ok(FormSpace { n, kind, gram })
    }

    /// Index of the basis vector paired with `i` by the form.
    pub fn partner(&self, i: usize) -> usize {
        match self.kind {
            FormKind::Symplectic => (i + self.n / 2) % self.n,
            FormKind::Orthogonal => self.n - 1 - i,
        }
    }

    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u[i] * self.gram[i][j] * v[j]).sum::<i64>())
            .sum()
    }

    fn check_vectors(&self, w: &[Vec<i64>]) -> Result<()> {
        if let Some(v) = w.iter().find(|v| v.len() != self.n) {
            return Err(Error::InvalidSpace(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.n
            )));
        }
        Ok(())
    }

    /// `dim(W ∩ W^⊥)` for a basis of `W`, computed in `field`.
    pub fn radical_dim<F: Field>(&self, field: &F, w: &[Vec<i64>]) -> Result<usize> {
        self.check_vectors(w)?;
        let restricted: Vec<Vec<i64>> = w
            .iter()
            .map(|u| w.iter().map(|v| self.pairing(u, v)).collect())
            .collect();
        Ok(w.len() - rank(field, &restricted))
    }
}

/// Which field the oracle works over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Prime(PrimeField),
    Rationals,
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Prime(PrimeField::default())
    }
}

/// Nullity of the stabilizer system, in the given field.
pub fn stabilizer_dim_oracle_in<F: Field>(field: &F, space: &FormSpace, w: &[Vec<i64>]) -> Result<usize> {
    space.check_vectors(w)?;
    if rank(field, w) < w.len() {
        return Err(Error::DependentBasis);
    }
    let n = space.n;
    let g = &space.gram;
    let var = |a: usize, b: usize| a * n + b;
    let mut rows = Vec::with_capacity(n * n + w.len() * n);
    // (XᵀG + GX)_{ij} = Σ_k X_{ki} G_{kj} + Σ_k G_{ik} X_{kj}
    for i in 0..n {
        for j in i..n {
            let mut row = vec![0i64; n * n];
            for k in 0..n {
                row[var(k, i)] += g[k][j];
                row[var(k, j)] += g[i][k];
            }
            rows.push(row);
        }
    }
    // (Xw)_i = Σ_j X_{ij} w_j
    for v in w {
        for i in 0..n {
            let mut row = vec![0i64; n * n];
            for j in 0..n {
                row[var(i, j)] = v[j];
            }
            rows.push(row);
        }
    }
    Ok(n * n - rank(field, &rows))
}

pub fn stabilizer_dim_oracle(space: &FormSpace, w: &[Vec<i64>], field: FieldChoice) -> Result<usize> {
    match field {
        FieldChoice::Prime(f) => {
            if (f.modulus() as usize) <= space.n {
                return Err(Error::InvalidSpace(format!(
                    "characteristic {} must exceed the dimension {}",
                    f.modulus(),
                    space.n
                )));
            }
            stabilizer_dim_oracle_in(&f, space, w)
        }
        FieldChoice::Rationals => stabilizer_dim_oracle_in(&Rationals, space, w),
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn add(u: &[i64], v: &[i64]) -> Vec<i64> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

/// Deterministic subspaces that exercise degenerate restrictions of the form:
/// prefixes of the isotropic half of the basis (extended past it), an
/// isotropic line next to hyperbolic pairs, isotropic sums of basis vectors,
/// and purely hyperbolic spans (nondegenerate restriction).
pub fn crafted_subspaces(space: &FormSpace) -> Vec<Vec<Vec<i64>>> {
    let n = space.n;
    let half = n / 2;
    // basis vectors 0..half span a maximal isotropic subspace in both kinds
    let iso: Vec<usize> = (0..half).collect();
    let mut out = Vec::new();

    // isotropic prefixes, then completed with partners
    for k in 1..=n {
        let mut basis: Vec<Vec<i64>> = iso.iter().take(k).map(|&i| unit(n, i)).collect();
        for &i in iso.iter().take(k.saturating_sub(half)) {
            basis.push(unit(n, space.partner(i)));
        }
        out.push(basis);
    }
    // e_0 plus j hyperbolic pairs avoiding e_0's partner: radical of dimension 1
    for j in 0..half {
        let mut basis = vec![unit(n, 0)];
        for &i in iso.iter().skip(1).take(j) {
            basis.push(unit(n, i));
            basis.push(unit(n, space.partner(i)));
        }
        out.push(basis);
    }
    // isotropic sums e_0 + e_1, e_1 + e_2, ...
    for k in 1..half {
        let basis = (0..k).map(|i| add(&unit(n, iso[i]), &unit(n, iso[i + 1]))).collect();
        out.push(basis);
    }
    // a mixed degenerate plane: e_0 and e_0 + e_1 + partner(e_1) when half ≥ 2
    if half >= 2 {
        let mixed = add(&add(&unit(n, 0), &unit(n, 1)), &unit(n, space.partner(1)));
        out.push(vec![unit(n, 0), mixed]);
    }
    // nondegenerate: j hyperbolic pairs
    for j in 1..=half {
        let basis = iso
            .iter()
            .take(j)
            .flat_map(|&i| [unit(n, i), unit(n, space.partner(i))])
            .collect();
        out.push(basis);
    }
    out
}

/// A random basis of a `k`-dimensional subspace with entries in `[-9, 9]`,
/// independent in `field`.
pub fn random_subspace<F: Field>(field: &F, n: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    loop {
        let basis: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        if rank(field, &basis) == k {
            return basis;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCase {
    pub n: usize,
    pub kind: FormKind,
    /// `dim W`.
    pub subspace_dim: usize,
    pub crafted: bool,
    /// `dim(W ∩ W^⊥)`.
    pub radical_dim: usize,
    pub oracle: usize,
    pub formula: u64,
}

impl DimensionCase {
    pub fn passed(&self) -> bool {
        self.oracle as u64 == self.formula
    }
}

/// Oracle against formula over `ns`, both kinds, every `dim W` from 0 to `n`,
/// with `trials` random subspaces per dimension plus all crafted ones.
pub fn verify_dimensions(ns: &[usize], trials: usize, seed: u64, field: FieldChoice) -> Result<Vec<DimensionCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    let prime = match field {
        FieldChoice::Prime(p) => p,
        FieldChoice::Rationals => PrimeField::default(),
    };
    for &n in ns {
        for kind in [FormKind::Symplectic, FormKind::Orthogonal] {
            let space = FormSpace::new(n, kind)?;
            let mut run = |w: Vec<Vec<i64>>, crafted: bool| -> Result<()> {
                let radical_dim = match field {
                    FieldChoice::Prime(p) => space.radical_dim(&p, &w)?,
                    FieldChoice::Rationals => space.radical_dim(&Rationals, &w)?,
                };
                cases.push(DimensionCase {
                    n,
                    kind,
                    subspace_dim: w.len(),
                    crafted,
                    radical_dim,
                    oracle: stabilizer_dim_oracle(&space, &w, field)?,
                    formula: stabilizer_dim_formula((n - w.len()) as u64, kind),
                });
                Ok(())
            };
            for k in 0..=n {
                for _ in 0..trials {
                    // independence over F_p implies independence over ℚ
                    run(random_subspace(&prime, n, k, &mut rng), false)?;
                }
            }
            for w in crafted_subspaces(&space) {
                run(w, true)?;
            }
        }
    }
    Ok(cases)
}

/// Filtration `W_t ⊂ … ⊂ W_1` of a torsion subgroup: ranks `r_1 > … > r_t`,
/// exponents `m_1 < … < m_t`, residue degree `f` and isotropy flags `δ_i`
/// (1 when `W_i` is not inside a maximal isotropic subspace).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationProfile {
    pub ranks: Vec<u32>,
    pub exponents: Vec<u32>,
    pub residue_degree: u32,
    pub isotropy: Vec<bool>,
}

impl FiltrationProfile {
    /// Single step with the flag set.
    pub fn single(rank: u32, exponent: u32, residue_degree: u32) -> Self {
        FiltrationProfile {
            ranks: vec![rank],
            exponents: vec![exponent],
            residue_degree,
            isotropy: vec![true],
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Lengths, monotonicity of ranks, exponents and flags.
    pub fn validate_shape(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidProfile(m.to_string()));
        let t = self.ranks.len();
        if t == 0 {
            return bad("at least one step is required");
        }
        if self.exponents.len() != t || self.isotropy.len() != t {
            return bad("ranks, exponents and isotropy flags must have the same length");
        }
        if self.residue_degree == 0 {
            return bad("residue degree must be positive");
        }
        if self.ranks.windows(2).any(|p| p[0] <= p[1]) {
            return bad("ranks must be strictly decreasing");
        }
        if self.exponents[0] == 0 || self.exponents.windows(2).any(|p| p[0] >= p[1]) {
            return bad("exponents must be positive and strictly increasing");
        }
        if self.isotropy.windows(2).any(|p| !p[0] && p[1]) {
            return bad("isotropy flags must be non-increasing along the filtration");
        }
        Ok(())
    }

    /// Shape checks plus `r_i ≤ 2h`, and `r_i ≤ h` wherever `δ_i = 0`.
    pub fn validate(&self, h: u64) -> Result<()> {
        self.validate_shape()?;
        if let Some(&r) = self.ranks.iter().find(|&&r| r as u64 > 2 * h) {
            return Err(Error::RankTooLarge { rank: r, max: 2 * h });
        }
        if self
            .ranks
            .iter()
            .zip(&self.isotropy)
            .any(|(&r, &iso)| !iso && r as u64 > h)
        {
            return Err(Error::InvalidProfile(
                "a step with isotropy flag 0 must have rank at most h".into(),
            ));
        }
        Ok(())
    }

    /// `(r_i, m_i − m_{i−1})` with `m_0 = 0`.
    pub fn jumps(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.ranks.iter().enumerate().map(|(i, &r)| {
            let prev = if i == 0 { 0 } else { self.exponents[i - 1] };
            (r, self.exponents[i] - prev)
        })
    }
}

/// Codimension of the pointwise stabilizer of a rank-`r` subspace in
/// `SO_{2h}`: `r(4h − 1 − r)/2`.
pub fn codimension_in_so(r: u64, h: u64) -> u64 {
    r * (4 * h - 1 - r) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexExponent {
    /// `f·Σ d_i(m_i − m_{i−1})`.
    pub plain: u64,
    /// `f·Σ (d_i + δ_i)(m_i − m_{i−1})`.
    pub augmented: u64,
}

/// Exponent of `ℓ` in the index of the stabilizer of a filtered subgroup of
/// a type-III factor with relative dimension `h`.
pub fn index_exponent(profile: &FiltrationProfile, h: u64) -> Result<IndexExponent> {
    if h == 0 {
        return Err(Error::ZeroInvariant { field: "h" });
    }
    profile.validate(h)?;
    let f = profile.residue_degree as u64;
    let (mut plain, mut augmented) = (0u64, 0u64);
    for ((r, jump), &iso) in profile.jumps().zip(&profile.isotropy) {
        let d = codimension_in_so(r as u64, h);
        plain += d * jump as u64;
        augmented += (d + iso as u64) * jump as u64;
    }
    Ok(IndexExponent {
        plain: f * plain,
        augmented: f * augmented,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCount {
    pub ell: u64,
    pub level: u32,
    pub profile: FiltrationProfile,
    pub group_order: u64,
    pub stabilizer_order: u64,
    pub index: u64,
    pub predicted_exponent: u32,
    /// `index / ℓ^{predicted_exponent}`.
    pub ratio: Fraction,
}

/// Exhaustive count in `SL₂(ℤ/ℓ^m)` (the symplectic group of a plane) of the
/// pointwise stabilizer of the subgroup described by `profile`, compared
/// with `ℓ^{Σ c_i (m_i − m_{i−1})}` where `c_i = 3 − stabilizer_dim_formula(2 − r_i)`.
///
/// The subgroup is `⊕_j ⟨ℓ^{m−μ_j} e_j⟩` with `μ_j = max{m_i : r_i ≥ j}`.
pub fn point_count_index(ell: u64, level: u32, profile: &FiltrationProfile) -> Result<PointCount> {
    if ![2, 3, 5].contains(&ell) || !(1..=2).contains(&level) {
        return Err(Error::OutsideToyGrid(format!("ell = {ell}, m = {level}")));
    }
    profile.validate(1)?;
    if profile.residue_degree != 1 {
        return Err(Error::OutsideToyGrid("residue degree must be 1".into()));
    }
    if profile.exponents.iter().any(|&m| m > level) {
        return Err(Error::OutsideToyGrid(format!("exponents exceed the level {level}")));
    }
    let q = ell.pow(level);
    let mu = |j: u32| {
        profile
            .ranks
            .iter()
            .zip(&profile.exponents)
            .filter(|(&r, _)| r >= j)
            .map(|(_, &m)| m)
            .max()
            .unwrap_or(0)
    };
    // generators ℓ^{m−μ_j} e_j, skipping the trivial ones
    let gens: Vec<(usize, u64)> = (1..=2u32)
        .filter(|&j| mu(j) > 0)
        .map(|j| ((j - 1) as usize, ell.pow(level - mu(j)) % q))
        .collect();

    let (mut group_order, mut stabilizer_order) = (0u64, 0u64);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if (a * d + q * q - b * c) % q != 1 {
                        continue;
                    }
                    group_order += 1;
                    // g·e_0 = (a, c), g·e_1 = (b, d); x is the diagonal entry
                    let fixes = gens.iter().all(|&(j, s)| {
                        let (x, y) = if j == 0 { (a, c) } else { (d, b) };
                        (x * s) % q == s && (y * s) % q == 0
                    });
                    if fixes {
                        stabilizer_order += 1;
                    }
                }
            }
        }
    }
    let predicted_exponent: u32 = profile
        .jumps()
        .map(|(r, jump)| (3 - stabilizer_dim_formula(2 - r as u64, FormKind::Symplectic) as u32) * jump)
        .sum();
    let index = group_order / stabilizer_order;
    Ok(PointCount {
        ell,
        level,
        profile: profile.clone(),
        group_order,
        stabilizer_order,
        index,
        predicted_exponent,
        ratio: Fraction::new(BigInt::from(index), BigInt::from(ell).pow(predicted_exponent)),
    })
}

/// Every valid filtration of a plane at level `m`: ranks from `{2, 1, 0}`
/// (strictly decreasing) with exponents in `1..=m`.
pub fn toy_profiles(level: u32) -> Vec<FiltrationProfile> {
    let mut out = Vec::new();
    let rank_chains: [&[u32]; 7] = [&[0], &[1], &[2], &[1, 0], &[2, 0], &[2, 1], &[2, 1, 0]];
    for ranks in rank_chains {
        let t = ranks.len() as u32;
        if t > level {
            continue;
        }
        // strictly increasing exponent sequences of length t in 1..=level
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() as u32 == t {
                out.push(FiltrationProfile {
                    ranks: ranks.to_vec(),
                    exponents: prefix,
                    residue_degree: 1,
                    isotropy: ranks.iter().map(|&r| r > 1).collect(),
                });
                continue;
            }
            let start = prefix.last().map_or(1, |m| m + 1);
            for m in start..=level {
                let mut next = prefix.clone();
                next.push(m);
                stack.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        assert_eq!(stabilizer_dim_formula(0, FormKind::Symplectic), 0);
        assert_eq!(stabilizer_dim_formula(0, FormKind::Orthogonal), 0);
        assert_eq!(stabilizer_dim_formula(3, FormKind::Symplectic), 6);
        assert_eq!(stabilizer_dim_formula(3, FormKind::Orthogonal), 3);
    }

    #[test]
    fn oracle_examples() {
        let sp2 = FormSpace::new(2, FormKind::Symplectic).unwrap();
        assert_eq!(
            stabilizer_dim_oracle(&sp2, &[vec![1, 0]], FieldChoice::default()),
            Ok(1)
        );
        let o2 = FormSpace::new(2, FormKind::Orthogonal).unwrap();
        assert_eq!(stabilizer_dim_oracle(&o2, &[vec![1, 0]], FieldChoice::Rationals), Ok(0));
        // whole groups
        assert_eq!(stabilizer_dim_oracle(&sp2, &[], FieldChoice::default()), Ok(3));
        let o6 = FormSpace::new(6, FormKind::Orthogonal).unwrap();
        assert_eq!(stabilizer_dim_oracle(&o6, &[], FieldChoice::Rationals), Ok(15));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = random_subspace(&Rationals, 6, 4, &mut rng);
        assert_eq!(stabilizer_dim_oracle(&o6, &w, FieldChoice::Rationals), Ok(1));
    }

    #[test]
    fn oracle_errors() {
        let sp4 = FormSpace::new(4, FormKind::Symplectic).unwrap();
        let dep = vec![vec![1, 2, 0, 0], vec![2, 4, 0, 0]];
        assert_eq!(
            stabilizer_dim_oracle(&sp4, &dep, FieldChoice::default()),
            Err(Error::DependentBasis)
        );
        assert!(stabilizer_dim_oracle(&sp4, &[vec![1, 0]], FieldChoice::default()).is_err());
        let small = FieldChoice::Prime(PrimeField::new(3).unwrap());
        assert!(stabilizer_dim_oracle(&sp4, &[], small).is_err());
        assert!(FormSpace::new(3, FormKind::Orthogonal).is_err());
    }

    #[test]
    fn crafted_cover_both_branches() {
        for n in [2, 4, 6, 8] {
            for kind in [FormKind::Symplectic, FormKind::Orthogonal] {
                let s = FormSpace::new(n, kind).unwrap();
                let radicals: Vec<usize> = crafted_subspaces(&s)
                    .iter()
                    .map(|w| s.radical_dim(&Rationals, w).unwrap())
                    .collect();
                assert!(radicals.iter().any(|&r| r > 0));
                assert!(radicals.contains(&0));
            }
        }
    }

    #[test]
    fn quick_verification() {
        let cases = verify_dimensions(&[2, 4], 3, 1, FieldChoice::default()).unwrap();
        assert!(cases.iter().all(DimensionCase::passed));
        let cases = verify_dimensions(&[4], 1, 2, FieldChoice::Rationals).unwrap();
        assert!(cases.iter().all(DimensionCase::passed));
    }

    #[test]
    fn index_exponent_examples() {
        let p = FiltrationProfile::single(2, 1, 1);
        assert_eq!(index_exponent(&p, 1), Ok(IndexExponent { plain: 1, augmented: 2 }));
        let p = FiltrationProfile {
            ranks: vec![2],
            exponents: vec![3],
            residue_degree: 1,
            isotropy: vec![false],
        };
        assert_eq!(index_exponent(&p, 2).unwrap().plain, 15);
        assert_eq!(index_exponent(&FiltrationProfile::single(0, 1, 1), 3).unwrap().plain, 0);
        assert_eq!(
            index_exponent(&FiltrationProfile::single(5, 1, 1), 2),
            Err(Error::RankTooLarge { rank: 5, max: 4 })
        );
    }

    #[test]
    fn profile_validation() {
        let mk = |ranks: Vec<u32>, exps: Vec<u32>, iso: Vec<bool>| FiltrationProfile {
            ranks,
            exponents: exps,
            residue_degree: 1,
            isotropy: iso,
        };
        assert!(mk(vec![], vec![], vec![]).validate(2).is_err());
        assert!(mk(vec![2, 2], vec![1, 2], vec![true, true]).validate(2).is_err());
        assert!(mk(vec![3, 2], vec![2, 1], vec![true, true]).validate(2).is_err());
        assert!(mk(vec![3, 2], vec![1, 2], vec![false, true]).validate(2).is_err());
        assert!(mk(vec![3, 1], vec![1, 2], vec![false, false]).validate(2).is_err());
        assert!(mk(vec![3, 1], vec![1, 2], vec![true, false]).validate(2).is_ok());
    }

    #[test]
    fn codimension_identity() {
        for h in 1..20u64 {
            for r in 0..=2 * h {
                let complement = 2 * h - r;
                assert_eq!(
                    codimension_in_so(r, h),
                    h * (2 * h - 1) - complement * complement.saturating_sub(1) / 2
                );
            }
        }
    }

    #[test]
    fn point_count_examples() {
        let line = FiltrationProfile::single(1, 1, 1);
        let pc = point_count_index(5, 1, &line).unwrap();
        assert_eq!((pc.group_order, pc.stabilizer_order, pc.index), (120, 5, 24));
        assert_eq!(pc.predicted_exponent, 2);
        let pc = point_count_index(3, 1, &line).unwrap();
        assert_eq!((pc.index, pc.predicted_exponent), (8, 2));
        let trivial = FiltrationProfile::single(0, 1, 1);
        let pc = point_count_index(2, 1, &trivial).unwrap();
        assert_eq!((pc.index, pc.predicted_exponent), (1, 0));
        assert!(point_count_index(7, 1, &line).is_err());
        assert!(point_count_index(5, 3, &line).is_err());
    }

    #[test]
    fn toy_profiles_are_valid() {
        assert_eq!(toy_profiles(1).len(), 3);
        // level 2: 3 singles × 2 exponents + 3 pairs × 1
        assert_eq!(toy_profiles(2).len(), 9);
        for p in toy_profiles(2) {
            p.validate(1).unwrap();
        }
    }
}
