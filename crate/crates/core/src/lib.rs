//! Combinatorial side of torsion growth on abelian varieties of Albert type
//! I, II and III.
//!
//! An abelian variety is described only by its discrete invariants (Albert
//! type, degree `e` of the center, relative dimension `h`, multiplicity `n`).
//! From those the crate computes:
//!
//! * the optimal torsion exponent γ as an exact fraction, with the maximizing
//!   subset of factors as a witness ([`gamma`]);
//! * membership certificates for the exceptional dimension sets Σ, Σ′ and the
//!   odd type-III exclusion set ([`sets`]);
//! * whether the known sufficient criteria for being *fully of Lefschetz type*
//!   apply ([`lefschetz`]);
//! * the minuscule-weight tables and a generator that rebuilds Σ′ from tensor
//!   decompositions ([`minuscule`]);
//! * stabilizer dimensions and index exponents, with a nullspace oracle and
//!   toy-scale point counting ([`stabilizer`]);
//! * the ψ maximization, the prefix-max reduction and degree lower bounds
//!   ([`bounds`]).
//!
//! Everything except [`bounds::omega_asymptotic_check`] is exact integer or
//! rational arithmetic.

pub mod bounds;
pub mod error;
pub mod fraction;
pub mod gamma;
pub mod intmath;
pub mod lefschetz;
pub mod linalg;
pub mod minuscule;
pub mod reference;
pub mod sets;
pub mod stabilizer;
pub mod variety;

pub use error::{Error, Result};
pub use fraction::Fraction;
pub use gamma::{gamma_conjectural_form, gamma_product, gamma_simple, GammaConfig, GammaResult};
pub use lefschetz::{check_factor, check_product, LefschetzStatus, LefschetzVerdict};
pub use sets::{MembershipCertificate, SetTag};
pub use variety::{AlbertType, SimpleFactor, VarietyProduct};
