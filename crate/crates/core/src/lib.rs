//! Multiplicities of Dirichlet Laplacian eigenvalues on the square `(0, π)²`.
//!
//! The eigenvalues are `λ = n² + m²` with `n, m ≥ 1`, so the multiplicity of
//! `λ` is the number of ordered positive pairs whose squares sum to `λ`. This
//! crate computes those counts exactly from the factorization of `λ` over the
//! Gaussian integers, enumerates the representations, and builds eigenvalues of
//! any requested multiplicity.
//!
//! Modules:
//!
//! - [`number_theory`]: primality, factorization grouped by residue mod 4.
//! - [`gaussian`]: exact Gaussian integers, splitting `p ≡ 1 (mod 4)`.
//! - [`representations`]: counting and enumerating `N = a² + b²`.
//! - [`spectrum`]: 2-D and d-dimensional multiplicities, viability survey.
//! - [`constructor`]: eigenvalues with a prescribed multiplicity.
//! - [`oracle`]: brute-force ground truth used to check everything above.
//! - [`sweep`]: range verification and tabulation shared with the CLI.

pub mod constructor;
pub mod error;
pub mod gaussian;
pub mod number_theory;
pub mod oracle;
pub mod representations;
pub mod spectrum;
pub mod sweep;

pub use constructor::{construct, construct_many, smallest_with_multiplicity, Branch, Recipe};
pub use error::{Error, Result};
pub use gaussian::{canonical_associate, split_prime, sqrt_minus_one_mod_p, GaussianInt};
pub use number_theory::{
    classify_prime, factorize, is_prime, primes_one_mod_four, ClassifiedFactorization, PrimeClass,
};
pub use oracle::Budget;
pub use representations::{count_reps, doubling_map, enumerate_reps, RepKind, RepSet, Representation};
pub use spectrum::{multiplicity_2d, multiplicity_nd, viable_multiplicity_survey, MultiplicityReport, SurveyReport};

pub use num_bigint::{BigInt, BigUint};
