//! Eigenvalues of a prescribed multiplicity.
//!
//! - `n = 2k`: `N = p₁ · p₂^(k−1)` with distinct primes `p₁, p₂ ≡ 1 (mod 4)`. It has
//!   `2k` divisor choices over the split primes and is never a square or twice a
//!   square, so `k` generic representations and `2k` ordered pairs.
//! - `n = 2k + 1`: `M = 2 · p^(2k)` with `p ≡ 1 (mod 4)`. It has `k` generic
//!   representations plus the diagonal `(p^k, p^k)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::number_theory::{
    classify_prime, factorize, is_prime, primes_one_mod_four, ClassifiedFactorization, PrimeClass,
};
use crate::spectrum::{multiplicity_2d_count, multiplicity_2d_factored, SpectrumOptions};

/// Largest scan accepted by [`smallest_with_multiplicity`].
pub const SMALLEST_SCAN_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `n = 2k`, value `p1 · p2^(k−1)`; `p2` is `None` exactly when `k = 1`.
    Even { p1: u64, p2: Option<u64>, k: u32 },
    /// `n = 2k + 1`, value `2 · p^(2k)`.
    Odd { p: u64, k: u32 },
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::Even { .. } => "EVEN",
            Branch::Odd { .. } => "ODD",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Branch::Even { p1, p2: Some(p2), k } => write!(f, "EVEN(p1={p1}, p2={p2}, k={k})"),
            Branch::Even { p1, p2: None, k } => write!(f, "EVEN(p1={p1}, k={k})"),
            Branch::Odd { p, k } => write!(f, "ODD(p={p}, k={k})"),
        }
    }
}

/// A verified eigenvalue of multiplicity `target`, with its factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub target: u64,
    pub branch: Branch,
    /// Prime `q ≡ 3 (mod 4)` whose square scales the branch value. Only used to
    /// produce further multiplicity-1 values, since `2·p⁰ = 2` for every `p`.
    pub inert_factor: Option<u64>,
    pub value: BigUint,
    pub factorization: ClassifiedFactorization,
}

/// The eigenvalue of multiplicity `n` built from the smallest admissible primes.
pub fn construct(n: u64) -> Result<Recipe> {
    let branch = match split_target(n)? {
        Target::Even(1) => Branch::Even { p1: 5, p2: None, k: 1 },
        Target::Even(k) => Branch::Even { p1: 5, p2: Some(13), k },
        Target::Odd(k) => Branch::Odd { p: 5, k },
    };
    build(n, branch, None)
}

/// `count` recipes for multiplicity `n` with strictly increasing values.
///
/// The free prime advances through the primes `≡ 1 (mod 4)`: `p₂` for even
/// `n ≥ 4`, `p₁` for `n = 2`, `p` for odd `n ≥ 3`. For `n = 1` the value `2` is
/// followed by `2q²` over primes `q ≡ 3 (mod 4)`.
pub fn construct_many(n: u64, count: usize) -> Result<Vec<Recipe>> {
    let target = split_target(n)?;
    match target {
        Target::Even(1) => primes_one_mod_four(count, 0)
            .into_iter()
            .map(|p1| build(n, Branch::Even { p1, p2: None, k: 1 }, None))
            .collect(),
        Target::Even(k) => primes_one_mod_four(count, 6)
            .into_iter()
            .map(|p2| build(n, Branch::Even { p1: 5, p2: Some(p2), k }, None))
            .collect(),
        Target::Odd(0) => std::iter::once(None)
            .chain(primes_three_mod_four().map(Some))
            .take(count)
            .map(|q| build(n, Branch::Odd { p: 5, k: 0 }, q))
            .collect(),
        Target::Odd(k) => {
            primes_one_mod_four(count, 0).into_iter().map(|p| build(n, Branch::Odd { p, k }, None)).collect()
        }
    }
}

/// The least `λ ≤ bound` of multiplicity exactly `n`, if any.
pub fn smallest_with_multiplicity(n: u64, bound: u64) -> Result<Option<u64>> {
    if bound > SMALLEST_SCAN_LIMIT {
        return Err(Error::BudgetExceeded { needed: bound, budget: SMALLEST_SCAN_LIMIT });
    }
    for lambda in 1..=bound {
        if multiplicity_2d_count(&factorize(lambda)?) == n {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

enum Target {
    Even(u32),
    Odd(u32),
}

fn split_target(n: u64) -> Result<Target> {
    if n == 0 {
        return Err(Error::Domain("target multiplicity must be positive".into()));
    }
    let k = u32::try_from(n / 2).map_err(|_| Error::Domain(format!("target multiplicity {n} is too large")))?;
    Ok(if n.is_multiple_of(2) { Target::Even(k) } else { Target::Odd(k) })
}

fn primes_three_mod_four() -> impl Iterator<Item = u64> {
    (3u64..).step_by(4).filter(|&q| is_prime(q))
}

fn require_class(p: u64, want: PrimeClass) -> Result<()> {
    let class = classify_prime(p)?;
    if class != want {
        return Err(Error::Domain(format!("{p} is {class}, expected {want}")));
    }
    Ok(())
}

fn build(target: u64, branch: Branch, inert_factor: Option<u64>) -> Result<Recipe> {
    let mut powers = match branch {
        Branch::Even { p1, p2: None, k: 1 } => {
            require_class(p1, PrimeClass::OneModFour)?;
            vec![(p1, 1)]
        }
        Branch::Even { p1, p2: Some(p2), k } if k >= 2 => {
            require_class(p1, PrimeClass::OneModFour)?;
            require_class(p2, PrimeClass::OneModFour)?;
            if p1 == p2 {
                return Err(Error::Domain(format!(
                    "p1 and p2 must differ: {p1}^{k} has only {} representations",
                    (k + 2) / 2
                )));
            }
            vec![(p1, 1), (p2, k - 1)]
        }
        Branch::Even { .. } => return Err(Error::Domain(format!("{branch}: p2 is required exactly when k ≥ 2"))),
        Branch::Odd { p, k } => {
            require_class(p, PrimeClass::OneModFour)?;
            vec![(2, 1), (p, 2 * k)]
        }
    };
    if let Some(q) = inert_factor {
        require_class(q, PrimeClass::ThreeModFour)?;
        powers.push((q, 2));
    }
    let factorization = ClassifiedFactorization::from_prime_powers(powers)?;

    let recipe = Recipe { target, branch, inert_factor, value: factorization.n().clone(), factorization };
    verify(&recipe)?;
    Ok(recipe)
}

/// Recomputes the multiplicity of `recipe.value` by enumerating its
/// representations; values that fit in 64 bits are also refactorized from scratch.
pub fn verify(recipe: &Recipe) -> Result<()> {
    let f = match recipe.value.to_u64() {
        Some(v) => {
            let fresh = factorize(v)?;
            if fresh != recipe.factorization {
                return Err(Error::Verification(format!(
                    "{} factorizes as {fresh}, recipe claims {}",
                    recipe.value, recipe.factorization
                )));
            }
            fresh
        }
        None => recipe.factorization.clone(),
    };
    if f.n() != &recipe.value {
        return Err(Error::Verification(format!("factorization {f} does not multiply to {}", recipe.value)));
    }
    let report = multiplicity_2d_factored(&f, SpectrumOptions::default());
    let counted = if report.witnesses_omitted { report.multiplicity } else { report.witnesses.len() as u64 };
    if counted != recipe.target {
        return Err(Error::Verification(format!(
            "{} has multiplicity {counted}, expected {}",
            recipe.value, recipe.target
        )));
    }
    Ok(())
}
