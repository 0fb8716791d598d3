//! Eigenvalue multiplicities of the Dirichlet Laplacian on `(0, π)^d`.
//!
//! An eigenvalue `λ` has one eigenfunction `∏ sin(nᵢ xᵢ)` per ordered tuple of
//! positive integers with `Σ nᵢ² = λ`, so its multiplicity is the number of
//! such tuples.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::number_theory::{factorize_big, ClassifiedFactorization};
use crate::oracle::Budget;
use crate::representations::{enumerate_reps, RepKind};

/// Witness lists longer than this are dropped and only the count is reported.
pub const DEFAULT_WITNESS_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumOptions {
    pub witness_limit: u64,
    pub budget: Budget,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions { witness_limit: DEFAULT_WITNESS_LIMIT, budget: Budget::default() }
    }
}

impl SpectrumOptions {
    /// Count only, no witness tuples.
    pub fn count_only() -> Self {
        SpectrumOptions { witness_limit: 0, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub lambda: BigUint,
    pub dim: u32,
    pub multiplicity: u64,
    /// Ordered index tuples, sorted lexicographically. Empty when
    /// `witnesses_omitted` is set.
    pub witnesses: Vec<Vec<BigUint>>,
    pub witnesses_omitted: bool,
}

impl MultiplicityReport {
    pub fn is_eigenvalue(&self) -> bool {
        self.multiplicity > 0
    }
}

/// Multiplicity of `λ` on the square. Values wider than 64 bits need
/// [`multiplicity_2d_factored`].
pub fn multiplicity_2d(lambda: &BigUint) -> Result<MultiplicityReport> {
    if lambda.is_zero() {
        return Err(Error::Domain("eigenvalues are positive".into()));
    }
    let f = factorize_big(lambda)?;
    Ok(multiplicity_2d_factored(&f, SpectrumOptions::default()))
}

/// Ordered pairs `(n, m)`, both `≥ 1`: each generic representation `a < b`
/// gives two, a diagonal one gives one, and `(0, b)` gives none.
pub fn multiplicity_2d_factored(f: &ClassifiedFactorization, opts: SpectrumOptions) -> MultiplicityReport {
    let predicted = multiplicity_2d_count(f);
    if predicted > opts.witness_limit {
        return MultiplicityReport {
            lambda: f.n().clone(),
            dim: 2,
            multiplicity: predicted,
            witnesses: Vec::new(),
            witnesses_omitted: true,
        };
    }
    let mut witnesses = Vec::new();
    for r in &enumerate_reps(f) {
        match r.kind() {
            RepKind::Zero => {}
            RepKind::Diagonal => witnesses.push(vec![r.a().clone(), r.b().clone()]),
            RepKind::Generic => {
                witnesses.push(vec![r.a().clone(), r.b().clone()]);
                witnesses.push(vec![r.b().clone(), r.a().clone()]);
            }
        }
    }
    witnesses.sort();
    debug_assert_eq!(witnesses.len() as u64, predicted);
    MultiplicityReport {
        lambda: f.n().clone(),
        dim: 2,
        multiplicity: witnesses.len() as u64,
        witnesses,
        witnesses_omitted: false,
    }
}

/// The 2-D multiplicity straight from the factorization: `∏(mᵢ+1)` first-quadrant
/// lattice points, less the one on the axis when `λ` is a square.
pub fn multiplicity_2d_count(f: &ClassifiedFactorization) -> u64 {
    if !f.is_sum_of_two_squares() {
        return 0;
    }
    f.split_divisor_count() - u64::from(f.is_square())
}

/// Multiplicity of `λ` on the cube `(0, π)^d`.
pub fn multiplicity_nd(lambda: u64, d: u32) -> Result<MultiplicityReport> {
    multiplicity_nd_with(lambda, d, SpectrumOptions::default())
}

/// Enumerates nondecreasing tuples (multisets); a multiset whose values repeat
/// `d₁, …, d_m` times accounts for `d! / ∏ dᵢ!` ordered tuples.
pub fn multiplicity_nd_with(lambda: u64, d: u32, opts: SpectrumOptions) -> Result<MultiplicityReport> {
    if d < 2 {
        return Err(Error::Domain(format!("dimension must be at least 2, got {d}")));
    }
    if lambda == 0 {
        return Err(Error::Domain("eigenvalues are positive".into()));
    }
    let patterns = sorted_patterns(lambda, d, opts.budget)?;
    let mut multiplicity = 0u64;
    for p in &patterns {
        multiplicity = multiplicity
            .checked_add(arrangements(p))
            .ok_or_else(|| Error::Domain("multiplicity exceeds u64".into()))?;
    }

    let omitted = multiplicity > opts.witness_limit;
    let mut witnesses = Vec::new();
    if !omitted {
        for p in &patterns {
            let mut perm = p.clone();
            loop {
                witnesses.push(perm.iter().map(|&x| BigUint::from(x)).collect());
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        witnesses.sort();
    }
    Ok(MultiplicityReport {
        lambda: BigUint::from(lambda),
        dim: d,
        multiplicity,
        witnesses,
        witnesses_omitted: omitted,
    })
}

/// Nondecreasing `d`-tuples of positive integers with squared sum `lambda`,
/// in lexicographic order.
pub fn sorted_patterns(lambda: u64, d: u32, budget: Budget) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d as usize);
    let mut steps = 0;
    extend_patterns(lambda, d, 1, &mut prefix, &mut out, &mut steps, budget)?;
    Ok(out)
}

fn extend_patterns(
    rest: u64,
    slots: u32,
    min: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    steps: &mut u64,
    budget: Budget,
) -> Result<()> {
    *steps += 1;
    budget.check(*steps)?;
    if slots == 1 {
        let s = rest.sqrt();
        if s >= min && s * s == rest {
            prefix.push(s);
            out.push(prefix.clone());
            prefix.pop();
        }
        return Ok(());
    }
    // remaining slots are all ≥ a, so slots·a² ≤ rest
    let mut a = min;
    while (slots as u128) * (a as u128) * (a as u128) <= rest as u128 {
        prefix.push(a);
        extend_patterns(rest - a * a, slots - 1, a, prefix, out, steps, budget)?;
        prefix.pop();
        a += 1;
    }
    Ok(())
}

/// Distinct orderings of a sorted tuple: the multinomial `d! / ∏ dᵢ!`.
pub fn arrangements(sorted: &[u64]) -> u64 {
    // product of binomials C(placed + run, run), kept exact at each step
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for run in sorted.chunk_by(|x, y| x == y).map(|c| c.len() as u128) {
        for j in 1..=run {
            total = total * (placed + j) / j;
        }
        placed += run;
    }
    u64::try_from(total).expect("arrangement count exceeds u64")
}

fn next_permutation(v: &mut [u64]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("v[i+1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// A `λ` whose multiplicity is not of the form `dk` or `dk + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub lambda: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub dim: u32,
    pub bound: u64,
    /// Every multiplicity seen for `1 ≤ λ ≤ bound`, including 0.
    pub observed: BTreeSet<u64>,
    /// Sorted by `λ`.
    pub counterexamples: Vec<Counterexample>,
}

/// `true` when `multiplicity ∈ {dk, dk + 1 : k ≥ 0}`.
pub fn is_viable(multiplicity: u64, d: u32) -> bool {
    multiplicity % d as u64 <= 1
}

/// Tabulates `multiplicity_nd(λ, d)` for `λ ≤ bound` and collects the values
/// that fall outside `{dk, dk + 1}`.
pub fn viable_multiplicity_survey(d: u32, bound: u64) -> Result<SurveyReport> {
    viable_multiplicity_survey_with(d, bound, Budget::default())
}

pub fn viable_multiplicity_survey_with(d: u32, bound: u64, budget: Budget) -> Result<SurveyReport> {
    if d < 3 {
        return Err(Error::Domain(format!("survey needs dimension at least 3, got {d}")));
    }
    let opts = SpectrumOptions { witness_limit: 0, budget };
    let mut observed = BTreeSet::new();
    let mut counterexamples = Vec::new();
    for lambda in 1..=bound {
        let multiplicity = multiplicity_nd_with(lambda, d, opts)?.multiplicity;
        observed.insert(multiplicity);
        if !is_viable(multiplicity, d) {
            counterexamples.push(Counterexample { lambda, multiplicity });
        }
    }
    Ok(SurveyReport { dim: d, bound, observed, counterexamples })
}
