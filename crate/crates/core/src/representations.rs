//! Representations `N = a² + b²` with `0 ≤ a ≤ b`.
//!
//! Every representation comes from a Gaussian integer `w` with `w·w̄ = N`. For
//! `N = 2^l · ∏ pᵢ^mᵢ · ∏ qⱼ^kⱼ` (all `kⱼ` even) such a `w` is, up to units,
//!
//! ```text
//! w = (1+i)^l · ∏ zᵢ^tᵢ · z̄ᵢ^(mᵢ−tᵢ) · ∏ qⱼ^(kⱼ/2),    0 ≤ tᵢ ≤ mᵢ,
//! ```
//!
//! where `pᵢ = zᵢ z̄ᵢ`. Swapping every `tᵢ` for `mᵢ − tᵢ` conjugates `w` and gives
//! the same pair, so there are `⌈∏(mᵢ+1) / 2⌉` representations.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::gaussian::{gaussian_prime_over, GaussianInt};
use crate::number_theory::ClassifiedFactorization;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepKind {
    /// `a = 0 < b`; present iff `N` is a perfect square.
    Zero,
    /// `a = b > 0`; present iff `N/2` is a perfect square.
    Diagonal,
    /// `0 < a < b`.
    Generic,
}

impl RepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RepKind::Zero => "ZERO",
            RepKind::Diagonal => "DIAGONAL",
            RepKind::Generic => "GENERIC",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ZERO" => Some(RepKind::Zero),
            "DIAGONAL" => Some(RepKind::Diagonal),
            "GENERIC" => Some(RepKind::Generic),
            _ => None,
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A pair `0 ≤ a ≤ b`, not both zero. Orders by `a`, then `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    a: BigUint,
    b: BigUint,
    kind: RepKind,
}

impl Representation {
    /// Sorts the pair into `a ≤ b`. Returns `None` for `(0, 0)`.
    pub fn new(x: impl Into<BigUint>, y: impl Into<BigUint>) -> Option<Self> {
        let (x, y) = (x.into(), y.into());
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        if b.is_zero() {
            return None;
        }
        let kind = if a.is_zero() {
            RepKind::Zero
        } else if a == b {
            RepKind::Diagonal
        } else {
            RepKind::Generic
        };
        Some(Representation { a, b, kind })
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    /// `a² + b²`.
    pub fn value(&self) -> BigUint {
        &self.a * &self.a + &self.b * &self.b
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.b)
    }
}

/// All representations of one integer, sorted ascending by `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepSet {
    n: BigUint,
    reps: Vec<Representation>,
}

impl RepSet {
    /// Collects, sorts and deduplicates. Callers are responsible for every
    /// element actually representing `n`; this is checked in debug builds.
    pub fn new(n: BigUint, reps: impl IntoIterator<Item = Representation>) -> Self {
        let reps: Vec<Representation> = reps.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        debug_assert!(reps.iter().all(|r| r.value() == n));
        RepSet { n, reps }
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn reps(&self) -> &[Representation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Representation> {
        self.reps.iter()
    }

    pub fn count_kind(&self, kind: RepKind) -> usize {
        self.reps.iter().filter(|r| r.kind == kind).count()
    }

    pub fn zero(&self) -> Option<&Representation> {
        self.reps.iter().find(|r| r.kind == RepKind::Zero)
    }

    pub fn diagonal(&self) -> Option<&Representation> {
        self.reps.iter().find(|r| r.kind == RepKind::Diagonal)
    }

    /// `(a, b)` pairs as plain tuples; handy in tests.
    pub fn pairs(&self) -> Vec<(BigUint, BigUint)> {
        self.reps.iter().map(|r| (r.a.clone(), r.b.clone())).collect()
    }
}

impl<'a> IntoIterator for &'a RepSet {
    type Item = &'a Representation;
    type IntoIter = std::slice::Iter<'a, Representation>;

    fn into_iter(self) -> Self::IntoIter {
        self.reps.iter()
    }
}

/// Number of representations `0 ≤ a ≤ b`, from the factorization alone.
pub fn count_reps(f: &ClassifiedFactorization) -> u64 {
    if !f.is_sum_of_two_squares() {
        return 0;
    }
    f.split_divisor_count().div_ceil(2)
}

/// One candidate per exponent vector `(t₁, …, t_k)` that is lexicographically
/// at least its complement `(m₁−t₁, …)`, before deduplication.
///
/// Distinct vectors give distinct pairs, so this list never has repeats; see
/// [`enumerate_reps`], which still deduplicates.
pub fn gaussian_candidates(f: &ClassifiedFactorization) -> Vec<Representation> {
    if !f.is_sum_of_two_squares() {
        return Vec::new();
    }

    let mut base = GaussianInt::new(1, 1).pow(f.two_exp());
    let inert: BigInt = f.q_factors().iter().fold(BigInt::one(), |acc, &(q, k)| acc * BigInt::from(q).pow(k / 2));
    base.re *= &inert;
    base.im *= &inert;

    // choices[i][t] = zᵢ^t · z̄ᵢ^(mᵢ−t)
    let choices: Vec<Vec<GaussianInt>> = f
        .p_factors()
        .iter()
        .map(|&(p, m)| {
            let z = gaussian_prime_over(p).expect("factorization lists only primes ≡ 1 (mod 4) here");
            let zbar = z.conj();
            let z_pows = powers(&z, m);
            let zbar_pows = powers(&zbar, m);
            (0..=m as usize).map(|t| &z_pows[t] * &zbar_pows[m as usize - t]).collect()
        })
        .collect();
    let exps: Vec<u32> = f.p_factors().iter().map(|&(_, m)| m).collect();

    let mut out = Vec::with_capacity(count_reps(f) as usize);
    let mut t = vec![0u32; exps.len()];
    loop {
        if at_least_complement(&t, &exps) {
            let w = t.iter().zip(&choices).fold(base.clone(), |acc, (&ti, c)| &acc * &c[ti as usize]);
            let (a, b) = w.abs_parts_sorted();
            out.push(Representation::new(a, b).expect("w has nonzero norm"));
        }
        if !advance(&mut t, &exps) {
            break;
        }
    }
    out
}

fn powers(z: &GaussianInt, max: u32) -> Vec<GaussianInt> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(GaussianInt::one());
    for i in 0..max as usize {
        let next = &out[i] * z;
        out.push(next);
    }
    out
}

fn at_least_complement(t: &[u32], m: &[u32]) -> bool {
    for (&ti, &mi) in t.iter().zip(m) {
        let ci = mi - ti;
        if ti != ci {
            return ti > ci;
        }
    }
    true
}

/// Odometer step; returns `false` after the last vector.
fn advance(t: &mut [u32], m: &[u32]) -> bool {
    for i in (0..t.len()).rev() {
        if t[i] < m[i] {
            t[i] += 1;
            return true;
        }
        t[i] = 0;
    }
    false
}

/// All representations of `f.n()` as `a² + b²`, `0 ≤ a ≤ b`, sorted by `a`.
pub fn enumerate_reps(f: &ClassifiedFactorization) -> RepSet {
    RepSet::new(f.n().clone(), gaussian_candidates(f))
}

/// `M = a² + b²` ↦ `2M = (a+b)² + (b−a)²`.
pub fn doubling_map(r: &Representation) -> Representation {
    Representation::new(&r.b - &r.a, &r.a + &r.b).expect("a + b > 0")
}
