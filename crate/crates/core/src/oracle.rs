//! Brute-force ground truth.
//!
//! Nothing here touches factorization or Gaussian integers: representations
//! come from scanning `a` and testing `n − a²` with an exact integer square
//! root, and multiplicities from scanning ordered tuples directly.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::representations::{RepKind, RepSet, Representation};

/// Upper bound on the number of elementary steps a scan may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 10_000_000;

    pub fn new(max_steps: u64) -> Self {
        Budget { max_steps }
    }

    pub fn check(&self, needed: u64) -> Result<()> {
        if needed > self.max_steps {
            Err(Error::BudgetExceeded { needed, budget: self.max_steps })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_STEPS)
    }
}

/// `⌊√n⌋` by Newton's iteration on exact integers.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n < &BigUint::from(2u32) {
        return n.clone();
    }
    // 2^⌈bits/2⌉ ≥ √n, and Newton decreases monotonically from above.
    let mut x = BigUint::one() << n.bits().div_ceil(2) as usize;
    loop {
        let y = (&x + n / &x) >> 1usize;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// [`isqrt`] specialized to `u64`.
pub fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn is_square_u64(n: u64) -> bool {
    let s = isqrt_u64(n);
    s * s == n
}

pub fn is_square(n: &BigUint) -> bool {
    let s = isqrt(n);
    &s * &s == *n
}

/// All `(a, b)` with `0 ≤ a ≤ b` and `a² + b² = n`, by scanning `a ≤ √(n/2)`.
pub fn brute_force_reps(n: u64) -> Result<RepSet> {
    brute_force_reps_with(n, Budget::default())
}

pub fn brute_force_reps_with(n: u64, budget: Budget) -> Result<RepSet> {
    if n == 0 {
        return Err(Error::Domain("0 has no representations".into()));
    }
    let top = isqrt_u64(n / 2);
    budget.check(top + 1)?;
    let mut reps = Vec::new();
    for a in 0..=top {
        let rest = n - a * a;
        let b = isqrt_u64(rest);
        if b * b == rest {
            reps.extend(Representation::new(a, b));
        }
    }
    Ok(RepSet::new(BigUint::from(n), reps))
}

/// Number of ordered `d`-tuples of positive integers whose squares sum to `n`,
/// by recursing over the first coordinate.
pub fn brute_force_multiplicity_nd(n: u64, d: u32) -> Result<u64> {
    brute_force_multiplicity_nd_with(n, d, Budget::default())
}

pub fn brute_force_multiplicity_nd_with(n: u64, d: u32, budget: Budget) -> Result<u64> {
    if d < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut steps = 0u64;
    count_ordered(n, d, &mut steps, budget)
}

fn count_ordered(rest: u64, d: u32, steps: &mut u64, budget: Budget) -> Result<u64> {
    *steps += 1;
    budget.check(*steps)?;
    if d == 1 {
        return Ok(u64::from(rest > 0 && is_square_u64(rest)));
    }
    let mut total = 0;
    let mut a = 1u64;
    while a * a < rest {
        total += count_ordered(rest - a * a, d - 1, steps, budget)?;
        a += 1;
    }
    Ok(total)
}

/// `4·(d₁(n) − d₃(n))`, where `d₁`, `d₃` count divisors `≡ 1`, `≡ 3 (mod 4)`.
///
/// This is the number of lattice points `(x, y) ∈ ℤ²` on `x² + y² = n`, and
/// relates to [`brute_force_reps`] by
/// `|reps| = (r + 4·[n square] + 4·[n/2 square]) / 8`.
pub fn divisor_count_check(n: u64) -> Result<i64> {
    divisor_count_check_with(n, Budget::default())
}

pub fn divisor_count_check_with(n: u64, budget: Budget) -> Result<i64> {
    if n == 0 {
        return Err(Error::Domain("0 has infinitely many divisors".into()));
    }
    let root = isqrt_u64(n);
    budget.check(root)?;
    let mut d1 = 0i64;
    let mut d3 = 0i64;
    let mut tally = |d: u64| match d % 4 {
        1 => d1 += 1,
        3 => d3 += 1,
        _ => {}
    };
    for d in 1..=root {
        if n.is_multiple_of(d) {
            tally(d);
            if d != n / d {
                tally(n / d);
            }
        }
    }
    Ok(4 * (d1 - d3))
}

/// Representation count predicted by [`divisor_count_check`].
pub fn reps_from_divisor_count(n: u64) -> Result<u64> {
    let r = divisor_count_check(n)?;
    let square = i64::from(is_square_u64(n));
    let twice_square = i64::from(n.is_multiple_of(2) && is_square_u64(n / 2));
    let total = r + 4 * square + 4 * twice_square;
    debug_assert!(total >= 0 && total % 8 == 0);
    Ok((total / 8) as u64)
}

/// One fixture record: `N a b kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRecord {
    pub n: u64,
    pub rep: Representation,
}

/// Golden data for `1..=max`, one `N a b kind` line per representation,
/// sorted by `(N, a)`.
pub fn fixture_text(max: u64) -> Result<String> {
    let mut out = String::new();
    for n in 1..=max {
        for r in brute_force_reps(n)?.iter() {
            writeln!(out, "{} {} {} {}", n, r.a(), r.b(), r.kind()).expect("writing to a String");
        }
    }
    Ok(out)
}

/// Parses [`fixture_text`] output; blank lines and `#` comments are skipped.
pub fn parse_fixture(text: &str) -> Result<Vec<FixtureRecord>> {
    let mut records = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Domain(format!("fixture line {}: malformed record {line:?}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [n, a, b, kind] = fields[..] else {
            return Err(bad());
        };
        let n: u64 = n.parse().map_err(|_| bad())?;
        let a: u64 = a.parse().map_err(|_| bad())?;
        let b: u64 = b.parse().map_err(|_| bad())?;
        let kind = RepKind::parse(kind).ok_or_else(bad)?;
        let rep = Representation::new(a, b).ok_or_else(bad)?;
        if a > b || rep.kind() != kind || rep.value() != BigUint::from(n) {
            return Err(bad());
        }
        records.push(FixtureRecord { n, rep });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn pairs(set: &RepSet) -> Vec<(u64, u64)> {
        set.iter().map(|r| (r.a().try_into().unwrap(), r.b().try_into().unwrap())).collect()
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&BigUint::zero()), BigUint::zero());
        assert_eq!(isqrt(&BigUint::from(1249u32)), BigUint::from(35u32));
        assert_eq!(isqrt(&BigUint::from(1250u32)), BigUint::from(35u32));
        assert_eq!(isqrt_u64(1249), 35);
        assert_eq!(isqrt_u64(u64::MAX), u32::MAX as u64);
        assert_eq!(isqrt_u64(3), 1);
        assert_eq!(isqrt_u64(4), 2);
    }

    #[test]
    fn brute_force_reps_examples() {
        assert_eq!(pairs(&brute_force_reps(3125).unwrap()), vec![(10, 55), (25, 50), (38, 41)]);
        assert_eq!(pairs(&brute_force_reps(1).unwrap()), vec![(0, 1)]);
        assert_eq!(pairs(&brute_force_reps(50).unwrap()), vec![(1, 7), (5, 5)]);
        assert!(matches!(brute_force_reps(0), Err(Error::Domain(_))));
        assert!(matches!(brute_force_reps_with(1_000_000, Budget::new(10)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn brute_force_multiplicity_examples() {
        assert_eq!(brute_force_multiplicity_nd(50, 2), Ok(3));
        assert_eq!(brute_force_multiplicity_nd(6, 3), Ok(3));
        assert_eq!(brute_force_multiplicity_nd(4, 3), Ok(0));
        assert_eq!(brute_force_multiplicity_nd(3, 3), Ok(1));
        assert_eq!(brute_force_multiplicity_nd(10, 4), Ok(6));
        assert!(matches!(
            brute_force_multiplicity_nd_with(10_000, 4, Budget::new(100)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn divisor_check_examples() {
        assert_eq!(divisor_count_check(25), Ok(12));
        assert_eq!(reps_from_divisor_count(25), Ok(2));
        assert_eq!(divisor_count_check(50), Ok(12));
        assert_eq!(reps_from_divisor_count(50), Ok(2));
        assert_eq!(divisor_count_check(21), Ok(0));
        assert_eq!(reps_from_divisor_count(1), Ok(1));
        assert_eq!(reps_from_divisor_count(2), Ok(1));
    }

    #[test]
    fn divisor_check_matches_scan() {
        for n in 1..=20_000u64 {
            assert_eq!(reps_from_divisor_count(n).unwrap(), brute_force_reps(n).unwrap().len() as u64, "n = {n}");
        }
    }

    #[test]
    fn fixture_round_trip() {
        let text = fixture_text(50).unwrap();
        assert!(text.starts_with("1 0 1 ZERO\n2 1 1 DIAGONAL\n4 0 2 ZERO\n5 1 2 GENERIC\n"));
        let records = parse_fixture(&text).unwrap();
        let total: usize = (1..=50).map(|n| brute_force_reps(n).unwrap().len()).sum();
        assert_eq!(records.len(), total);
        assert!(parse_fixture("5 1 2 ZERO").is_err());
        assert!(parse_fixture("5 1 3 GENERIC").is_err());
        assert!(parse_fixture("5 1 2").is_err());
    }

    proptest! {
        #[test]
        fn isqrt_exact_near_squares(s in 1u64..=u64::MAX) {
            let s_big = BigUint::from(s);
            let sq = &s_big * &s_big;
            prop_assert_eq!(isqrt(&sq), s_big.clone());
            prop_assert_eq!(isqrt(&(&sq - 1u32)), &s_big - 1u32);
            prop_assert_eq!(isqrt(&(&sq + 1u32)), s_big.clone());
            prop_assert_eq!(isqrt(&sq), sq.sqrt());
        }

        #[test]
        fn isqrt_u64_brackets(n in any::<u64>()) {
            let s = isqrt_u64(n) as u128;
            prop_assert!(s * s <= n as u128 && (s + 1) * (s + 1) > n as u128);
        }
    }
}
