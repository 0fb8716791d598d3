//! Per-value tabulation and oracle cross-checks, the units of work behind the
//! CLI's `table` and `verify` sweeps.

use num_bigint::BigUint;
use num_integer::Roots;

use crate::error::Result;
use crate::number_theory::factorize;
use crate::oracle::{brute_force_multiplicity_nd_with, brute_force_reps_with, divisor_count_check_with, Budget};
use crate::representations::{count_reps, enumerate_reps, RepKind};
use crate::spectrum::{multiplicity_2d_factored, multiplicity_nd_with, sorted_patterns, SpectrumOptions};

/// Above this the divisor cross-check is skipped.
pub const DIVISOR_CHECK_LIMIT: u64 = 100_000_000;

/// One row of the `lambda,multiplicity,num_reps,has_diagonal,has_zero` table.
///
/// In dimension `d`, `num_reps` counts nondecreasing tuples of `d` nonnegative
/// integers (not all zero) with squared sum `λ`; `has_zero` says one of them
/// contains a zero and `has_diagonal` that one has all entries equal. For
/// `d = 2` these are the representations `0 ≤ a ≤ b` and their kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: u64,
    pub multiplicity: u64,
    pub num_reps: u64,
    pub has_diagonal: bool,
    pub has_zero: bool,
}

pub fn table_row(lambda: u64, d: u32, budget: Budget) -> Result<TableRow> {
    if d == 2 {
        let f = factorize(lambda)?;
        let reps = enumerate_reps(&f);
        let multiplicity = multiplicity_2d_factored(&f, SpectrumOptions::count_only()).multiplicity;
        return Ok(TableRow {
            lambda,
            multiplicity,
            num_reps: reps.len() as u64,
            has_diagonal: reps.diagonal().is_some(),
            has_zero: reps.zero().is_some(),
        });
    }
    let opts = SpectrumOptions { witness_limit: 0, budget };
    let multiplicity = multiplicity_nd_with(lambda, d, opts)?.multiplicity;
    let mut with_zero = 0u64;
    for positive in 1..d {
        with_zero += sorted_patterns(lambda, positive, budget)?.len() as u64;
    }
    let full = sorted_patterns(lambda, d, budget)?;
    let has_diagonal = full.iter().any(|p| p.first() == p.last());
    Ok(TableRow {
        lambda,
        multiplicity,
        num_reps: with_zero + full.len() as u64,
        has_diagonal,
        has_zero: with_zero > 0,
    })
}

/// Cross-checks one value against the oracles; returns a description of every
/// disagreement (empty when all agree).
///
/// For `d = 2`: the Gaussian enumeration equals the lattice scan, the closed-form
/// count equals its size, the kinds match the square / twice-square tests, the
/// 2-D multiplicity equals the ordered-pair scan, and (below
/// [`DIVISOR_CHECK_LIMIT`]) the divisor-count identity holds. For `d ≥ 3`: the
/// multiset count equals the ordered-tuple scan.
pub fn verify_value(n: u64, d: u32, budget: Budget) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    if d != 2 {
        let opts = SpectrumOptions { witness_limit: 0, budget };
        let fast = multiplicity_nd_with(n, d, opts)?.multiplicity;
        let slow = brute_force_multiplicity_nd_with(n, d, budget)?;
        if fast != slow {
            problems.push(format!("{n}: d={d} multiplicity {fast}, oracle {slow}"));
        }
        return Ok(problems);
    }

    let f = factorize(n)?;
    if f.n() != &BigUint::from(n) || f.reconstruct() != BigUint::from(n) {
        problems.push(format!("{n}: factorization {f} does not reconstruct"));
    }
    let reps = enumerate_reps(&f);
    let oracle = brute_force_reps_with(n, budget)?;
    if reps != oracle {
        problems.push(format!("{n}: enumeration {:?} != oracle {:?}", reps.pairs(), oracle.pairs()));
    }
    let count = count_reps(&f);
    if count != oracle.len() as u64 {
        problems.push(format!("{n}: count_reps {count} != oracle size {}", oracle.len()));
    }
    let square = n.sqrt().pow(2) == n;
    let twice_square = n.is_multiple_of(2) && (n / 2).sqrt().pow(2) == n / 2;
    if (reps.count_kind(RepKind::Zero) == 1) != square || (reps.count_kind(RepKind::Diagonal) == 1) != twice_square {
        problems.push(format!("{n}: ZERO/DIAGONAL kinds disagree with square tests"));
    }
    let mult = multiplicity_2d_factored(&f, SpectrumOptions::default()).multiplicity;
    let ordered = brute_force_multiplicity_nd_with(n, 2, budget)?;
    if mult != ordered {
        problems.push(format!("{n}: multiplicity {mult} != ordered-pair scan {ordered}"));
    }
    if n <= DIVISOR_CHECK_LIMIT {
        // lattice points on the circle, less the four axis points of a square
        // and the four diagonal points of a twice-square, over 8 symmetries
        let lattice = divisor_count_check_with(n, budget)?;
        let predicted = ((lattice + 4 * i64::from(square) + 4 * i64::from(twice_square)) / 8) as u64;
        if predicted != oracle.len() as u64 {
            problems.push(format!("{n}: divisor identity predicts {predicted}, oracle has {}", oracle.len()));
        }
    }
    Ok(problems)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_2d() {
        let r = table_row(50, 2, Budget::default()).unwrap();
        assert_eq!(r, TableRow { lambda: 50, multiplicity: 3, num_reps: 2, has_diagonal: true, has_zero: false });
        let r = table_row(25, 2, Budget::default()).unwrap();
        assert_eq!(r, TableRow { lambda: 25, multiplicity: 2, num_reps: 2, has_diagonal: false, has_zero: true });
        assert_eq!(table_row(7, 2, Budget::default()).unwrap().num_reps, 0);
    }

    #[test]
    fn rows_3d() {
        // 3 is a sum of neither one nor two squares
        let r = table_row(3, 3, Budget::default()).unwrap();
        assert_eq!(r, TableRow { lambda: 3, multiplicity: 1, num_reps: 1, has_diagonal: true, has_zero: false });
        // 9 = 0+0+9 = 1+4+4
        let r = table_row(9, 3, Budget::default()).unwrap();
        assert_eq!(r, TableRow { lambda: 9, multiplicity: 3, num_reps: 2, has_diagonal: false, has_zero: true });
    }

    #[test]
    fn small_range_verifies() {
        for n in 1..=5_000 {
            assert_eq!(verify_value(n, 2, Budget::default()).unwrap(), Vec::<String>::new());
        }
        for n in 1..=300 {
            assert_eq!(verify_value(n, 3, Budget::default()).unwrap(), Vec::<String>::new());
            assert_eq!(verify_value(n, 4, Budget::default()).unwrap(), Vec::<String>::new());
        }
    }
}
