//! Exact Gaussian integers `a + bi` and the splitting `p = a² + b²` of primes
//! `p ≡ 1 (mod 4)`.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::number_theory::{classify_prime, mul_mod, pow_mod, PrimeClass};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The unit `i`.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigUint {
        let n = &self.re * &self.re + &self.im * &self.im;
        n.to_biguint().expect("sum of squares is nonnegative")
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by `i`, a quarter turn.
    pub fn rotate(&self) -> Self {
        GaussianInt { re: -&self.im, im: self.re.clone() }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(|re|, |im|)` in ascending order.
    pub fn abs_parts_sorted(&self) -> (BigUint, BigUint) {
        let x = self.re.magnitude().clone();
        let y = self.im.magnitude().clone();
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;

    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;

    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        &self * &rhs
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.sign() == Sign::Minus { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.magnitude())
    }
}

/// Product of two Gaussian integers.
pub fn mul(z: &GaussianInt, w: &GaussianInt) -> GaussianInt {
    z * w
}

pub fn conj(z: &GaussianInt) -> GaussianInt {
    z.conj()
}

/// The associate `u·z` (`u ∈ {1, i, −1, −i}`) with `re > 0` and `im ≥ 0`.
pub fn canonical_associate(z: &GaussianInt) -> Result<GaussianInt> {
    if z.is_zero() {
        return Err(Error::Domain("0 has no canonical associate".into()));
    }
    let mut w = z.clone();
    for _ in 0..4 {
        if w.re.is_positive() && !w.im.is_negative() {
            return Ok(w);
        }
        w = w.rotate();
    }
    unreachable!("some rotation of a nonzero Gaussian integer lies in the first quadrant")
}

fn require_one_mod_four(p: u64) -> Result<()> {
    match classify_prime(p)? {
        PrimeClass::OneModFour => Ok(()),
        class => Err(Error::Domain(format!(
            "{p} is in class {class}; only primes ≡ 1 (mod 4) split as a sum of two squares"
        ))),
    }
}

/// The smaller square root of −1 modulo a prime `p ≡ 1 (mod 4)`.
///
/// Candidates `c = 2, 3, 5, 7, ...` are tried in order; `c^((p−1)/4)` is a
/// root exactly when `c` is a quadratic non-residue. Of the two roots `x` and
/// `p − x`, the smaller is returned.
pub fn sqrt_minus_one_mod_p(p: u64) -> Result<u64> {
    require_one_mod_four(p)?;
    let quarter = (p - 1) / 4;
    let mut c = 2u64;
    loop {
        let x = pow_mod(c, quarter, p);
        if mul_mod(x, x, p) == p - 1 {
            return Ok(x.min(p - x));
        }
        c = next_small_prime(c);
    }
}

fn next_small_prime(c: u64) -> u64 {
    (c + 1..).find(|&k| crate::number_theory::is_prime(k)).expect("primes are unbounded")
}

/// Splits `p ≡ 1 (mod 4)` as `p = a² + b²` with `0 < a < b`.
///
/// Runs the Euclidean algorithm on `(p, x)` with `x² ≡ −1 (mod p)`; the first
/// remainder below `√p` and the one after it are the two legs.
pub fn split_prime(p: u64) -> Result<(u64, u64)> {
    let x = sqrt_minus_one_mod_p(p)?;
    let (mut prev, mut cur) = (p, x);
    while (cur as u128) * (cur as u128) > p as u128 {
        (prev, cur) = (cur, prev % cur);
    }
    let next = prev % cur;
    let (a, b) = (cur.min(next), cur.max(next));
    debug_assert_eq!(a as u128 * a as u128 + b as u128 * b as u128, p as u128);
    Ok((a, b))
}

/// The Gaussian prime `a + bi` over `p`, with `0 < a < b` as from [`split_prime`].
pub fn gaussian_prime_over(p: u64) -> Result<GaussianInt> {
    let (a, b) = split_prime(p)?;
    Ok(GaussianInt::new(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(&g(1, 2), &g(1, 2)), g(-3, 4));
        assert_eq!(mul(&g(-3, 4), &g(1, 2)), g(-11, -2));
        assert_eq!(mul(&g(17, -31), &GaussianInt::one()), g(17, -31));
        assert_eq!(g(1, 2).pow(3), g(-11, -2));
        assert_eq!(g(1, 2).pow(5), g(41, -38));
        assert_eq!(g(7, 7).pow(0), GaussianInt::one());
    }

    #[test]
    fn conj_examples() {
        assert_eq!(conj(&g(1, 2)), g(1, -2));
        assert_eq!(conj(&g(7, 0)), g(7, 0));
        assert_eq!(conj(&g(0, -3)), g(0, 3));
    }

    #[test]
    fn canonical_associate_examples() {
        assert_eq!(canonical_associate(&g(-11, -2)).unwrap(), g(11, 2));
        assert_eq!(canonical_associate(&g(0, 5)).unwrap(), g(5, 0));
        assert_eq!(canonical_associate(&g(3, 4)).unwrap(), g(3, 4));
        assert_eq!(canonical_associate(&g(0, -1)).unwrap(), g(1, 0));
        assert!(matches!(canonical_associate(&GaussianInt::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn sqrt_minus_one_examples() {
        assert_eq!(sqrt_minus_one_mod_p(5), Ok(2));
        assert_eq!(sqrt_minus_one_mod_p(13), Ok(5));
        assert_eq!(sqrt_minus_one_mod_p(41), Ok(9));
        assert!(matches!(sqrt_minus_one_mod_p(7), Err(Error::Domain(_))));
        assert!(matches!(sqrt_minus_one_mod_p(2), Err(Error::Domain(_))));
        assert_eq!(sqrt_minus_one_mod_p(21), Err(Error::NotPrime(21)));
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_prime(5), Ok((1, 2)));
        assert_eq!(split_prime(13), Ok((2, 3)));
        assert_eq!(split_prime(41), Ok((4, 5)));
        assert!(matches!(split_prime(2), Err(Error::Domain(_))));
        assert!(matches!(split_prime(7), Err(Error::Domain(_))));
    }

    #[test]
    fn split_large_prime() {
        let p = 18_446_744_073_709_551_557u64; // ≡ 1 (mod 4)
        let (a, b) = split_prime(p).unwrap();
        assert!(a < b);
        assert_eq!(a as u128 * a as u128 + b as u128 * b as u128, p as u128);
    }

    #[test]
    fn display() {
        assert_eq!(g(-11, -2).to_string(), "-11-2i");
        assert_eq!(g(5, 0).to_string(), "5+0i");
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -1_000_000i64..=1_000_000, b in -1_000_000i64..=1_000_000,
                                  c in -1_000_000i64..=1_000_000, d in -1_000_000i64..=1_000_000) {
            let (z, w) = (g(a, b), g(c, d));
            prop_assert_eq!((&z * &w).norm(), z.norm() * w.norm());
        }

        #[test]
        fn conj_is_involution(a in any::<i64>(), b in any::<i64>()) {
            let z = g(a, b);
            prop_assert_eq!(z.conj().conj(), z.clone());
            prop_assert_eq!(z.conj().norm(), z.norm());
        }

        #[test]
        fn canonical_associate_is_unit_invariant(a in -1_000_000i64..=1_000_000, b in -1_000_000i64..=1_000_000) {
            prop_assume!(a != 0 || b != 0);
            let z = g(a, b);
            let c = canonical_associate(&z).unwrap();
            prop_assert!(c.re.is_positive() && !c.im.is_negative());
            prop_assert_eq!(canonical_associate(&c).unwrap(), c.clone());
            let mut u = z.clone();
            for _ in 0..4 {
                prop_assert_eq!(canonical_associate(&u).unwrap(), c.clone());
                u = u.rotate();
            }
        }
    }
}
