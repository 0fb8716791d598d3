//! Primality, residue classes mod 4, and prime factorization grouped as
//! `N = 2^l · ∏ pᵢ^mᵢ · ∏ qⱼ^kⱼ` with `pᵢ ≡ 1` and `qⱼ ≡ 3 (mod 4)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Trial division stops here and hands the cofactor to Pollard rho.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Witnesses for Miller-Rabin; deterministic for every n < 3.3·10^24.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Pollard-Brent gives up after this many polynomial constants.
const RHO_ATTEMPTS: u64 = 64;
const RHO_MAX_ITERS: u64 = 1 << 22;

/// Residue class of a prime modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeClass {
    Two,
    /// Splits in the Gaussian integers.
    OneModFour,
    /// Inert in the Gaussian integers.
    ThreeModFour,
}

impl PrimeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PrimeClass::Two => "TWO",
            PrimeClass::OneModFour => "ONE_MOD_4",
            PrimeClass::ThreeModFour => "THREE_MOD_4",
        }
    }
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test over the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// [`is_prime`] for an arbitrary-precision input; rejects anything wider than 64 bits.
pub fn is_prime_big(n: &BigUint) -> Result<bool> {
    n.to_u64().map(is_prime).ok_or_else(|| Error::UnsupportedWidth(n.to_string()))
}

pub fn classify_prime(p: u64) -> Result<PrimeClass> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(match p % 4 {
        1 => PrimeClass::OneModFour,
        3 => PrimeClass::ThreeModFour,
        _ => PrimeClass::Two,
    })
}

/// The `count` smallest primes `p ≥ min` with `p ≡ 1 (mod 4)`, ascending.
pub fn primes_one_mod_four(count: usize, min: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    // first candidate ≥ max(min, 5) that is ≡ 1 (mod 4)
    let start = min.max(5);
    let mut candidate = start + (4 - (start % 4) + 1) % 4;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate = candidate.checked_add(4).expect("ran out of 64-bit primes ≡ 1 (mod 4)");
    }
    out
}

/// 3, then 5, 7, 11, 13, … (numbers ≡ ±1 mod 6) up to the trial limit. Composite
/// candidates never divide once their prime factors have been removed.
fn trial_divisors() -> impl Iterator<Item = u64> {
    std::iter::once(3).chain((5..=TRIAL_LIMIT).step_by(6).flat_map(|k| [k, k + 2]))
}

/// An integer together with its prime factorization, grouped by residue mod 4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassifiedFactorization {
    n: BigUint,
    two_exp: u32,
    p_factors: Vec<(u64, u32)>,
    q_factors: Vec<(u64, u32)>,
}

impl ClassifiedFactorization {
    /// Builds a factorization from known prime powers (the "hint" path used for
    /// values wider than 64 bits). Bases are checked for primality, repeated
    /// bases are merged, and zero exponents are dropped.
    pub fn from_prime_powers<I>(powers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u32)>,
    {
        let mut two_exp = 0u32;
        let mut p_factors: Vec<(u64, u32)> = Vec::new();
        let mut q_factors: Vec<(u64, u32)> = Vec::new();
        for (p, e) in powers {
            if e == 0 {
                continue;
            }
            let bucket = match classify_prime(p)? {
                PrimeClass::Two => {
                    two_exp += e;
                    continue;
                }
                PrimeClass::OneModFour => &mut p_factors,
                PrimeClass::ThreeModFour => &mut q_factors,
            };
            match bucket.iter_mut().find(|(b, _)| *b == p) {
                Some((_, exp)) => *exp += e,
                None => bucket.push((p, e)),
            }
        }
        p_factors.sort_unstable();
        q_factors.sort_unstable();
        let mut f = ClassifiedFactorization { n: BigUint::one(), two_exp, p_factors, q_factors };
        f.n = f.reconstruct();
        Ok(f)
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// The exponent `l` of 2.
    pub fn two_exp(&self) -> u32 {
        self.two_exp
    }

    /// `(pᵢ, mᵢ)` for primes `pᵢ ≡ 1 (mod 4)`, increasing in `pᵢ`.
    pub fn p_factors(&self) -> &[(u64, u32)] {
        &self.p_factors
    }

    /// `(qⱼ, kⱼ)` for primes `qⱼ ≡ 3 (mod 4)`, increasing in `qⱼ`.
    pub fn q_factors(&self) -> &[(u64, u32)] {
        &self.q_factors
    }

    /// Multiplies the factors back together.
    pub fn reconstruct(&self) -> BigUint {
        let mut acc = BigUint::one() << self.two_exp as usize;
        for &(p, e) in self.p_factors.iter().chain(&self.q_factors) {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// All prime powers in increasing order of the prime.
    pub fn prime_powers(&self) -> Vec<(u64, u32)> {
        let mut all: Vec<(u64, u32)> = self.p_factors.iter().chain(&self.q_factors).copied().collect();
        if self.two_exp > 0 {
            all.push((2, self.two_exp));
        }
        all.sort_unstable();
        all
    }

    /// `true` when every inert prime has an even exponent, i.e. `n` is a sum of two squares.
    pub fn is_sum_of_two_squares(&self) -> bool {
        self.q_factors.iter().all(|&(_, k)| k % 2 == 0)
    }

    /// `true` when `n` is a perfect square.
    pub fn is_square(&self) -> bool {
        self.two_exp.is_multiple_of(2) && self.prime_powers().iter().all(|&(_, e)| e % 2 == 0)
    }

    /// `true` when `n / 2` is an integer perfect square.
    pub fn is_twice_square(&self) -> bool {
        self.two_exp % 2 == 1 && self.p_factors.iter().chain(&self.q_factors).all(|&(_, e)| e % 2 == 0)
    }

    /// `∏ (mᵢ + 1)` over the split primes.
    pub fn split_divisor_count(&self) -> u64 {
        self.p_factors
            .iter()
            .fold(1u64, |acc, &(_, m)| acc.checked_mul(m as u64 + 1).expect("divisor count exceeds u64"))
    }
}

impl fmt::Display for ClassifiedFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let powers = self.prime_powers();
        if powers.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in powers.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n ≥ 1`. `n = 1` yields the empty factorization.
pub fn factorize(n: u64) -> Result<ClassifiedFactorization> {
    if n == 0 {
        return Err(Error::Domain("cannot factorize 0".into()));
    }
    let mut powers: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;

    let tz = rest.trailing_zeros();
    if tz > 0 {
        powers.push((2, tz));
        rest >>= tz;
    }

    let mut exhausted_trial = true;
    for d in trial_divisors() {
        if d * d > rest {
            exhausted_trial = false;
            break;
        }
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            powers.push((d, e));
        }
    }

    if rest > 1 {
        // Either the loop stopped at p² > rest (rest is prime), or rest has no
        // factor below the trial limit.
        if !exhausted_trial || is_prime(rest) {
            powers.push((rest, 1));
        } else {
            let mut stack = vec![rest];
            while let Some(m) = stack.pop() {
                if is_prime(m) {
                    powers.push((m, 1));
                    continue;
                }
                match pollard_brent(m) {
                    Some(d) => {
                        stack.push(d);
                        stack.push(m / d);
                    }
                    None => return Err(Error::FactorizationStalled { n, partial: powers, cofactor: m }),
                }
            }
        }
    }

    ClassifiedFactorization::from_prime_powers(powers)
}

/// [`factorize`] for an arbitrary-precision input. Values wider than 64 bits
/// must be factorized by their producer (see [`ClassifiedFactorization::from_prime_powers`]).
pub fn factorize_big(n: &BigUint) -> Result<ClassifiedFactorization> {
    let small = n.to_u64().ok_or_else(|| Error::UnsupportedWidth(n.to_string()))?;
    factorize(small)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Finds a nontrivial factor of an odd composite `n` with Brent's cycle detection.
fn pollard_brent(n: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    const BATCH: u64 = 128;
    for c in 1..=RHO_ATTEMPTS {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut x = y;
        let mut ys = y;
        let mut g = 1u64;
        let mut q = 1u64;
        let mut r = 1u64;
        let mut iters = 0u64;
        while g == 1 && iters < RHO_MAX_ITERS {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            iters += r;
            r <<= 1;
        }
        if g == n {
            // batch overshot; step back one at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != 1 && g != n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(2));
        assert!(!is_prime(561));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..200_000u64 {
            assert_eq!(is_prime(n), trial_division_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn primality_large() {
        // largest 64-bit prime, and a strong pseudoprime to several small bases
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(!is_prime(u64::MAX));
        assert_eq!(
            is_prime_big(&(BigUint::one() << 64usize)),
            Err(Error::UnsupportedWidth("18446744073709551616".into()))
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_prime(5), Ok(PrimeClass::OneModFour));
        assert_eq!(classify_prime(3), Ok(PrimeClass::ThreeModFour));
        assert_eq!(classify_prime(13), Ok(PrimeClass::OneModFour));
        assert_eq!(classify_prime(2), Ok(PrimeClass::Two));
        assert_eq!(classify_prime(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(125).unwrap();
        assert_eq!((f.two_exp(), f.p_factors(), f.q_factors()), (0, &[(5, 3)][..], &[][..]));
        let f = factorize(1250).unwrap();
        assert_eq!((f.two_exp(), f.p_factors(), f.q_factors()), (1, &[(5, 4)][..], &[][..]));
        let f = factorize(12).unwrap();
        assert_eq!((f.two_exp(), f.p_factors(), f.q_factors()), (2, &[][..], &[(3, 1)][..]));
        let f = factorize(1).unwrap();
        assert_eq!((f.two_exp(), f.p_factors().len(), f.q_factors().len()), (0, 0, 0));
        assert!(matches!(factorize(0), Err(Error::Domain(_))));
    }

    #[test]
    fn factorize_hard_64_bit() {
        // semiprimes with both factors above the trial-division limit
        for (p, q) in [(1_000_003u64, 1_000_033u64), (4_294_967_291, 4_294_967_279), (999_999_937, 18_446_744_059)] {
            let n = p * q;
            let f = factorize(n).unwrap();
            assert_eq!(f.reconstruct(), BigUint::from(n));
            let mut bases: Vec<u64> = f.prime_powers().iter().map(|&(b, _)| b).collect();
            bases.sort();
            let mut want = vec![p.min(q), p.max(q)];
            want.dedup();
            assert_eq!(bases, want);
        }
        let f = factorize(u64::MAX).unwrap();
        assert_eq!(f.reconstruct(), BigUint::from(u64::MAX));
        let p = 18_446_744_073_709_551_557u64;
        assert_eq!(factorize(p).unwrap().prime_powers(), vec![(p, 1)]);
    }

    #[test]
    fn factorize_big_rejects_wide() {
        let wide = BigUint::from(5u32).pow(40);
        assert!(matches!(factorize_big(&wide), Err(Error::UnsupportedWidth(_))));
        assert_eq!(factorize_big(&BigUint::from(50u32)).unwrap().p_factors(), &[(5, 2)]);
    }

    #[test]
    fn hint_path_merges_and_validates() {
        let f = ClassifiedFactorization::from_prime_powers([(5, 2), (2, 1), (5, 2), (3, 0)]).unwrap();
        assert_eq!(f.n(), &BigUint::from(1250u32));
        assert_eq!(f.q_factors(), &[]);
        assert_eq!(ClassifiedFactorization::from_prime_powers([(9, 1)]), Err(Error::NotPrime(9)));
        let wide = ClassifiedFactorization::from_prime_powers([(2, 1), (5, 200)]).unwrap();
        assert_eq!(wide.n(), &(BigUint::from(2u32) * BigUint::from(5u32).pow(200)));
    }

    #[test]
    fn square_predicates() {
        assert!(factorize(36).unwrap().is_square());
        assert!(!factorize(50).unwrap().is_square());
        assert!(factorize(50).unwrap().is_twice_square());
        assert!(factorize(2).unwrap().is_twice_square());
        assert!(!factorize(1).unwrap().is_twice_square());
        assert!(factorize(1).unwrap().is_square());
    }

    #[test]
    fn primes_one_mod_four_examples() {
        assert_eq!(primes_one_mod_four(2, 0), vec![5, 13]);
        assert_eq!(primes_one_mod_four(1, 6), vec![13]);
        assert_eq!(primes_one_mod_four(3, 0), vec![5, 13, 17]);
        assert_eq!(primes_one_mod_four(2, 13), vec![13, 17]);
        assert_eq!(primes_one_mod_four(1, 14), vec![17]);
    }

    #[test]
    fn display() {
        assert_eq!(factorize(1250).unwrap().to_string(), "2 * 5^4");
        assert_eq!(factorize(1).unwrap().to_string(), "1");
    }
}
