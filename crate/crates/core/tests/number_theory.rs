use laplace2sq_core::number_theory::{classify_prime, factorize, is_prime, primes_one_mod_four, PrimeClass};
use num_bigint::BigUint;
use proptest::prelude::*;

fn trial_division_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[test]
fn factorization_reconstructs_up_to_a_million() {
    for n in 1..=1_000_000u64 {
        let f = factorize(n).unwrap();
        assert_eq!(f.reconstruct(), BigUint::from(n), "n = {n}");
        assert_eq!(f.n(), &BigUint::from(n));
        for seq in [f.p_factors(), f.q_factors()] {
            assert!(seq.windows(2).all(|w| w[0].0 < w[1].0), "n = {n}");
            assert!(seq.iter().all(|&(p, e)| e >= 1 && is_prime(p)), "n = {n}");
        }
        assert!(f.p_factors().iter().all(|&(p, _)| p % 4 == 1));
        assert!(f.q_factors().iter().all(|&(q, _)| q % 4 == 3));
    }
}

#[test]
fn primality_matches_trial_division_up_to_a_million() {
    for n in 0..=1_000_000u64 {
        assert_eq!(is_prime(n), trial_division_is_prime(n), "n = {n}");
    }
}

#[test]
fn odd_primes_are_one_or_three_mod_four() {
    for p in (3..=1_000_000u64).step_by(2).filter(|&p| is_prime(p)) {
        let class = classify_prime(p).unwrap();
        assert!(matches!(class, PrimeClass::OneModFour | PrimeClass::ThreeModFour));
        assert_eq!(class == PrimeClass::OneModFour, p % 4 == 1);
    }
}

proptest! {
    #[test]
    fn primes_one_mod_four_skip_nothing(count in 1usize..40, min in 0u64..100_000) {
        let ps = primes_one_mod_four(count, min);
        prop_assert_eq!(ps.len(), count);
        prop_assert!(ps.iter().all(|&p| is_prime(p) && p % 4 == 1 && p >= min));
        prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
        let (lo, hi) = (min, *ps.last().unwrap());
        let expected: Vec<u64> = (lo..=hi).filter(|&p| p % 4 == 1 && trial_division_is_prime(p)).collect();
        prop_assert_eq!(ps, expected);
    }

    #[test]
    fn factorization_of_random_u64_reconstructs(n in 1u64..) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.reconstruct(), BigUint::from(n));
        prop_assert!(f.prime_powers().iter().all(|&(p, _)| is_prime(p)));
    }
}
