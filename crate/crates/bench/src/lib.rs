//! Shared inputs for the criterion benchmarks.

/// Values with several split prime factors.
pub const SMOOTH: [u64; 4] = [5 * 13 * 17 * 29, 1250, 5u64.pow(8), 2 * 5 * 13 * 17 * 29 * 37];

/// Semiprimes whose factors lie past the trial-division limit.
pub const HARD_SEMIPRIMES: [u64; 2] = [1_000_003 * 1_000_033, 4_294_967_291 * 4_294_967_279];

/// Primes ≡ 1 (mod 4) of increasing size.
pub const SPLIT_PRIMES: [u64; 3] = [41, 999_961, 18_446_744_073_709_551_557];
