use thiserror::Error;

/// Errors raised by the number-theoretic and spectral operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input is wider than 64 bits and no factorization accompanies it.
    #[error("{0} does not fit in 64 bits")]
    UnsupportedWidth(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The operation is undefined for this input.
    #[error("{0}")]
    Domain(String),

    /// A scan would need more steps than the configured budget allows.
    #[error("operation needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    /// Pollard rho gave up on a cofactor; `partial` lists what was found.
    #[error("could not split {cofactor} while factoring {n} (found so far: {partial:?})")]
    FactorizationStalled { n: u64, partial: Vec<(u64, u32)>, cofactor: u64 },

    /// A constructed eigenvalue did not have the multiplicity it was built for.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
