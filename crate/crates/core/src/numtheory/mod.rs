//! Integer machinery: primality, factorization, almost-prime selection in
//! short intervals and the modular arithmetic used by the Cayley-graph
//! constructors.

mod almost;
mod factor;
mod modular;
mod primes;

pub use almost::{
    find_p2_at_or_below, is_p2, wu_scan, wu_witness, AlmostPrimeWitness, P2Selection, WuScan, WU_THETA, WU_THETA_DEN,
    WU_THETA_NUM,
};
pub use factor::{big_omega, divisor_count, factor, FactoredInteger};
pub use modular::{four_squares, inv_mod, legendre, mul_mod, pow_mod, sqrt_mod};
pub use primes::{is_prime, primes_up_to, small_primes};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    #[error("zero has no prime factorization")]
    Zero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not congruent to 1 mod 4")]
    NotOneModFour(u64),
    #[error("{a} is not a quadratic residue mod {p}")]
    NonResidue { a: u64, p: u64 },
    #[error("{a} is divisible by {p}; no canonical square root requested")]
    ZeroResidue { a: u64, p: u64 },
    #[error("{a} has no inverse mod {m}")]
    NotInvertible { a: u64, m: u64 },
    #[error("scan range invalid: {0}")]
    BadRange(String),
    #[error("stride must be positive")]
    ZeroStride,
}
