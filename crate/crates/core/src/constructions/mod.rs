//! Explicit base graph families and the eigenvalue-bound formulas that go
//! with them.

mod basic;
mod bounds;
mod lps;

pub use basic::{complete_graph, cycle_graph, hypercube, paley_graph, petersen_graph, random_regular};
pub use bounds::{divisor_bound_ratio, paper_bound, pizer_bound, pizer_bound_for_degree, theorem2_base_bound};
pub use lps::{lps_graph, LpsKind, LpsParameters, MAX_LPS_VERTICES};

use thiserror::Error;

use crate::graph::GraphError;
use crate::numtheory::NumberError;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("{what} must be at least {min}, got {value}")]
    TooSmall { what: &'static str, value: u64, min: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 1 mod 4")]
    NotOneModFour(u64),
    #[error("LPS moduli must differ, got p = q = {0}")]
    SameModuli(u64),
    #[error("q = {q} must exceed 2 sqrt(p) = {:.3} for a simple Cayley graph", 2.0 * (*.p as f64).sqrt())]
    NotSimple { p: u64, q: u64 },
    #[error("{n} vertices exceeds the construction cap of {cap}")]
    TooManyVertices { n: u64, cap: u64 },
    #[error("n * k = {n} * {k} must be even for a regular graph")]
    OddDegreeSum { n: usize, k: u32 },
    #[error("generator set degenerate: {0}")]
    DegenerateGenerators(String),
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
