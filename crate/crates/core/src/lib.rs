//! Explicit construction and spectral certification of regular graph
//! families with large spectral gap.
//!
//! A base degree close to the target degree is chosen (an almost-prime, or
//! an LPS-admissible `p + 1`), a base expander is built, and the degree is
//! raised one step at a time by taking the Cartesian product with `K2`.
//! The second eigenvalue of the result is then measured and compared with
//! the Ramanujan bound, the claimed `4 sqrt(k-1) + k^(101/232)` bound and
//! the exact value predicted by the product-spectrum law.

pub mod cli;
pub mod config;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod numtheory;
pub mod pipeline;

pub use config::{RunConfig, SolverConfig};
pub use error::{Error, Result};
