//! Regular multigraphs, the Cartesian product with `K2`, traversal facts
//! and adjacency spectra.

mod eigen;
mod io;
mod product;
mod regular;
mod spectral;
mod traverse;

pub use eigen::{
    lanczos_top2, spectrum_dense, symmetric_eigen, top2_eigenvalues, tridiagonal_eigenvalues, SolverConfig, Spectrum,
    SpectrumMethod, DEFAULT_DENSE_THRESHOLD, DEFAULT_SEED, DEFAULT_TOLERANCE,
};
pub use io::{format_spectrum, parse_graph, read_graph, write_graph, GraphFile};
pub use product::{augment_iterated, augment_with_k2, cartesian_product, peel_augmentation};
pub use regular::{validate, Adjacency, RegularGraph, Violation};
pub use spectral::{multiset_matches, ramanujan_bound, ramanujan_check, spectral_gap, spectrum, RamanujanCheck};
pub use traverse::{is_bipartite, is_connected};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid regular graph: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("graph of {requested} vertices exceeds the size budget of {budget}")]
    BudgetExceeded { requested: u128, budget: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not connected")]
    Disconnected,
    #[error("dense solver limited to {threshold} vertices, graph has {n}")]
    TooLargeForDense { n: usize, threshold: usize },
    #[error("{method} solver did not converge after {iterations} iterations (residual {residual:.3e}, last Ritz gap {ritz_gap:.3e})")]
    NotConverged {
        method: SpectrumMethod,
        iterations: usize,
        residual: f64,
        ritz_gap: f64,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
