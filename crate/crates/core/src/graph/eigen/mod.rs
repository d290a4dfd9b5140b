//! Adjacency spectra: a dense Householder + implicit QL solver for the
//! full spectrum and a Lanczos iteration for the two largest eigenvalues.

mod householder;
mod lanczos;
mod tridiagonal;

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_connected, GraphError, RegularGraph};

pub use lanczos::lanczos_top2;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_DENSE_THRESHOLD: usize = 4096;
pub const DEFAULT_SEED: u64 = 0xDA7A;

/// QL sweeps allowed per eigenvalue before giving up.
const QL_MAX_ITER: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumMethod {
    Dense,
    IterativeTop2,
}

impl fmt::Display for SpectrumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumMethod::Dense => "dense",
            SpectrumMethod::IterativeTop2 => "iterative-top2",
        })
    }
}

/// Solver knobs shared by everything that measures eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Residuals must satisfy `||Av - lambda v|| <= tolerance * k`.
    pub tolerance: f64,
    /// Largest vertex count handed to the dense solver.
    pub dense_threshold: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            dense_threshold: DEFAULT_DENSE_THRESHOLD,
            seed: DEFAULT_SEED,
        }
    }
}

/// Adjacency eigenvalues, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// All `n` eigenvalues for the dense method, the top two otherwise.
    pub values: Vec<f64>,
    pub method: SpectrumMethod,
    /// Largest residual norm over the returned eigenpairs.
    pub residual: f64,
    pub tolerance: f64,
    /// QL sweeps (dense) or Lanczos steps (iterative).
    pub iterations: usize,
}

impl Spectrum {
    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda2(&self) -> f64 {
        self.values[1]
    }

    pub fn gap(&self) -> f64 {
        self.lambda1() - self.lambda2()
    }
}

/// Eigen-decomposition of a dense symmetric matrix (row-major, `n x n`).
///
/// Returns eigenvalues in descending order and the matching unit
/// eigenvectors, one per row of the second vector.
pub fn symmetric_eigen(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<f64>, usize), GraphError> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let (mut d, off) = householder::tridiagonalize(&mut a, n);
    let sweeps = tridiagonal::ql_implicit(&mut d, &off, QL_MAX_ITER, |i, c, s| {
        tridiagonal::rotate_rows(&mut a, n, i, c, s);
    })
    .map_err(|_| GraphError::NotConverged {
        method: SpectrumMethod::Dense,
        iterations: QL_MAX_ITER,
        residual: f64::NAN,
        ritz_gap: f64::NAN,
    })?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].total_cmp(&d[i]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| d[i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (dst, &src) in order.iter().enumerate() {
        vectors[dst * n..(dst + 1) * n].copy_from_slice(&a[src * n..(src + 1) * n]);
    }
    Ok((values, vectors, sweeps))
}

/// Eigenvalues of a symmetric tridiagonal matrix, descending.
pub fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let mut d = diag.to_vec();
    tridiagonal::ql_implicit(&mut d, off, QL_MAX_ITER, |_, _, _| {}).expect("tridiagonal QL converges");
    d.sort_by(|a, b| b.total_cmp(a));
    d
}

fn residual_norm(g: &RegularGraph, lambda: f64, v: &[f64], scratch: &mut [f64]) -> f64 {
    g.apply(v, scratch);
    scratch
        .iter()
        .zip(v)
        .map(|(av, vi)| (av - lambda * vi).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Full adjacency spectrum by Householder tridiagonalization and implicit
/// QL, with every eigenpair's residual checked against `tolerance * k`.
pub fn spectrum_dense(g: &RegularGraph, tolerance: f64) -> Result<Spectrum, GraphError> {
    let n = g.n();
    let (values, vectors, sweeps) = symmetric_eigen(g.to_dense(), n)?;
    let mut scratch = vec![0.0; n];
    let residual = values
        .iter()
        .enumerate()
        .map(|(j, &l)| residual_norm(g, l, &vectors[j * n..(j + 1) * n], &mut scratch))
        .fold(0.0, f64::max);
    if residual > tolerance * f64::from(g.k()) {
        return Err(GraphError::NotConverged {
            method: SpectrumMethod::Dense,
            iterations: sweeps,
            residual,
            ritz_gap: f64::NAN,
        });
    }
    Ok(Spectrum {
        values,
        method: SpectrumMethod::Dense,
        residual,
        tolerance,
        iterations: sweeps,
    })
}

/// `lambda_1` and `lambda_2` of a connected graph by Lanczos with full
/// reorthogonalization from a seeded random start.
pub fn top2_eigenvalues(g: &RegularGraph, tolerance: f64, seed: u64) -> Result<Spectrum, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    lanczos_top2(g, tolerance, seed, lanczos::default_max_iter(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle_graph, petersen_graph};

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn dense_reference_spectra() {
        let k4 = spectrum_dense(&complete_graph(4).unwrap(), 1e-10).unwrap();
        assert_close(&k4.values, &[3.0, -1.0, -1.0, -1.0], 1e-12);
        assert_eq!(k4.method, SpectrumMethod::Dense);
        let c6 = spectrum_dense(&cycle_graph(6).unwrap(), 1e-10).unwrap();
        assert_close(&c6.values, &[2.0, 1.0, 1.0, -1.0, -1.0, -2.0], 1e-12);
        let pet = spectrum_dense(&petersen_graph(), 1e-10).unwrap();
        let mut want = vec![3.0];
        want.extend([1.0; 5]);
        want.extend([-2.0; 4]);
        assert_close(&pet.values, &want, 1e-12);
        assert!(pet.residual <= 3e-10);
    }

    #[test]
    fn smallest_graphs() {
        let k2 = spectrum_dense(&complete_graph(2).unwrap(), 1e-10).unwrap();
        assert_close(&k2.values, &[1.0, -1.0], 1e-14);
        let top = top2_eigenvalues(&complete_graph(2).unwrap(), 1e-10, 1).unwrap();
        assert_close(&top.values, &[1.0, -1.0], 1e-12);
    }

    #[test]
    fn top2_reference() {
        let k4 = top2_eigenvalues(&complete_graph(4).unwrap(), 1e-10, DEFAULT_SEED).unwrap();
        assert_close(&k4.values, &[3.0, -1.0], 1e-10);
        assert_eq!(k4.method, SpectrumMethod::IterativeTop2);
        let c100 = top2_eigenvalues(&cycle_graph(100).unwrap(), 1e-10, DEFAULT_SEED).unwrap();
        let l2 = 2.0 * (2.0 * std::f64::consts::PI / 100.0).cos();
        assert_close(&c100.values, &[2.0, l2], 1e-10);
        assert!((l2 - 1.996_053).abs() < 1e-6);
    }

    #[test]
    fn top2_rejects_disconnected() {
        let edges = (0..8)
            .flat_map(|u| ((u + 1)..8).map(move |v| (u, v)))
            .filter(|&(u, v)| u / 4 == v / 4);
        let g = RegularGraph::from_edges(8, 3, edges, "2K4").unwrap();
        assert!(matches!(top2_eigenvalues(&g, 1e-10, 1), Err(GraphError::Disconnected)));
    }

    #[test]
    fn tridiagonal_helper() {
        let v = tridiagonal_eigenvalues(&[0.0, 0.0], &[1.0]);
        assert_close(&v, &[1.0, -1.0], 1e-15);
    }
}
