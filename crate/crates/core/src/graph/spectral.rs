use super::{is_connected, spectrum_dense, top2_eigenvalues, GraphError, RegularGraph, SolverConfig, Spectrum};

/// `2 sqrt(k - 1)`.
pub fn ramanujan_bound(k: u32) -> f64 {
    2.0 * (f64::from(k) - 1.0).sqrt()
}

/// Dense spectrum when `n <= dense_threshold`, otherwise the top two by Lanczos.
pub fn spectrum(g: &RegularGraph, cfg: &SolverConfig) -> Result<Spectrum, GraphError> {
    if g.n() <= cfg.dense_threshold {
        spectrum_dense(g, cfg.tolerance)
    } else {
        top2_eigenvalues(g, cfg.tolerance, cfg.seed)
    }
}

fn connected_spectrum(g: &RegularGraph, cfg: &SolverConfig) -> Result<Spectrum, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    spectrum(g, cfg)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamanujanCheck {
    pub holds: bool,
    /// `2 sqrt(k - 1) - lambda_2`; negative when the bound fails.
    pub margin: f64,
    pub lambda2: f64,
}

pub fn ramanujan_check(g: &RegularGraph, cfg: &SolverConfig) -> Result<RamanujanCheck, GraphError> {
    let lambda2 = connected_spectrum(g, cfg)?.lambda2();
    let margin = ramanujan_bound(g.k()) - lambda2;
    Ok(RamanujanCheck {
        holds: margin >= -cfg.tolerance,
        margin,
        lambda2,
    })
}

/// `lambda_1 - lambda_2`.
pub fn spectral_gap(g: &RegularGraph, cfg: &SolverConfig) -> Result<f64, GraphError> {
    Ok(connected_spectrum(g, cfg)?.gap())
}

/// Compare two eigenvalue multisets by sorting both and matching entries.
pub fn multiset_matches(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}
