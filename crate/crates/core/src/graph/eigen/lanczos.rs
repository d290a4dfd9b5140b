use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tridiagonal::{ql_implicit, rotate_rows};
use super::{GraphError, RegularGraph, Spectrum, SpectrumMethod, QL_MAX_ITER};

/// Convergence is tested every this many Lanczos steps.
const CHECK_EVERY: usize = 4;

/// Keeps the stored Krylov basis below roughly 320 MB.
const BASIS_BUDGET: usize = 40_000_000;

pub(crate) fn default_max_iter(n: usize) -> usize {
    n.min(1000).min((BASIS_BUDGET / n.max(1)).max(64))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

/// Two classical Gram-Schmidt passes against the whole basis.
fn reorthogonalize(w: &mut [f64], basis: &[Vec<f64>]) {
    for _ in 0..2 {
        for q in basis {
            let c = dot(w, q);
            axpy(-c, q, w);
        }
    }
}

fn random_unit(n: usize, rng: &mut ChaCha8Rng, basis: &[Vec<f64>]) -> Vec<f64> {
    loop {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        reorthogonalize(&mut v, basis);
        if normalize(&mut v) > 1e-8 {
            return v;
        }
    }
}

/// Top two Ritz pairs of the current tridiagonal matrix: values and the
/// residual bounds `beta * |last component|`.
fn ritz_top2(alpha: &[f64], beta: &[f64], beta_next: f64) -> Option<([f64; 2], [f64; 2])> {
    let m = alpha.len();
    if m < 2 {
        return None;
    }
    let mut d = alpha.to_vec();
    let mut last = vec![0.0; m];
    last[m - 1] = 1.0;
    ql_implicit(&mut d, beta, QL_MAX_ITER, |i, c, s| {
        let h = last[i + 1];
        last[i + 1] = s * last[i] + c * h;
        last[i] = c * last[i] - s * h;
    })
    .ok()?;
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| d[j].total_cmp(&d[i]));
    let (a, b) = (order[0], order[1]);
    Some(([d[a], d[b]], [beta_next * last[a].abs(), beta_next * last[b].abs()]))
}

/// Lanczos with full reorthogonalization for the two largest eigenvalues.
pub fn lanczos_top2(g: &RegularGraph, tolerance: f64, seed: u64, max_iter: usize) -> Result<Spectrum, GraphError> {
    let n = g.n();
    let k = f64::from(g.k());
    let target = tolerance * k;
    let max_iter = max_iter.min(n).max(2.min(n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(max_iter);
    let mut alpha: Vec<f64> = Vec::with_capacity(max_iter);
    let mut beta: Vec<f64> = Vec::with_capacity(max_iter);
    let mut v = random_unit(n, &mut rng, &basis);
    let mut w = vec![0.0; n];
    let mut previous = f64::NAN;
    let mut ritz_gap = f64::NAN;
    let mut last_bound = f64::INFINITY;

    for step in 0..max_iter {
        g.apply(&v, &mut w);
        let a = dot(&w, &v);
        axpy(-a, &v, &mut w);
        if let (Some(prev), Some(&b)) = (basis.last(), beta.last()) {
            axpy(-b, prev, &mut w);
        }
        basis.push(v);
        alpha.push(a);
        reorthogonalize(&mut w, &basis);
        let b = dot(&w, &w).sqrt();

        let exhausted = step + 1 == max_iter;
        let breakdown = b <= 1e-12 * k.max(1.0);
        if breakdown || exhausted || (step + 1) % CHECK_EVERY == 0 {
            if let Some((values, bounds)) = ritz_top2(&alpha, &beta, b) {
                ritz_gap = (values[1] - previous).abs();
                previous = values[1];
                last_bound = bounds[0].max(bounds[1]);
                // after a breakdown the Krylov space is invariant and the Ritz values exact
                if last_bound <= target || breakdown {
                    return finish(g, &basis, &alpha, &beta, tolerance);
                }
            }
        }
        if exhausted {
            break;
        }
        if breakdown {
            v = random_unit(n, &mut rng, &basis);
            beta.push(0.0);
        } else {
            w.iter_mut().for_each(|x| *x /= b);
            v = std::mem::replace(&mut w, vec![0.0; n]);
            beta.push(b);
        }
    }
    Err(GraphError::NotConverged {
        method: SpectrumMethod::IterativeTop2,
        iterations: basis.len(),
        residual: last_bound,
        ritz_gap,
    })
}

/// Ritz vectors for the top two values and their true residuals.
fn finish(
    g: &RegularGraph,
    basis: &[Vec<f64>],
    alpha: &[f64],
    beta: &[f64],
    tolerance: f64,
) -> Result<Spectrum, GraphError> {
    let m = alpha.len();
    let n = g.n();
    let mut d = alpha.to_vec();
    let mut z = vec![0.0; m * m];
    for i in 0..m {
        z[i * m + i] = 1.0;
    }
    ql_implicit(&mut d, beta, QL_MAX_ITER, |i, c, s| rotate_rows(&mut z, m, i, c, s)).map_err(|_| {
        GraphError::NotConverged {
            method: SpectrumMethod::IterativeTop2,
            iterations: m,
            residual: f64::NAN,
            ritz_gap: f64::NAN,
        }
    })?;
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| d[j].total_cmp(&d[i]));
    let mut residual: f64 = 0.0;
    let mut values = Vec::with_capacity(2);
    let mut scratch = vec![0.0; n];
    for &j in &order[..2] {
        let coeffs = &z[j * m..(j + 1) * m];
        let mut y = vec![0.0; n];
        for (q, &c) in basis.iter().zip(coeffs) {
            axpy(c, q, &mut y);
        }
        normalize(&mut y);
        g.apply(&y, &mut scratch);
        let r = scratch
            .iter()
            .zip(&y)
            .map(|(ay, yi)| (ay - d[j] * yi).powi(2))
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
        values.push(d[j]);
    }
    Ok(Spectrum {
        values,
        method: SpectrumMethod::IterativeTop2,
        residual,
        tolerance,
        iterations: m,
    })
}
