//! Householder reduction of a dense symmetric matrix to tridiagonal form.

/// Reduce the symmetric `n x n` matrix in `w` (row-major) to tridiagonal
/// form `Q^T A Q`.
///
/// On return `w` holds `Q^T` (row `j` is column `j` of `Q`), and the result
/// is `(diag, off)` with `off[i]` coupling rows `i` and `i + 1`.
pub(crate) fn tridiagonalize(w: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    // w[c * n + r] plays the role of V[r][c]: the reduction walks columns of
    // V, which are contiguous rows here.
    let at = |r: usize, c: usize| c * n + r;
    let mut d: Vec<f64> = (0..n).map(|j| w[at(n - 1, j)]).collect();
    let mut e = vec![0.0; n];

    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = w[at(i - 1, j)];
                w[at(i, j)] = 0.0;
                w[at(j, i)] = 0.0;
            }
        } else {
            for dk in &mut d[..i] {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].fill(0.0);

            for j in 0..i {
                f = d[j];
                w[at(j, i)] = f;
                let col = &w[j * n..j * n + i];
                let mut g = e[j] + col[j] * f;
                for k in (j + 1)..i {
                    g += col[k] * d[k];
                    e[k] += col[k] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let (f, g) = (d[j], e[j]);
                let col = &mut w[j * n..j * n + i];
                for k in j..i {
                    col[k] -= f * e[k] + g * d[k];
                }
                d[j] = w[at(i - 1, j)];
                w[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate the transformations
    for i in 0..n.saturating_sub(1) {
        w[at(n - 1, i)] = w[at(i, i)];
        w[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            let (head, tail) = w.split_at_mut((i + 1) * n);
            let v = &tail[..=i];
            for k in 0..=i {
                d[k] = v[k] / h;
            }
            for j in 0..=i {
                let col = &mut head[j * n..j * n + i + 1];
                let g: f64 = v.iter().zip(col.iter()).map(|(a, b)| a * b).sum();
                for (ck, dk) in col.iter_mut().zip(&d[..=i]) {
                    *ck -= g * dk;
                }
            }
        }
        w[(i + 1) * n..(i + 1) * n + i + 1].fill(0.0);
    }
    for j in 0..n {
        d[j] = w[at(n - 1, j)];
        w[at(n - 1, j)] = 0.0;
    }
    if n > 0 {
        w[at(n - 1, n - 1)] = 1.0;
    }
    let off = e[1..].to_vec();
    (d, off)
}
