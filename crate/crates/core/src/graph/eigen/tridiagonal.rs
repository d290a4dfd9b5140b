//! Implicit QL iteration on a symmetric tridiagonal matrix.

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and
/// off-diagonal `off` (`off[i]` couples rows `i` and `i + 1`; `off.len()`
/// is `diag.len() - 1`, or equal with a trailing zero).
///
/// Every plane rotation `(i, c, s)` acting on columns `i, i + 1` of the
/// eigenvector matrix is passed to `rotate`, so callers can accumulate full
/// eigenvectors or a single row of them.
///
/// On return `diag` holds the (unsorted) eigenvalues and the total number
/// of QL iterations is returned. Fails with the index of the eigenvalue that
/// exceeded `max_iter` iterations.
pub(crate) fn ql_implicit(
    diag: &mut [f64],
    off: &[f64],
    max_iter: usize,
    mut rotate: impl FnMut(usize, f64, f64),
) -> Result<usize, usize> {
    let n = diag.len();
    let mut total = 0;
    if n == 0 {
        return Ok(0);
    }
    let d = diag;
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(&off[..n - 1]);
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                total += 1;
                if iter > max_iter {
                    return Err(l);
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    rotate(i, c, s);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(total)
}

/// Apply the QL rotation to eigenvector rows `i` and `i + 1` of `z`, stored
/// row-per-eigenvector with row length `len`.
pub(crate) fn rotate_rows(z: &mut [f64], len: usize, i: usize, c: f64, s: f64) {
    let (lo, hi) = z.split_at_mut((i + 1) * len);
    let zi = &mut lo[i * len..];
    let zj = &mut hi[..len];
    for (a, b) in zi.iter_mut().zip(zj.iter_mut()) {
        let h = *b;
        *b = s * *a + c * h;
        *a = c * *a - s * h;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_spectrum() {
        // adjacency of the path on 6 vertices: 2 cos(pi j / 7)
        let n = 6;
        let mut d = vec![0.0; n];
        ql_implicit(&mut d, &[1.0; 5], 60, |_, _, _| {}).unwrap();
        d.sort_by(|a, b| b.total_cmp(a));
        for (j, v) in d.iter().enumerate() {
            let exact = 2.0 * (std::f64::consts::PI * (j + 1) as f64 / 7.0).cos();
            assert!((v - exact).abs() < 1e-13, "{v} vs {exact}");
        }
    }

    #[test]
    fn vectors_diagonalize() {
        let diag = [4.0, 1.0, -2.0, 0.5];
        let off = [1.0, 0.3, 2.0];
        let n = 4;
        let mut z = vec![0.0; n * n];
        for i in 0..n {
            z[i * n + i] = 1.0;
        }
        let mut d = diag.to_vec();
        ql_implicit(&mut d, &off, 60, |i, c, s| rotate_rows(&mut z, n, i, c, s)).unwrap();
        for j in 0..n {
            let v = &z[j * n..(j + 1) * n];
            for r in 0..n {
                let mut tv = diag[r] * v[r];
                if r > 0 {
                    tv += off[r - 1] * v[r - 1];
                }
                if r + 1 < n {
                    tv += off[r] * v[r + 1];
                }
                assert!((tv - d[j] * v[r]).abs() < 1e-13);
            }
        }
    }
}
