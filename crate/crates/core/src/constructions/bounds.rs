use crate::numtheory::{divisor_count, WU_THETA};

/// `d(q + 1) sqrt(q)`: the second-eigenvalue bound for the `(q + 1)`-regular
/// quaternion (Brandt-matrix) family. Only the number is provided here.
pub fn pizer_bound(q: u64) -> f64 {
    let d = divisor_count(q + 1).expect("q + 1 is positive");
    d as f64 * (q as f64).sqrt()
}

/// [`pizer_bound`] re-indexed by graph degree: a `k`-regular member has
/// bound `d(k) sqrt(k - 1)`.
pub fn pizer_bound_for_degree(k: u64) -> f64 {
    pizer_bound(k - 1)
}

/// `4 sqrt(q - 1)`, the base-family bound used for a `q`-regular base.
pub fn theorem2_base_bound(q: u64) -> f64 {
    4.0 * (q as f64 - 1.0).sqrt()
}

/// `4 sqrt(k - 1) + k^(101/232)`.
pub fn paper_bound(k: u64) -> f64 {
    let k = k as f64;
    4.0 * (k - 1.0).sqrt() + k.powf(WU_THETA)
}

/// `log d(n) * log log n / log n`: the implied constant in
/// `d(n) <= n^(C / log log n)`. Diagnostic only.
pub fn divisor_bound_ratio(n: u64) -> f64 {
    let d = divisor_count(n).expect("n is positive") as f64;
    let ln = (n as f64).ln();
    d.ln() * ln.ln() / ln
}
