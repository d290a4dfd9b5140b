//! LPS Cayley graphs on `PSL(2, q)` / `PGL(2, q)`.
//!
//! The `p + 1` solutions of `a0^2 + a1^2 + a2^2 + a3^2 = p` (with `a0 > 0`
//! odd, the rest even) become the matrices
//! `[[a0 + i a1, a2 + i a3], [-a2 + i a3, a0 - i a1]]` over `F_q`, where
//! `i^2 = -1`. Taken projectively they form an inverse-closed set of
//! determinant `p`, and the Cayley graph they generate is `(p + 1)`-regular.

use std::fmt;

use super::ConstructionError;
use crate::graph::RegularGraph;
use crate::numtheory::{four_squares, inv_mod, is_prime, legendre, sqrt_mod};

/// Vertex cap for the group enumeration.
pub const MAX_LPS_VERTICES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpsKind {
    /// `p` is a square mod `q`: Cayley graph on `PSL(2, q)`.
    NonBipartite,
    /// `p` is a non-square mod `q`: Cayley graph on `PGL(2, q)`.
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LpsParameters {
    p: u64,
    q: u64,
    kind: LpsKind,
}

impl LpsParameters {
    pub fn new(p: u64, q: u64) -> Result<Self, ConstructionError> {
        for x in [p, q] {
            if !is_prime(x) {
                return Err(ConstructionError::NotPrime(x));
            }
            if x % 4 != 1 {
                return Err(ConstructionError::NotOneModFour(x));
            }
        }
        if p == q {
            return Err(ConstructionError::SameModuli(p));
        }
        if (q as u128).pow(2) <= 4 * p as u128 {
            return Err(ConstructionError::NotSimple { p, q });
        }
        let kind = match legendre(p, q)? {
            1 => LpsKind::NonBipartite,
            _ => LpsKind::Bipartite,
        };
        Ok(Self { p, q, kind })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn kind(&self) -> LpsKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        (self.p + 1) as u32
    }

    /// `q(q^2 - 1)/2` for `PSL`, `q(q^2 - 1)` for `PGL`.
    pub fn vertex_count(&self) -> u64 {
        let pgl = self.q * (self.q * self.q - 1);
        match self.kind {
            LpsKind::NonBipartite => pgl / 2,
            LpsKind::Bipartite => pgl,
        }
    }
}

impl fmt::Display for LpsParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lps({},{})", self.p, self.q)
    }
}

type Mat = [u64; 4];

/// Arithmetic in `PGL(2, q)` on representatives whose first nonzero entry
/// (row-major) is 1.
struct Projective {
    q: u64,
    inverse: Vec<u64>,
}

impl Projective {
    fn new(q: u64) -> Self {
        let inverse = (0..q)
            .map(|x| if x == 0 { 0 } else { inv_mod(x, q).unwrap() })
            .collect();
        Self { q, inverse }
    }

    fn normalize(&self, m: Mat) -> Mat {
        let lead = m
            .iter()
            .copied()
            .find(|&x| x != 0)
            .expect("invertible matrix is nonzero");
        let s = self.inverse[lead as usize];
        m.map(|x| x * s % self.q)
    }

    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let q = self.q;
        self.normalize([
            (a[0] * b[0] + a[1] * b[2]) % q,
            (a[0] * b[1] + a[1] * b[3]) % q,
            (a[2] * b[0] + a[3] * b[2]) % q,
            (a[2] * b[1] + a[3] * b[3]) % q,
        ])
    }

    fn det(&self, m: &Mat) -> u64 {
        (m[0] * m[3] % self.q + self.q - m[1] * m[2] % self.q) % self.q
    }

    /// Dense key of a normalized representative.
    fn key(&self, m: &Mat) -> usize {
        let q = self.q as usize;
        if m[0] == 1 {
            (m[1] as usize * q + m[2] as usize) * q + m[3] as usize
        } else {
            q * q * q + m[2] as usize * q + m[3] as usize
        }
    }

    /// Normalized representatives in lexicographic order: `(0, 1, c, d)`
    /// first, then `(1, b, c, d)`.
    fn elements(&self) -> impl Iterator<Item = Mat> + '_ {
        let q = self.q;
        let leading_zero = (0..q).flat_map(move |c| (0..q).map(move |d| [0, 1, c, d]));
        let leading_one = (0..q).flat_map(move |b| (0..q).flat_map(move |c| (0..q).map(move |d| [1, b, c, d])));
        leading_zero.chain(leading_one).filter(move |m| self.det(m) != 0)
    }
}

/// Generator matrices (normalized), in the order of [`four_squares`].
fn generators(params: &LpsParameters, field: &Projective) -> Result<Vec<Mat>, ConstructionError> {
    let q = params.q as i64;
    let i = sqrt_mod(params.q - 1, params.q)? as i64;
    let red = |x: i64| x.rem_euclid(q) as u64;
    let mut gens = Vec::with_capacity(params.p as usize + 1);
    for [a0, a1, a2, a3] in four_squares(params.p)? {
        let m = [red(a0 + i * a1), red(a2 + i * a3), red(-a2 + i * a3), red(a0 - i * a1)];
        let m = field.normalize(m);
        if m == [1, 0, 0, 1] {
            return Err(ConstructionError::DegenerateGenerators(format!(
                "({a0},{a1},{a2},{a3}) maps to a scalar matrix"
            )));
        }
        if gens.contains(&m) {
            return Err(ConstructionError::DegenerateGenerators(format!(
                "({a0},{a1},{a2},{a3}) repeats a generator"
            )));
        }
        gens.push(m);
    }
    Ok(gens)
}

/// The `(p + 1)`-regular LPS Cayley graph `X^{p,q}`.
///
/// Vertices are the group elements in canonical label order; membership in
/// `PSL(2, q)` is decided by the quadratic-residue status of the
/// determinant of the normalized representative.
pub fn lps_graph(params: &LpsParameters) -> Result<RegularGraph, ConstructionError> {
    let n = params.vertex_count();
    if n > MAX_LPS_VERTICES {
        return Err(ConstructionError::TooManyVertices {
            n,
            cap: MAX_LPS_VERTICES,
        });
    }
    let q = params.q;
    let field = Projective::new(q);
    let is_square: Vec<bool> = (0..q).map(|x| legendre(x, q) == Ok(1)).collect();
    let keep = |m: &Mat| match params.kind {
        LpsKind::Bipartite => true,
        LpsKind::NonBipartite => is_square[field.det(m) as usize],
    };
    let elements: Vec<Mat> = field.elements().filter(keep).collect();
    assert_eq!(elements.len() as u64, n, "group order mismatch");

    let mut index = vec![u32::MAX; (q * q * q + q * q) as usize];
    for (idx, m) in elements.iter().enumerate() {
        index[field.key(m)] = idx as u32;
    }
    let gens = generators(params, &field)?;
    let rows = elements
        .iter()
        .map(|g| {
            let mut row: Vec<(u32, u32)> = gens
                .iter()
                .map(|s| {
                    let j = index[field.key(&field.mul(g, s))];
                    debug_assert_ne!(j, u32::MAX, "product left the group");
                    (j, 1)
                })
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    Ok(RegularGraph::from_sorted_rows(
        rows,
        params.degree(),
        params.to_string(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_bipartite, is_connected};

    #[test]
    fn parameter_checks() {
        assert!(matches!(
            LpsParameters::new(5, 12),
            Err(ConstructionError::NotPrime(12))
        ));
        assert!(matches!(
            LpsParameters::new(7, 13),
            Err(ConstructionError::NotOneModFour(7))
        ));
        assert!(matches!(
            LpsParameters::new(13, 13),
            Err(ConstructionError::SameModuli(13))
        ));
        assert!(matches!(
            LpsParameters::new(13, 5),
            Err(ConstructionError::NotSimple { .. })
        ));
        let a = LpsParameters::new(5, 13).unwrap();
        assert_eq!((a.kind(), a.vertex_count(), a.degree()), (LpsKind::Bipartite, 2184, 6));
        let b = LpsParameters::new(5, 17).unwrap();
        assert_eq!((b.kind(), b.vertex_count()), (LpsKind::Bipartite, 4896));
        let c = LpsParameters::new(13, 29).unwrap();
        assert_eq!((c.kind(), c.vertex_count()), (LpsKind::NonBipartite, 12180));
    }

    #[test]
    fn lps_5_13() {
        let params = LpsParameters::new(5, 13).unwrap();
        let g = lps_graph(&params).unwrap();
        assert_eq!((g.n(), g.k(), g.label()), (2184, 6, "lps(5,13)"));
        assert_eq!(g.edge_count(), 2184 * 3);
        assert!((0..g.n()).all(|u| g.row(u).all(|(v, m)| m == 1 && v != u)));
        assert!(is_connected(&g));
        assert!(is_bipartite(&g));
    }

    #[test]
    fn lps_non_bipartite() {
        let g = lps_graph(&LpsParameters::new(13, 17).unwrap()).unwrap();
        assert_eq!((g.n(), g.k()), (2448, 14));
        assert!(is_connected(&g));
        assert!(!is_bipartite(&g));
        let big = lps_graph(&LpsParameters::new(13, 29).unwrap()).unwrap();
        assert_eq!((big.n(), big.k()), (12180, 14));
        assert!(is_connected(&big) && !is_bipartite(&big));
    }

    #[test]
    fn deterministic_labels() {
        let params = LpsParameters::new(5, 13).unwrap();
        let field = Projective::new(13);
        let first: Vec<Mat> = field.elements().take(2).collect();
        assert_eq!(first, vec![[0, 1, 1, 0], [0, 1, 1, 1]]);
        let a = lps_graph(&params).unwrap();
        let b = lps_graph(&params).unwrap();
        assert_eq!(a.adjacency(), b.adjacency());
    }
}
