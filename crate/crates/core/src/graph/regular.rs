use std::fmt;

use super::GraphError;

/// One reason an adjacency map fails to describe a regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices(usize),
    ZeroDegree,
    OutOfRange {
        row: usize,
        col: usize,
    },
    Loop {
        vertex: usize,
    },
    Asymmetric {
        u: usize,
        v: usize,
        forward: u32,
        backward: u32,
    },
    RowSum {
        vertex: usize,
        sum: u64,
        expected: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::TooFewVertices(n) => write!(f, "need at least 2 vertices, got {n}"),
            Violation::ZeroDegree => write!(f, "degree must be positive"),
            Violation::OutOfRange { row, col } => write!(f, "entry ({row}, {col}) out of range"),
            Violation::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Violation::Asymmetric {
                u,
                v,
                forward,
                backward,
            } => {
                write!(f, "A[{u}][{v}] = {forward} but A[{v}][{u}] = {backward}")
            }
            Violation::RowSum { vertex, sum, expected } => {
                write!(f, "row {vertex} sums to {sum}, expected {expected}")
            }
        }
    }
}

/// Symmetric edge-multiplicity matrix in compressed sparse rows.
///
/// Column indices are strictly increasing within a row and every stored
/// multiplicity is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Adjacency {
    offsets: Vec<usize>,
    cols: Vec<u32>,
    mults: Vec<u32>,
}

impl Adjacency {
    fn from_rows(rows: Vec<Vec<(u32, u32)>>) -> Self {
        let mut offsets = Vec::with_capacity(rows.len() + 1);
        let nnz = rows.iter().map(Vec::len).sum();
        let mut cols = Vec::with_capacity(nnz);
        let mut mults = Vec::with_capacity(nnz);
        offsets.push(0);
        for row in rows {
            for (c, m) in row {
                cols.push(c);
                mults.push(m);
            }
            offsets.push(cols.len());
        }
        Self { offsets, cols, mults }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// `(neighbor, multiplicity)` pairs of `u`, neighbors ascending.
    pub fn row(&self, u: usize) -> impl ExactSizeIterator<Item = (usize, u32)> + '_ {
        let r = self.offsets[u]..self.offsets[u + 1];
        self.cols[r.clone()]
            .iter()
            .zip(&self.mults[r])
            .map(|(&c, &m)| (c as usize, m))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        let r = self.offsets[u]..self.offsets[u + 1];
        match self.cols[r.clone()].binary_search(&(v as u32)) {
            Ok(i) => self.mults[r.start + i],
            Err(_) => 0,
        }
    }
}

/// A finite regular multigraph without loops.
#[derive(Debug, Clone)]
pub struct RegularGraph {
    k: u32,
    adjacency: Adjacency,
    label: String,
}

/// Check an adjacency map and wrap it as a `k`-regular graph.
///
/// `rows[u]` lists `(v, multiplicity)` entries; repeated entries add up and
/// zero multiplicities are dropped.
pub fn validate(rows: Vec<Vec<(usize, u32)>>, k: u32, label: impl Into<String>) -> Result<RegularGraph, GraphError> {
    let n = rows.len();
    let mut violations = Vec::new();
    if n < 2 {
        violations.push(Violation::TooFewVertices(n));
    }
    if k == 0 {
        violations.push(Violation::ZeroDegree);
    }
    let mut clean = Vec::with_capacity(n);
    for (u, mut row) in rows.into_iter().enumerate() {
        row.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(row.len());
        for (v, m) in row {
            if v >= n {
                violations.push(Violation::OutOfRange { row: u, col: v });
                continue;
            }
            if m == 0 {
                continue;
            }
            if v == u {
                violations.push(Violation::Loop { vertex: u });
            }
            match merged.last_mut() {
                Some((c, acc)) if *c as usize == v => *acc += m,
                _ => merged.push((v as u32, m)),
            }
        }
        let sum: u64 = merged.iter().map(|&(_, m)| u64::from(m)).sum();
        if sum != u64::from(k) {
            violations.push(Violation::RowSum {
                vertex: u,
                sum,
                expected: k,
            });
        }
        clean.push(merged);
    }
    let adjacency = Adjacency::from_rows(clean);
    for u in 0..adjacency.n() {
        for (v, m) in adjacency.row(u) {
            let back = adjacency.multiplicity(v, u);
            if back == 0 || (back != m && u < v) {
                violations.push(Violation::Asymmetric {
                    u,
                    v,
                    forward: m,
                    backward: back,
                });
            }
        }
    }
    if !violations.is_empty() {
        return Err(GraphError::Invalid(violations));
    }
    Ok(RegularGraph {
        k,
        adjacency,
        label: label.into(),
    })
}

impl RegularGraph {
    /// Graph from an undirected edge list; repeated edges add multiplicity.
    pub fn from_edges(
        n: usize,
        k: u32,
        edges: impl IntoIterator<Item = (usize, usize)>,
        label: impl Into<String>,
    ) -> Result<Self, GraphError> {
        let mut rows = vec![Vec::new(); n];
        let mut out_of_range = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                out_of_range.push(Violation::OutOfRange { row: u, col: v });
                continue;
            }
            rows[u].push((v, 1));
            if u != v {
                rows[v].push((u, 1));
            }
        }
        if !out_of_range.is_empty() {
            return Err(GraphError::Invalid(out_of_range));
        }
        validate(rows, k, label)
    }

    /// Graph from a dense 0/1/2/... matrix.
    pub fn from_dense(matrix: &[Vec<u32>], k: u32, label: impl Into<String>) -> Result<Self, GraphError> {
        let rows = matrix
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(v, &m)| (v, m))
                    .collect()
            })
            .collect();
        validate(rows, k, label)
    }

    /// Trusted constructor for builders whose output is regular by construction.
    pub(crate) fn from_sorted_rows(rows: Vec<Vec<(u32, u32)>>, k: u32, label: String) -> Self {
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(rows.iter().all(|r| r.iter().map(|&(_, m)| m).sum::<u32>() == k));
        Self {
            k,
            adjacency: Adjacency::from_rows(rows),
            label,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.n()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn row(&self, u: usize) -> impl ExactSizeIterator<Item = (usize, u32)> + '_ {
        self.adjacency.row(u)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adjacency.multiplicity(u, v)
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.n() * self.k as usize / 2
    }

    /// Every edge once as `(u, v)` with `u < v`, repeated per multiplicity,
    /// in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.row(u)
                .filter(move |&(v, _)| u < v)
                .flat_map(move |(v, m)| std::iter::repeat_n((u, v), m as usize))
        })
    }

    /// `y = A x`.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (u, out) in y.iter_mut().enumerate() {
            *out = self.row(u).map(|(v, m)| f64::from(m) * x[v]).sum();
        }
    }

    /// Row-major dense adjacency matrix.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for (v, m) in self.row(u) {
                a[u * n + v] = f64::from(m);
            }
        }
        a
    }
}
