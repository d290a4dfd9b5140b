use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ConstructionError;
use crate::graph::RegularGraph;
use crate::numtheory::{is_prime, legendre};

fn at_least(what: &'static str, value: usize, min: usize) -> Result<(), ConstructionError> {
    if value < min {
        return Err(ConstructionError::TooSmall {
            what,
            value: value as u64,
            min: min as u64,
        });
    }
    Ok(())
}

fn rows_to_graph(rows: Vec<Vec<u32>>, k: u32, label: String) -> RegularGraph {
    let rows = rows
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r.into_iter().map(|v| (v, 1)).collect()
        })
        .collect();
    RegularGraph::from_sorted_rows(rows, k, label)
}

pub fn complete_graph(m: usize) -> Result<RegularGraph, ConstructionError> {
    at_least("complete graph order", m, 2)?;
    let rows = (0..m)
        .map(|u| (0..m as u32).filter(|&v| v as usize != u).collect())
        .collect();
    Ok(rows_to_graph(rows, (m - 1) as u32, format!("K{m}")))
}

pub fn cycle_graph(m: usize) -> Result<RegularGraph, ConstructionError> {
    at_least("cycle length", m, 3)?;
    let rows = (0..m)
        .map(|u| vec![((u + m - 1) % m) as u32, ((u + 1) % m) as u32])
        .collect();
    Ok(rows_to_graph(rows, 2, format!("C{m}")))
}

/// `x ~ y` iff `x - y` is a nonzero square mod the prime `q = 1 (mod 4)`.
pub fn paley_graph(q: u64) -> Result<RegularGraph, ConstructionError> {
    if !is_prime(q) {
        return Err(ConstructionError::NotPrime(q));
    }
    if q % 4 != 1 {
        return Err(ConstructionError::NotOneModFour(q));
    }
    let residues: Vec<u64> = (1..q).filter(|&r| legendre(r, q) == Ok(1)).collect();
    let rows = (0..q)
        .map(|x| residues.iter().map(|r| ((x + r) % q) as u32).collect())
        .collect();
    Ok(rows_to_graph(rows, ((q - 1) / 2) as u32, format!("paley({q})")))
}

/// The `d`-cube on binary labels: `i ~ j` iff they differ in one bit.
pub fn hypercube(d: u32) -> Result<RegularGraph, ConstructionError> {
    at_least("hypercube dimension", d as usize, 1)?;
    if d > 24 {
        return Err(ConstructionError::TooManyVertices {
            n: 1 << d,
            cap: 1 << 24,
        });
    }
    let n = 1u32 << d;
    let rows = (0..n).map(|i| (0..d).map(|b| i ^ (1 << b)).collect()).collect();
    Ok(rows_to_graph(rows, d, format!("Q{d}")))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn petersen_graph() -> RegularGraph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    RegularGraph::from_edges(10, 3, edges, "petersen").expect("Petersen graph is 3-regular")
}

/// Random `k`-regular multigraph without loops: a uniform pairing of
/// `n * k` half-edges, with loops repaired by random switches.
pub fn random_regular(n: usize, k: u32, seed: u64) -> Result<RegularGraph, ConstructionError> {
    at_least("random graph order", n, 3)?;
    at_least("random graph degree", k as usize, 1)?;
    if !(n * k as usize).is_multiple_of(2) {
        return Err(ConstructionError::OddDegreeSum { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|u| std::iter::repeat_n(u, k as usize)).collect();
    stubs.shuffle(&mut rng);
    let mut pairs: Vec<(usize, usize)> = stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    while let Some(i) = pairs.iter().position(|&(a, b)| a == b) {
        let u = pairs[i].0;
        let j = rng.gen_range(0..pairs.len());
        let (x, y) = pairs[j];
        if x == u || y == u {
            continue;
        }
        pairs[i] = (u, x);
        pairs[j] = (u, y);
    }
    let label = format!("random({n},{k},{seed})");
    Ok(RegularGraph::from_edges(n, k, pairs, label)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_bipartite, is_connected};

    #[test]
    fn small_families() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!((k4.n(), k4.k(), k4.label()), (4, 3, "K4"));
        let k2 = complete_graph(2).unwrap();
        assert_eq!((k2.n(), k2.k()), (2, 1));
        assert!(complete_graph(1).is_err());
        let c5 = cycle_graph(5).unwrap();
        assert_eq!((c5.n(), c5.k(), c5.edge_count()), (5, 2, 5));
        assert!(cycle_graph(2).is_err());
        let p = petersen_graph();
        assert_eq!((p.n(), p.k(), p.edge_count()), (10, 3, 15));
        let q3 = hypercube(3).unwrap();
        assert!(is_bipartite(&q3) && is_connected(&q3));
    }

    #[test]
    fn paley_five_is_c5() {
        let p5 = paley_graph(5).unwrap();
        assert_eq!(p5.adjacency(), cycle_graph(5).unwrap().adjacency());
        assert_eq!(paley_graph(13).unwrap().k(), 6);
        assert!(matches!(paley_graph(7), Err(ConstructionError::NotOneModFour(7))));
        assert!(matches!(paley_graph(21), Err(ConstructionError::NotPrime(21))));
    }

    #[test]
    fn random_graphs_are_regular_and_seeded() {
        for seed in 0..50 {
            let g = random_regular(10 + 2 * (seed as usize % 10), 3 + (seed % 3) as u32 * 2, seed).unwrap();
            assert!((0..g.n()).all(|u| g.multiplicity(u, u) == 0));
        }
        let a = random_regular(20, 4, 7).unwrap();
        let b = random_regular(20, 4, 7).unwrap();
        assert_eq!(a.adjacency(), b.adjacency());
        assert!(random_regular(5, 3, 0).is_err());
    }
}
