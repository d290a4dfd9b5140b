use super::{GraphError, RegularGraph};

fn check_budget(requested: u128, budget: usize) -> Result<usize, GraphError> {
    if requested > budget as u128 {
        return Err(GraphError::BudgetExceeded { requested, budget });
    }
    Ok(requested as usize)
}

/// Cartesian product `X □ Y`.
///
/// Vertex `(u, a)` has index `u * |Y| + a`, so the second factor varies
/// fastest. `(u, a) ~ (v, b)` with multiplicity `A_X(u, v) [a = b] + [u = v] A_Y(a, b)`.
pub fn cartesian_product(x: &RegularGraph, y: &RegularGraph, budget: usize) -> Result<RegularGraph, GraphError> {
    let (nx, ny) = (x.n(), y.n());
    let n = check_budget(nx as u128 * ny as u128, budget)?;
    if n > u32::MAX as usize {
        return Err(GraphError::BudgetExceeded {
            requested: n as u128,
            budget: u32::MAX as usize,
        });
    }
    let mut rows = Vec::with_capacity(n);
    for u in 0..nx {
        for a in 0..ny {
            let mut row: Vec<(u32, u32)> = x
                .row(u)
                .map(|(v, m)| ((v * ny + a) as u32, m))
                .chain(y.row(a).map(|(b, m)| ((u * ny + b) as u32, m)))
                .collect();
            row.sort_unstable();
            rows.push(row);
        }
    }
    let label = format!("product({},{})", x.label(), y.label());
    Ok(RegularGraph::from_sorted_rows(rows, x.k() + y.k(), label))
}

/// `X □ K2`: two copies of `X` with vertex `i` joined to its duplicate `i + n`.
///
/// This is `cartesian_product(K2, X)` exactly, and isomorphic to
/// `cartesian_product(X, K2)`.
pub fn augment_with_k2(x: &RegularGraph, budget: usize) -> Result<RegularGraph, GraphError> {
    augment_iterated(x, 1, budget)
}

/// Apply [`augment_with_k2`] `steps` times; `steps = 0` returns a clone of `x`.
pub fn augment_iterated(x: &RegularGraph, steps: u32, budget: usize) -> Result<RegularGraph, GraphError> {
    if steps == 0 {
        return Ok(x.clone());
    }
    let requested = (x.n() as u128)
        .checked_shl(steps)
        .filter(|&r| r >> steps == x.n() as u128);
    check_budget(requested.unwrap_or(u128::MAX), budget)?;
    let mut g = x.clone();
    for _ in 0..steps {
        g = double(&g);
    }
    let label = if steps == 1 {
        format!("{}+K2", x.label())
    } else {
        format!("{}+K2^{}", x.label(), steps)
    };
    Ok(g.with_label(label))
}

fn double(x: &RegularGraph) -> RegularGraph {
    let n = x.n();
    let mut rows: Vec<Vec<(u32, u32)>> = Vec::with_capacity(2 * n);
    for u in 0..n {
        let mut row: Vec<(u32, u32)> = x.row(u).map(|(v, m)| (v as u32, m)).collect();
        row.push(((u + n) as u32, 1));
        rows.push(row);
    }
    for u in 0..n {
        let mut row = Vec::with_capacity(x.row(u).len() + 1);
        row.push((u as u32, 1));
        row.extend(x.row(u).map(|(v, m)| ((v + n) as u32, m)));
        rows.push(row);
    }
    RegularGraph::from_sorted_rows(rows, x.k() + 1, x.label().to_string())
}

/// Inverse of [`augment_with_k2`]: if `g` is two identical halves joined
/// by a perfect matching and no other cross edges, return one half.
///
/// Both vertex layouts of a product with `K2` are recognized: halves
/// `0..n/2` and `n/2..n` matched `i ~ i + n/2` (`K2 □ X`, as built by
/// [`augment_with_k2`]), and interleaved pairs `2i ~ 2i + 1` (`X □ K2`).
pub fn peel_augmentation(g: &RegularGraph) -> Option<RegularGraph> {
    let n = g.n();
    if !n.is_multiple_of(2) || n < 4 || g.k() < 2 {
        return None;
    }
    let h = n / 2;
    peel_layout(g, |i| i, |i| i + h, |v| (v < h).then_some(v))
        .or_else(|| peel_layout(g, |i| 2 * i, |i| 2 * i + 1, |v| (v % 2 == 0).then_some(v / 2)))
}

/// `low(i)` and `high(i)` place copy `i` in each half; `index` maps a
/// vertex of the low half back to `i`.
fn peel_layout(
    g: &RegularGraph,
    low: impl Fn(usize) -> usize,
    high: impl Fn(usize) -> usize,
    index: impl Fn(usize) -> Option<usize>,
) -> Option<RegularGraph> {
    let h = g.n() / 2;
    let mut rows = Vec::with_capacity(h);
    for i in 0..h {
        let (u, w) = (low(i), high(i));
        if g.multiplicity(u, w) != 1 {
            return None;
        }
        let mut lower = Vec::new();
        for (v, m) in g.row(u).filter(|&(v, _)| v != w) {
            lower.push((index(v)? as u32, m));
        }
        lower.sort_unstable();
        let mut upper: Vec<(usize, u32)> = g.row(w).filter(|&(v, _)| v != u).collect();
        upper.sort_unstable();
        let mut expected: Vec<(usize, u32)> = lower.iter().map(|&(j, m)| (high(j as usize), m)).collect();
        expected.sort_unstable();
        if upper != expected {
            return None;
        }
        rows.push(lower);
    }
    Some(RegularGraph::from_sorted_rows(rows, g.k() - 1, peeled_label(g.label())))
}

fn peeled_label(label: &str) -> String {
    if let Some(inner) = label.strip_prefix("product(").and_then(|l| l.strip_suffix(')')) {
        if let Some(x) = inner.strip_suffix(",K2").or_else(|| inner.strip_prefix("K2,")) {
            return x.to_string();
        }
    }
    if let Some(base) = label.strip_suffix("+K2") {
        return base.to_string();
    }
    if let Some((base, exp)) = label.rsplit_once("+K2^") {
        match exp.parse::<u32>() {
            Ok(2) => return format!("{base}+K2"),
            Ok(s) if s > 2 => return format!("{base}+K2^{}", s - 1),
            _ => {}
        }
    }
    format!("{label}-K2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle_graph, hypercube};

    const BUDGET: usize = 1 << 20;

    #[test]
    fn k2_squared_is_c4() {
        let k2 = complete_graph(2).unwrap();
        let c4 = cartesian_product(&k2, &k2, BUDGET).unwrap();
        assert_eq!((c4.n(), c4.k()), (4, 2));
        // 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)
        let edges: Vec<_> = c4.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let aug = augment_with_k2(&k2, BUDGET).unwrap();
        assert_eq!(aug.adjacency(), c4.adjacency());
    }

    #[test]
    fn k4_with_k2() {
        let k4 = complete_graph(4).unwrap();
        let g = cartesian_product(&k4, &complete_graph(2).unwrap(), BUDGET).unwrap();
        assert_eq!((g.n(), g.k()), (8, 4));
        let aug = augment_with_k2(&k4, BUDGET).unwrap();
        assert_eq!((aug.n(), aug.k()), (8, 4));
        for i in 0..4 {
            assert_eq!(aug.multiplicity(i, i + 4), 1);
        }
    }

    #[test]
    fn c3_squared_matches_direct_construction() {
        let c3 = cycle_graph(3).unwrap();
        let g = cartesian_product(&c3, &c3, BUDGET).unwrap();
        assert_eq!((g.n(), g.k()), (9, 4));
        // direct: (u,a)~(v,b) iff same first coord and b = a±1, or same second and v = u±1
        for s in 0..9 {
            for t in 0..9 {
                let (u, a, v, b) = (s / 3, s % 3, t / 3, t % 3);
                let adjacent = (u == v && a != b) || (a == b && u != v);
                assert_eq!(g.multiplicity(s, t), u32::from(adjacent), "({s},{t})");
            }
        }
    }

    #[test]
    fn augment_is_k2_times_x() {
        let c5 = cycle_graph(5).unwrap();
        let k2 = complete_graph(2).unwrap();
        let prism = augment_with_k2(&c5, BUDGET).unwrap();
        assert_eq!(
            prism.adjacency(),
            cartesian_product(&k2, &c5, BUDGET).unwrap().adjacency()
        );
        assert_eq!((prism.n(), prism.k(), prism.edge_count()), (10, 3, 15));
        assert_eq!(prism.label(), "C5+K2");
    }

    #[test]
    fn iterated() {
        let k4 = complete_graph(4).unwrap();
        let same = augment_iterated(&k4, 0, BUDGET).unwrap();
        assert_eq!(same.adjacency(), k4.adjacency());
        let twice = augment_iterated(&k4, 2, BUDGET).unwrap();
        assert_eq!((twice.n(), twice.k()), (16, 5));
        let manual = augment_with_k2(&augment_with_k2(&k4, BUDGET).unwrap(), BUDGET).unwrap();
        assert_eq!(twice.adjacency(), manual.adjacency());
        assert_eq!(twice.label(), "K4+K2^2");
    }

    #[test]
    fn iterated_k2_is_q4() {
        let k2 = complete_graph(2).unwrap();
        let q4 = augment_iterated(&k2, 3, BUDGET).unwrap();
        assert_eq!(q4.adjacency(), hypercube(4).unwrap().adjacency());
    }

    #[test]
    fn budget() {
        let k4 = complete_graph(4).unwrap();
        assert!(matches!(
            augment_iterated(&k4, 3, 31),
            Err(GraphError::BudgetExceeded {
                requested: 32,
                budget: 31
            })
        ));
        assert!(augment_iterated(&k4, 200, BUDGET).is_err());
        assert!(cartesian_product(&k4, &k4, 15).is_err());
    }

    #[test]
    fn peel_round_trip() {
        let c5 = cycle_graph(5).unwrap();
        let g = augment_iterated(&c5, 3, BUDGET).unwrap();
        let mut peeled = g.clone();
        let mut count = 0;
        while let Some(base) = peel_augmentation(&peeled) {
            peeled = base;
            count += 1;
        }
        assert_eq!(count, 3);
        assert_eq!(peeled.adjacency(), c5.adjacency());
        assert_eq!(peeled.label(), "C5");
        assert!(peel_augmentation(&complete_graph(4).unwrap()).is_none());
        let k4 = complete_graph(4).unwrap();
        let interleaved = cartesian_product(&k4, &complete_graph(2).unwrap(), BUDGET).unwrap();
        let back = peel_augmentation(&interleaved).unwrap();
        assert_eq!(back.adjacency(), k4.adjacency());
        assert_eq!(back.label(), "K4");
        assert!(peel_augmentation(&cycle_graph(6).unwrap()).is_none());
    }
}
