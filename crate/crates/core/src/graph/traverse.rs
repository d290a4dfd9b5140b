use std::collections::VecDeque;

use super::RegularGraph;

/// Breadth-first 2-colouring; returns the number of components and whether
/// every component is bipartite.
fn bfs_facts(g: &RegularGraph) -> (usize, bool) {
    let n = g.n();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut components = 0;
    let mut bipartite = true;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        components += 1;
        colour[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for (v, _) in g.row(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
    }
    (components, bipartite)
}

pub fn is_connected(g: &RegularGraph) -> bool {
    bfs_facts(g).0 == 1
}

pub fn is_bipartite(g: &RegularGraph) -> bool {
    bfs_facts(g).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle_graph};

    #[test]
    fn cycles_and_complete() {
        let c6 = cycle_graph(6).unwrap();
        assert!(is_connected(&c6) && is_bipartite(&c6));
        let c5 = cycle_graph(5).unwrap();
        assert!(is_connected(&c5) && !is_bipartite(&c5));
        let k4 = complete_graph(4).unwrap();
        assert!(is_connected(&k4) && !is_bipartite(&k4));
    }

    #[test]
    fn two_disjoint_k4() {
        let edges = (0..8)
            .flat_map(|u| ((u + 1)..8).map(move |v| (u, v)))
            .filter(|&(u, v)| u / 4 == v / 4);
        let g = RegularGraph::from_edges(8, 3, edges, "2K4").unwrap();
        assert!(!is_connected(&g));
        assert!(!is_bipartite(&g));
    }
}
