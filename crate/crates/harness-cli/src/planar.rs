//! Desk-scale planarity: an edge-count prefilter plus brute-force search
//! for subdivisions of the two forbidden graphs. Adequate for the orders
//! the sweeps run at; not a production planarity algorithm.

use graph_core::{Graph, VertexSet};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    !has_k5_subdivision(g) && !has_k33_subdivision(g)
}

fn has_k5_subdivision(g: &Graph) -> bool {
    // Branch vertices of a K_5 subdivision have degree >= 4.
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    if candidates.len() < 5 {
        return false;
    }
    let mut chosen = Vec::with_capacity(5);
    choose_branches(g, &candidates, 0, 5, &mut chosen, &mut |g, branch| {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .map(|(i, j)| (branch[i], branch[j]))
            .collect();
        link_pairs(g, branch, &pairs)
    })
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    if candidates.len() < 6 {
        return false;
    }
    // Choose six branch vertices, then try every split into two sides.
    let mut chosen = Vec::with_capacity(6);
    choose_branches(g, &candidates, 0, 6, &mut chosen, &mut |g, branch| {
        let splits: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 1, 3],
            [0, 1, 4],
            [0, 1, 5],
            [0, 2, 3],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [0, 3, 5],
            [0, 4, 5],
        ];
        splits.iter().any(|left| {
            let right: Vec<usize> = (0..6).filter(|i| !left.contains(i)).collect();
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&i| right.iter().map(move |&j| (branch[i], branch[j])))
                .collect();
            link_pairs(g, branch, &pairs)
        })
    })
}

/// Enumerates size-`want` branch sets, calling `test` on each.
fn choose_branches(
    g: &Graph,
    candidates: &[usize],
    from: usize,
    want: usize,
    chosen: &mut Vec<usize>,
    test: &mut dyn FnMut(&Graph, &[usize]) -> bool,
) -> bool {
    if chosen.len() == want {
        return test(g, chosen);
    }
    for (i, &v) in candidates.iter().enumerate().skip(from) {
        chosen.push(v);
        if choose_branches(g, candidates, i + 1, want, chosen, test) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Packs internally-disjoint paths joining every listed pair, with interior
/// vertices drawn from outside the branch set.
fn link_pairs(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let branch_set: VertexSet = branch.iter().copied().collect();
    let free = g.vertices().minus(branch_set);
    pack(g, pairs, 0, free)
}

fn pack(g: &Graph, pairs: &[(usize, usize)], idx: usize, free: VertexSet) -> bool {
    if idx == pairs.len() {
        return true;
    }
    let (a, b) = pairs[idx];
    // Try every simple a..b path whose interior lies in `free`.
    path_search(g, a, b, free, VertexSet::EMPTY, pairs, idx)
}

fn path_search(
    g: &Graph,
    cur: usize,
    goal: usize,
    free: VertexSet,
    used: VertexSet,
    pairs: &[(usize, usize)],
    idx: usize,
) -> bool {
    if g.has_edge(cur, goal) && pack(g, pairs, idx + 1, free.minus(used)) {
        return true;
    }
    for next in g.neighbors(cur).intersect(free).minus(used).iter() {
        if path_search(g, next, goal, free, used.with(next), pairs, idx) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::builders::{complete, cycle, path, petersen, prism, star};
    use graph_core::Graph;

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    #[test]
    fn forbidden_graphs_are_nonplanar() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen()));
        assert!(!is_planar(&complete(6)));
    }

    #[test]
    fn small_standard_graphs_are_planar() {
        assert!(is_planar(&complete(4)));
        assert!(is_planar(&cycle(8)));
        assert!(is_planar(&path(9)));
        assert!(is_planar(&star(8)));
        assert!(is_planar(&prism()));
        // K_5 minus one edge is planar.
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                if (u, v) != (3, 4) {
                    edges.push((u, v));
                }
            }
        }
        assert!(is_planar(&Graph::from_edges(5, &edges).unwrap()));
    }

    #[test]
    fn subdivisions_are_detected() {
        // K_5 with edge (0,1) subdivided through vertex 5, and (2,3)
        // through 6: still nonplanar.
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                if (u, v) != (0, 1) && (u, v) != (2, 3) {
                    edges.push((u, v));
                }
            }
        }
        edges.extend([(0, 5), (5, 1), (2, 6), (6, 3)]);
        assert!(!is_planar(&Graph::from_edges(7, &edges).unwrap()));

        // Subdivided K_{3,3}.
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 0..3 {
                if (u, v) != (0, 0) {
                    edges.push((u, 3 + v));
                }
            }
        }
        edges.extend([(0, 6), (6, 3)]);
        assert!(!is_planar(&Graph::from_edges(7, &edges).unwrap()));
    }
}
