//! Constructors for the standard small families used throughout the tests
//! and the harness.

use crate::graph::Graph;

/// Path on `n` vertices, edges i -- i+1.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("valid cycle")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("valid clique")
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1);
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges).expect("valid star")
}

/// Two disjoint k-cliques `{0..k-1}` and `{k..2k-1}` joined by the single
/// bridge edge (k-1, k).
pub fn double_clique(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
            edges.push((k + u, k + v));
        }
    }
    edges.push((k - 1, k));
    Graph::from_edges(2 * k, &edges).expect("valid double clique")
}

/// K_k on `{0..k-1}` with the pendant vertex `k` attached to vertex 0.
pub fn clique_plus_pendant(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    edges.push((0, k));
    Graph::from_edges(k + 1, &edges).expect("valid pendant clique")
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
    edges.extend((0..5).map(|i| (i, i + 5)));
    Graph::from_edges(10, &edges).expect("valid petersen")
}

/// Triangular prism: triangles {0,1,2} and {3,4,5} plus a perfect matching.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("valid prism")
}
