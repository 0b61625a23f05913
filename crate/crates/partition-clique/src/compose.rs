//! Gluing colorings of a vertex split back together.
//!
//! The union of a coloring of G[S] and one of G - S stays valid as long as,
//! for every class D of the S side, each component of G[S] - N[D] sends at
//! most k - 2 edges across the split: a surviving k-clique would need a
//! vertex on each side, and the side condition leaves too few cross edges
//! for one. This module checks the condition instead of assuming it.

use graph_core::{Graph, VertexSet};
use isolation_verify::Coloring;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error("both sides must use k + 1 = {expected} classes (got {s_classes} and {rest_classes})")]
    WrongClassCount {
        expected: usize,
        s_classes: usize,
        rest_classes: usize,
    },
    #[error("side colorings must cover the split: |S| = {s_len}, |G - S| = {rest_len}, sides {c_s_len} and {c_rest_len}")]
    WrongCover {
        s_len: usize,
        rest_len: usize,
        c_s_len: usize,
        c_rest_len: usize,
    },
    #[error(
        "class {class} of the S side leaves a residual component {component:?} with {edges} edges across the split (allowed: {allowed})"
    )]
    SideCondition {
        class: usize,
        component: Vec<usize>,
        edges: usize,
        allowed: usize,
    },
}

/// Unions a (k+1)-coloring of G[S] (indexed by ascending members of `s`)
/// with one of G - S, after checking the crossing condition on every class
/// of the S side.
pub fn compose_colorings(
    g: &Graph,
    s: VertexSet,
    c_s: &Coloring,
    c_rest: &Coloring,
    k: usize,
) -> Result<Coloring, ComposeError> {
    let rest = g.vertices().minus(s);
    if c_s.n() != s.len() || c_rest.n() != rest.len() {
        return Err(ComposeError::WrongCover {
            s_len: s.len(),
            rest_len: rest.len(),
            c_s_len: c_s.n(),
            c_rest_len: c_rest.n(),
        });
    }
    if c_s.num_classes() != k + 1 || c_rest.num_classes() != k + 1 {
        return Err(ComposeError::WrongClassCount {
            expected: k + 1,
            s_classes: c_s.num_classes(),
            rest_classes: c_rest.num_classes(),
        });
    }

    let s_vertices: Vec<usize> = s.iter().collect();
    let allowed = k - 2;
    for class in 1..=(k + 1) {
        // Class members in original labels.
        let d: VertexSet = c_s
            .class(class)
            .iter()
            .map(|i| s_vertices[i])
            .collect();
        // Residual of the class inside G[S].
        let survivors = s.minus(g.closed_neighborhood(d));
        for component in g.components_within(survivors) {
            let edges: usize = component
                .iter()
                .map(|x| g.neighbors(x).minus(s).len())
                .sum();
            if edges > allowed {
                return Err(ComposeError::SideCondition {
                    class,
                    component: component.to_vec(),
                    edges,
                    allowed,
                });
            }
        }
    }

    let rest_vertices: Vec<usize> = rest.iter().collect();
    let mut colors = vec![0usize; g.n()];
    for (i, &v) in s_vertices.iter().enumerate() {
        colors[v] = c_s.color_of(i);
    }
    for (i, &v) in rest_vertices.iter().enumerate() {
        colors[v] = c_rest.color_of(i);
    }
    Ok(Coloring::new(colors, k + 1).expect("union is total"))
}
