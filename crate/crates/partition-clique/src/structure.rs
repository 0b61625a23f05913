//! Structural classification driving the clique-isolation construction.
//!
//! The cases are tried in a frozen priority order; each later case may
//! assume every earlier structure is absent, exactly as the construction's
//! correctness argument does, so reordering would be unsound.

use crate::report::CliquePartitionError;
use graph_core::{Graph, VertexSet};

/// Which structural case applies, with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueStructure {
    /// No k-clique anywhere; any coloring works.
    NoKk,
    /// A k-clique whose removal leaves the graph connected.
    NonSeparatingKk { clique: VertexSet },
    /// A k-clique plus an outside vertex attached by two or more edges.
    NonInducedKkPlus {
        clique: VertexSet,
        pendant: usize,
        attachment: usize,
    },
    /// Two disjoint k-cliques joined by an edge.
    DoubleKk {
        first: VertexSet,
        second: VertexSet,
        bridge: (usize, usize),
    },
    /// A k-clique with a pendant vertex attached by exactly one edge.
    InducedKkPlus {
        clique: VertexSet,
        pendant: usize,
        attachment: usize,
    },
}

pub(crate) fn check_preconditions(g: &Graph, k: usize) -> Result<(), CliquePartitionError> {
    if k < 3 {
        return Err(CliquePartitionError::InvalidK { k });
    }
    if !g.is_connected() {
        return Err(CliquePartitionError::Disconnected);
    }
    if g.max_degree() > k {
        return Err(CliquePartitionError::DegreeTooHigh {
            max_degree: g.max_degree(),
            k,
        });
    }
    if g.is_k_clique_graph(k) {
        return Err(CliquePartitionError::ExcludedCompleteGraph { k });
    }
    Ok(())
}

/// Classifies a connected graph with max degree <= k, G != K_k, k >= 3.
/// Ties break to the lexicographically least witness.
pub fn classify_structure(g: &Graph, k: usize) -> Result<CliqueStructure, CliquePartitionError> {
    check_preconditions(g, k)?;
    classify_inner(g, k)
}

/// Classification body; callers guarantee the preconditions, which the
/// recursion preserves.
pub(crate) fn classify_inner(g: &Graph, k: usize) -> Result<CliqueStructure, CliquePartitionError> {
    let cliques = g.all_k_cliques(k);
    if cliques.is_empty() {
        return Ok(CliqueStructure::NoKk);
    }

    // A k-clique exists and G != K_k, so n >= k + 1.
    debug_assert!(g.n() >= k + 1);

    for &clique in &cliques {
        if g.is_connected_within(g.vertices().minus(clique)) {
            return Ok(CliqueStructure::NonSeparatingKk { clique });
        }
    }

    for &clique in &cliques {
        for u in g.vertices().minus(clique).iter() {
            if g.neighbors(u).intersect(clique).len() >= 2 {
                let attachment = g.neighbors(u).intersect(clique).first().unwrap();
                return Ok(CliqueStructure::NonInducedKkPlus {
                    clique,
                    pendant: u,
                    attachment,
                });
            }
        }
    }

    for (i, &first) in cliques.iter().enumerate() {
        for &second in &cliques[(i + 1)..] {
            if first.intersects(second) {
                continue;
            }
            let bridge = first.iter().find_map(|u| {
                g.neighbors(u)
                    .intersect(second)
                    .first()
                    .map(|v| (u, v))
            });
            if let Some(bridge) = bridge {
                return Ok(CliqueStructure::DoubleKk {
                    first,
                    second,
                    bridge,
                });
            }
        }
    }

    // Every clique is separating, every attachment single-edged; the least
    // clique has an outside neighbor because the graph is connected with
    // n > k.
    for &clique in &cliques {
        for u in g.vertices().minus(clique).iter() {
            let hits = g.neighbors(u).intersect(clique);
            if hits.len() == 1 {
                return Ok(CliqueStructure::InducedKkPlus {
                    clique,
                    pendant: u,
                    attachment: hits.first().unwrap(),
                });
            }
        }
    }
    unreachable!("a k-clique in a connected graph larger than K_k has an attached vertex");
}
