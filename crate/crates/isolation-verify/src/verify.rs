//! Deciding isolation: does G - N[D] avoid the target pattern?

use crate::certificate::Certificate;
use crate::coloring::Coloring;
use crate::target::TargetPattern;
use graph_core::{Graph, SubgraphMap, VertexSet};

/// Vertices surviving the deletion of N[D].
#[inline]
pub fn surviving_vertices(g: &Graph, d: VertexSet) -> VertexSet {
    g.vertices().minus(g.closed_neighborhood(d))
}

/// G - N[D] as an induced subgraph with its index map. The empty set leaves
/// G itself.
pub fn residual(g: &Graph, d: VertexSet) -> (Graph, SubgraphMap) {
    g.induced_subgraph(surviving_vertices(g, d))
}

/// Finds a target pattern inside the subgraph induced by `within`,
/// in original-graph labels.
pub fn find_pattern_within(g: &Graph, within: VertexSet, target: TargetPattern) -> Option<Vec<usize>> {
    match target {
        TargetPattern::KClique(k) => g.find_k_clique_within(within, k).map(|s| s.to_vec()),
        TargetPattern::AnyCycle => g.find_cycle_within(within),
    }
}

/// Whether `d` is a `target`-isolating set of `g`, with a witness on failure.
pub fn is_isolating(g: &Graph, d: VertexSet, target: TargetPattern) -> Certificate {
    match find_pattern_within(g, surviving_vertices(g, d), target) {
        None => Certificate::pass(target),
        Some(witness) => Certificate::fail(target, None, witness),
    }
}

/// Certificate-free form of [`is_isolating`] for search inner loops.
#[inline]
pub fn class_passes(g: &Graph, d: VertexSet, target: TargetPattern) -> bool {
    let within = surviving_vertices(g, d);
    match target {
        TargetPattern::KClique(k) => g.find_k_clique_within(within, k).is_none(),
        TargetPattern::AnyCycle => g.is_forest_within(within),
    }
}

/// Certificate-free form of [`verify_partition`] for sweep inner loops.
pub fn partition_passes(g: &Graph, coloring: &Coloring, target: TargetPattern) -> bool {
    (1..=coloring.num_classes()).all(|i| class_passes(g, coloring.class(i), target))
}

/// Whether every color class of `coloring` is a `target`-isolating set.
/// The first failing class (lowest index) is reported.
pub fn verify_partition(g: &Graph, coloring: &Coloring, target: TargetPattern) -> Certificate {
    assert_eq!(
        coloring.n(),
        g.n(),
        "coloring must assign every vertex of the graph"
    );
    for i in 1..=coloring.num_classes() {
        let cert = is_isolating(g, coloring.class(i), target);
        if !cert.passed() {
            return Certificate::fail(target, Some(i), cert.witness.unwrap());
        }
    }
    Certificate::pass(target)
}

/// N[D] = V(G); same as `target = KClique(1)` isolation.
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    g.closed_neighborhood(d) == g.vertices()
}

/// Independent re-check that a FAIL witness really is a target pattern
/// surviving in G - N[D]. Used to audit certificates without trusting the
/// search that produced them.
pub fn witness_is_valid(g: &Graph, d: VertexSet, target: TargetPattern, witness: &[usize]) -> bool {
    let survivors = surviving_vertices(g, d);
    if witness.iter().any(|&v| v >= g.n() || !survivors.contains(v)) {
        return false;
    }
    let distinct: VertexSet = witness.iter().copied().collect();
    if distinct.len() != witness.len() {
        return false;
    }
    match target {
        TargetPattern::KClique(k) => {
            witness.len() == k
                && witness
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| witness[(i + 1)..].iter().all(|&v| g.has_edge(u, v)))
        }
        TargetPattern::AnyCycle => {
            witness.len() >= 3
                && (0..witness.len())
                    .all(|i| g.has_edge(witness[i], witness[(i + 1) % witness.len()]))
        }
    }
}
