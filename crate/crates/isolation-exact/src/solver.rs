//! Exact minimum isolating sets.
//!
//! The search iterates the answer size 0, 1, 2, ... and, for each size,
//! branches on the closed neighborhood of a pattern that survives the
//! current partial set: every isolating set must hit N[V(P)] for every
//! surviving pattern P, so trying each vertex of the cheapest such
//! neighborhood (excluding vertices already ruled out along this branch)
//! is exhaustive.

use crate::budget::{NodeMeter, SearchAborted, SearchBudget};
use graph_core::{Graph, VertexSet};
use isolation_verify::{surviving_vertices, TargetPattern};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationNumberResult {
    pub value: usize,
    pub witness: VertexSet,
}

pub fn min_isolating(g: &Graph, target: TargetPattern) -> Result<IsolationNumberResult, SearchAborted> {
    min_isolating_with_budget(g, target, &SearchBudget::for_min_isolating())
}

pub fn min_isolating_with_budget(
    g: &Graph,
    target: TargetPattern,
    budget: &SearchBudget,
) -> Result<IsolationNumberResult, SearchAborted> {
    if g.n() > budget.max_n {
        return Err(SearchAborted::OrderTooLarge {
            n: g.n(),
            max_n: budget.max_n,
        });
    }
    let mut meter = NodeMeter::new(budget.max_nodes);
    for size in 0..=g.n() {
        if let Some(witness) = extend(g, target, VertexSet::EMPTY, VertexSet::EMPTY, size, &mut meter)? {
            return Ok(IsolationNumberResult {
                value: witness.len(),
                witness,
            });
        }
    }
    unreachable!("D = V(G) isolates every pattern");
}

fn extend(
    g: &Graph,
    target: TargetPattern,
    chosen: VertexSet,
    banned: VertexSet,
    remaining: usize,
    meter: &mut NodeMeter,
) -> Result<Option<VertexSet>, SearchAborted> {
    meter.tick()?;
    let branch_set = match surviving_pattern_neighborhood(g, target, chosen) {
        None => return Ok(Some(chosen)),
        Some(nh) => nh,
    };
    if remaining == 0 {
        return Ok(None);
    }
    let candidates = branch_set.minus(banned);
    let mut tried = VertexSet::EMPTY;
    for v in candidates.iter() {
        let result = extend(
            g,
            target,
            chosen.with(v),
            banned.union(tried),
            remaining - 1,
            meter,
        )?;
        if result.is_some() {
            return Ok(result);
        }
        tried.insert(v);
    }
    Ok(None)
}

/// N[V(P)] for a surviving pattern P chosen to keep branching narrow, or
/// `None` when the current set already isolates.
fn surviving_pattern_neighborhood(
    g: &Graph,
    target: TargetPattern,
    d: VertexSet,
) -> Option<VertexSet> {
    let within = surviving_vertices(g, d);
    match target {
        TargetPattern::KClique(k) => {
            // Sample a few surviving cliques (distinct minimum vertices) and
            // branch on the one with the smallest closed neighborhood.
            let first = g.find_k_clique_within(within, k)?;
            let mut best = g.closed_neighborhood(first);
            let mut banned = VertexSet::singleton(first.first().unwrap());
            for _ in 0..7 {
                match g.find_k_clique_within(within.minus(banned), k) {
                    None => break,
                    Some(clique) => {
                        let nh = g.closed_neighborhood(clique);
                        if nh.len() < best.len() {
                            best = nh;
                        }
                        banned.insert(clique.first().unwrap());
                    }
                }
            }
            Some(best)
        }
        TargetPattern::AnyCycle => {
            let cycle = g.shortest_cycle_within(within)?;
            Some(g.closed_neighborhood(cycle.into_iter().collect()))
        }
    }
}
