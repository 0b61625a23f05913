//! Enumeration of all simple cycles, one representative per cycle.
//!
//! Cycles come out in canonical form: least vertex first, then the smaller
//! of its two cycle neighbors. The DFS roots at each vertex in turn and
//! only walks into larger vertices, so each cycle appears exactly once.
//! Subcubic graphs keep the path tree narrow; a work budget still converts
//! pathological input into a loud abort instead of a hang.

use graph_core::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cycle enumeration exceeded its budget of {budget} steps")]
pub struct CycleBudgetExceeded {
    pub budget: u64,
}

pub const DEFAULT_CYCLE_BUDGET: u64 = 1_000_000;

/// Every simple cycle of `g`, each exactly once up to rotation and
/// reflection.
pub fn enumerate_cycles(g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>, CycleBudgetExceeded> {
    // Cycles live in the 2-core; peeling leaves and isolated vertices first
    // keeps the search from wandering down acyclic tails.
    let mut core = g.vertices();
    loop {
        let mut changed = false;
        for v in core.iter() {
            if g.neighbors(v).intersect(core).len() <= 1 {
                core.remove(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out = Vec::new();
    let mut steps = 0u64;
    let mut path = Vec::new();
    for root in core.iter() {
        path.clear();
        path.push(root);
        extend(
            g,
            root,
            core,
            VertexSet::singleton(root),
            &mut path,
            &mut out,
            &mut steps,
            budget,
        )?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    root: usize,
    core: VertexSet,
    visited: VertexSet,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    steps: &mut u64,
    budget: u64,
) -> Result<(), CycleBudgetExceeded> {
    *steps += 1;
    if *steps > budget {
        return Err(CycleBudgetExceeded { budget });
    }
    let last = *path.last().unwrap();
    for next in g.neighbors(last).intersect(core).iter() {
        if next == root {
            // Close only in the canonical direction: second vertex smaller
            // than the last, so each cycle is produced once.
            if path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            continue;
        }
        if next < root || visited.contains(next) {
            continue;
        }
        path.push(next);
        extend(g, root, core, visited.with(next), path, out, steps, budget)?;
        path.pop();
    }
    Ok(())
}

/// Whether the cycle (given as a canonical vertex list) has a chord.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    for i in 0..len {
        for j in (i + 1)..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if !consecutive && g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

/// Number of edges between the cycle's vertex set and the rest of `g`.
pub fn boundary_edge_count(g: &Graph, cycle: &[usize]) -> usize {
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    cycle
        .iter()
        .map(|&v| g.neighbors(v).minus(on_cycle).len())
        .sum()
}
