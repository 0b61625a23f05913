//! Structural classification driving the cycle-isolation construction.
//!
//! Cases are tried in a frozen order; each assumes the earlier structures
//! are absent. `ProofContradiction` is the fall-through that the argument
//! proves unreachable: returning it makes the caller raise a proof gap
//! instead of guessing.

use crate::cycles::{boundary_edge_count, enumerate_cycles, is_induced_cycle, DEFAULT_CYCLE_BUDGET};
use crate::report::CyclePartitionError;
use graph_core::{Graph, VertexSet};

/// An outside vertex attached to two consecutive cycle vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairAttachment {
    pub vertex: usize,
    /// The two consecutive cycle vertices it joins.
    pub pair: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    /// Max degree <= 2 and acyclic: a path (includes the single vertex).
    Path,
    /// Max degree <= 2 with a cycle: the cycle graph itself.
    Cycle,
    /// The complete graph on four vertices.
    K4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleStructure {
    BaseCase(BaseKind),
    /// Some cycle (not necessarily induced) of length divisible by 4.
    Mod4Cycle { cycle: Vec<usize> },
    /// An induced cycle of length >= 4 sending at most two edges out.
    SparselyAttachedInducedCycle {
        cycle: Vec<usize>,
        boundary: Vec<(usize, usize)>,
    },
    /// An induced cycle of length 4t+1, t >= 2, with its forced pattern of
    /// exactly two pair attachments.
    Mod4Plus1InducedCycle {
        cycle: Vec<usize>,
        attachments: [PairAttachment; 2],
    },
    /// An induced 5-cycle with the same forced two-pair pattern.
    InducedC5 {
        cycle: Vec<usize>,
        attachments: [PairAttachment; 2],
    },
    /// A triangle whose removal keeps the graph connected.
    NonSeparatingTriangle { triangle: VertexSet },
    /// Two disjoint triangles joined by an edge.
    DoubleTriangle {
        first: VertexSet,
        second: VertexSet,
        bridge: (usize, usize),
    },
    /// A triangle with a pendant vertex attached by exactly one edge.
    TrianglePlus {
        triangle: VertexSet,
        pendant: usize,
        attachment: usize,
    },
    /// Unreachable per the structure analysis; reported, never colored.
    ProofContradiction { detail: String },
}

pub(crate) fn check_preconditions(g: &Graph) -> Result<(), CyclePartitionError> {
    if !g.is_connected() {
        return Err(CyclePartitionError::Disconnected);
    }
    if g.max_degree() > 3 {
        return Err(CyclePartitionError::NotSubcubic {
            max_degree: g.max_degree(),
        });
    }
    if !g.is_claw_free() {
        return Err(CyclePartitionError::NotClawFree);
    }
    if g.is_triangle_graph() {
        return Err(CyclePartitionError::ExcludedTriangle);
    }
    Ok(())
}

/// Classifies a connected claw-free subcubic graph other than the triangle.
pub fn classify_cycle_structure(g: &Graph) -> Result<CycleStructure, CyclePartitionError> {
    check_preconditions(g)?;
    classify_inner(g)
}

/// Classification body; callers guarantee the preconditions (the recursion
/// preserves them: induced subgraphs stay claw-free and subcubic, the
/// pieces recursed on are connected, and triangle components are rejected
/// before recursing).
pub(crate) fn classify_inner(g: &Graph) -> Result<CycleStructure, CyclePartitionError> {
    if g.max_degree() <= 2 {
        return Ok(CycleStructure::BaseCase(if g.find_cycle().is_none() {
            BaseKind::Path
        } else {
            BaseKind::Cycle
        }));
    }
    if g.is_k_clique_graph(4) {
        return Ok(CycleStructure::BaseCase(BaseKind::K4));
    }

    let cycles = enumerate_cycles(g, DEFAULT_CYCLE_BUDGET)?;

    if let Some(c) = cycles.iter().find(|c| c.len() % 4 == 0) {
        return Ok(CycleStructure::Mod4Cycle { cycle: c.clone() });
    }

    let induced: Vec<&Vec<usize>> = cycles
        .iter()
        .filter(|c| c.len() >= 4 && is_induced_cycle(g, c))
        .collect();

    if let Some(c) = induced.iter().find(|c| boundary_edge_count(g, c) <= 2) {
        let on_cycle: VertexSet = c.iter().copied().collect();
        let mut boundary = Vec::new();
        for &v in c.iter() {
            for w in g.neighbors(v).minus(on_cycle).iter() {
                boundary.push((v, w));
            }
        }
        return Ok(CycleStructure::SparselyAttachedInducedCycle {
            cycle: (*c).clone(),
            boundary,
        });
    }

    if let Some(c) = induced.iter().find(|c| c.len() >= 9 && c.len() % 4 == 1) {
        return Ok(match extract_pair_attachments(g, c) {
            Ok(attachments) => CycleStructure::Mod4Plus1InducedCycle {
                cycle: (*c).clone(),
                attachments,
            },
            Err(detail) => CycleStructure::ProofContradiction { detail },
        });
    }

    if let Some(c) = induced.iter().find(|c| c.len() == 5) {
        return Ok(match extract_pair_attachments(g, c) {
            Ok(attachments) => CycleStructure::InducedC5 {
                cycle: (*c).clone(),
                attachments,
            },
            Err(detail) => CycleStructure::ProofContradiction { detail },
        });
    }

    let mut triangles: Vec<VertexSet> = cycles
        .iter()
        .filter(|c| c.len() == 3)
        .map(|c| c.iter().copied().collect())
        .collect();
    triangles.sort();

    for &t in &triangles {
        let rest = g.vertices().minus(t);
        if g.is_connected_within(rest) {
            return Ok(CycleStructure::NonSeparatingTriangle { triangle: t });
        }
    }

    for (i, &first) in triangles.iter().enumerate() {
        for &second in &triangles[(i + 1)..] {
            if first.intersects(second) {
                continue;
            }
            let bridge = first
                .iter()
                .find_map(|u| g.neighbors(u).intersect(second).first().map(|v| (u, v)));
            if let Some(bridge) = bridge {
                return Ok(CycleStructure::DoubleTriangle {
                    first,
                    second,
                    bridge,
                });
            }
        }
    }

    for &t in &triangles {
        for u in g.vertices().minus(t).iter() {
            let hits = g.neighbors(u).intersect(t);
            if hits.len() == 1 {
                return Ok(CycleStructure::TrianglePlus {
                    triangle: t,
                    pendant: u,
                    attachment: hits.first().unwrap(),
                });
            }
        }
    }

    Ok(CycleStructure::ProofContradiction {
        detail: "no structural case applies".into(),
    })
}

/// Validates and extracts the forced attachment pattern of an induced cycle
/// at this stage: exactly two outside vertices, each joined to exactly two
/// consecutive cycle vertices, with no other boundary edges.
fn extract_pair_attachments(g: &Graph, cycle: &[usize]) -> Result<[PairAttachment; 2], String> {
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let mut outside = VertexSet::EMPTY;
    for &v in cycle {
        outside = outside.union(g.neighbors(v).minus(on_cycle));
    }
    if outside.len() != 2 {
        return Err(format!(
            "expected exactly two attachment vertices, found {:?}",
            outside.to_vec()
        ));
    }
    if boundary_edge_count(g, cycle) != 4 {
        return Err(format!(
            "expected exactly four boundary edges, found {}",
            boundary_edge_count(g, cycle)
        ));
    }
    let mut attachments = Vec::with_capacity(2);
    for w in outside.iter() {
        let hits = g.neighbors(w).intersect(on_cycle);
        if hits.len() != 2 {
            return Err(format!(
                "attachment vertex {w} joins the cycle by {} edges",
                hits.len()
            ));
        }
        let pair: Vec<usize> = hits.to_vec();
        let (a, b) = (pair[0], pair[1]);
        let ia = cycle.iter().position(|&x| x == a).unwrap();
        let ib = cycle.iter().position(|&x| x == b).unwrap();
        let len = cycle.len();
        let consecutive = (ia + 1) % len == ib || (ib + 1) % len == ia;
        if !consecutive {
            return Err(format!(
                "attachment vertex {w} joins non-consecutive cycle vertices {a} and {b}"
            ));
        }
        attachments.push(PairAttachment { vertex: w, pair: (a, b) });
    }
    Ok([attachments[0], attachments[1]])
}
