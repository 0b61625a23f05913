//! The (k+1)-class clique-isolation construction.
//!
//! Recursion follows [`classify_structure`]: peel the witnessed structure,
//! color the remainder recursively, color the peeled part explicitly, and
//! verify the reassembled coloring. Every output passes `verify_partition`
//! before it is returned; a failure that the single prescribed repair step
//! cannot fix becomes a [`ProofGapReport`].

use crate::compose::compose_colorings;
use crate::report::{gap, CliquePartitionError};
use crate::structure::{check_preconditions, classify_inner, CliqueStructure};
use graph_core::{Graph, VertexSet};
use isolation_verify::{partition_passes, verify_partition, Coloring, TargetPattern};

/// Partitions a connected graph with max degree <= k (k >= 3, G != K_k)
/// into k + 1 clique-isolating classes, returned as a verified coloring.
pub fn partition_k_clique(g: &Graph, k: usize) -> Result<Coloring, CliquePartitionError> {
    check_preconditions(g, k)?;
    let coloring = build(g, k)?;
    debug_assert!(partition_passes(g, &coloring, TargetPattern::KClique(k)));
    Ok(coloring)
}

fn build(g: &Graph, k: usize) -> Result<Coloring, CliquePartitionError> {
    let target = TargetPattern::KClique(k);
    match classify_inner(g, k)? {
        CliqueStructure::NoKk => Ok(Coloring::constant(g.n(), 1, k + 1)),

        CliqueStructure::NonSeparatingKk { clique } => {
            let rest = g.vertices().minus(clique);
            let (u, v) = cross_edge(g, clique, rest);
            let (sub, map) = g.induced_subgraph(rest);

            if sub.is_k_clique_graph(k) {
                // Two cliques tied by a matching: u and v take the two
                // spare colors, both remainders share 1..k-1.
                let coloring = two_clique_coloring(g, k, clique, rest, u, v);
                if partition_passes(g, &coloring, target) {
                    return Ok(coloring);
                }
                let cert = verify_partition(g, &coloring, target);
                return Err(gap(
                    g,
                    k,
                    "non-separating clique, complete remainder",
                    Some(coloring),
                    Some(cert),
                    "explicit two-clique coloring failed verification",
                ));
            }

            let sub_coloring = build(&sub, k)?;
            let v_sub = map.from_parent(v).expect("v lies in the remainder");
            // Rename so the attachment vertex carries color k + 1.
            let sub_coloring = sub_coloring.swapped(sub_coloring.color_of(v_sub), k + 1);

            let mut parts: Vec<(usize, usize)> = rest
                .iter()
                .enumerate()
                .map(|(i, w)| (w, sub_coloring.color_of(i)))
                .collect();
            parts.extend(clique.iter().zip(1..=k).map(|(w, c)| (w, c)));
            let coloring = Coloring::assemble(g.n(), k + 1, &parts);

            if partition_passes(g, &coloring, target) {
                return Ok(coloring);
            }
            let cert = verify_partition(g, &coloring, target);
            // The only class that can fail is k + 1, and its witness is the
            // unique clique on (H \ {u}) plus one outside vertex v'; moving
            // the color of v' out of H's palette kills it.
            if cert.class != Some(k + 1) {
                return Err(gap(
                    g,
                    k,
                    "non-separating clique, recursive case",
                    Some(coloring),
                    Some(cert),
                    "verification failed on a class the argument says is safe",
                ));
            }
            let witness: VertexSet = cert.witness.clone().unwrap().into_iter().collect();
            let outside = witness.minus(clique);
            let inside = witness.intersect(clique);
            if outside.len() != 1 || inside.len() != k - 1 {
                return Err(gap(
                    g,
                    k,
                    "non-separating clique, recursive case",
                    Some(coloring),
                    Some(cert),
                    "failing clique does not have the predicted one-vertex overlap shape",
                ));
            }
            let v_prime = outside.first().unwrap();
            let spoiled = coloring.color_of(v_prime);
            if spoiled == k + 1 {
                return Err(gap(
                    g,
                    k,
                    "non-separating clique, recursive case",
                    Some(coloring),
                    Some(cert),
                    "witness vertex already carries the top color",
                ));
            }
            let mut colors = coloring.colors().to_vec();
            let palette: Vec<usize> = (1..=k + 1).filter(|&c| c != spoiled).collect();
            for (w, c) in clique.iter().zip(palette) {
                colors[w] = c;
            }
            let repaired = Coloring::new(colors, k + 1).expect("palette stays in range");
            if partition_passes(g, &repaired, target) {
                Ok(repaired)
            } else {
                let cert = verify_partition(g, &repaired, target);
                Err(gap(
                    g,
                    k,
                    "non-separating clique, after repair",
                    Some(repaired),
                    Some(cert),
                    "single repair step did not produce a valid coloring",
                ))
            }
        }

        CliqueStructure::NonInducedKkPlus { clique, pendant, .. } => {
            let s = clique.with(pendant);
            let rest = g.vertices().minus(s);
            // Rainbow the k + 1 vertices of S in vertex order.
            let c_s = Coloring::new((1..=k + 1).collect(), k + 1).expect("rainbow");
            if rest.is_empty() {
                let parts: Vec<(usize, usize)> =
                    s.iter().zip(1..=k + 1).map(|(w, c)| (w, c)).collect();
                let coloring = Coloring::assemble(g.n(), k + 1, &parts);
                return verified(g, k, coloring, "attached clique covers the graph");
            }
            let c_rest = partition_components(g, rest, k, "attached clique remainder")?;
            let coloring = compose_colorings(g, s, &c_s, &c_rest, k).map_err(|e| {
                gap(
                    g,
                    k,
                    "attached clique composition",
                    None,
                    None,
                    format!("crossing condition failed: {e}"),
                )
            })?;
            verified(g, k, coloring, "attached clique (two or more edges)")
        }

        CliqueStructure::DoubleKk {
            first,
            second,
            bridge,
        } => {
            let s = first.union(second);
            let rest = g.vertices().minus(s);
            let mut parts = two_clique_parts(k, first, second, bridge.0, bridge.1);
            if !rest.is_empty() {
                let c_rest = partition_components(g, rest, k, "double clique remainder")?;
                let rest_vertices: Vec<usize> = rest.iter().collect();
                parts.extend(
                    rest_vertices
                        .iter()
                        .enumerate()
                        .map(|(i, &w)| (w, c_rest.color_of(i))),
                );
            }
            let coloring = Coloring::assemble(g.n(), k + 1, &parts);
            verified(g, k, coloring, "double clique")
        }

        CliqueStructure::InducedKkPlus {
            clique,
            pendant,
            attachment,
        } => {
            let s = clique.with(pendant);
            let rest = g.vertices().minus(s);
            let mut parts: Vec<(usize, usize)> = vec![(pendant, k + 1), (attachment, k)];
            parts.extend(clique.without(attachment).iter().zip(1..=k - 1));
            if !rest.is_empty() {
                let c_rest = partition_components(g, rest, k, "pendant clique remainder")?;
                let rest_vertices: Vec<usize> = rest.iter().collect();
                parts.extend(
                    rest_vertices
                        .iter()
                        .enumerate()
                        .map(|(i, &w)| (w, c_rest.color_of(i))),
                );
            }
            let coloring = Coloring::assemble(g.n(), k + 1, &parts);
            verified(g, k, coloring, "pendant clique")
        }
    }
}

/// Colors the two cliques of a DK_k: bridge endpoints take k + 1 and k,
/// each remainder takes 1..k-1.
fn two_clique_parts(
    k: usize,
    first: VertexSet,
    second: VertexSet,
    u: usize,
    v: usize,
) -> Vec<(usize, usize)> {
    let mut parts = vec![(u, k + 1), (v, k)];
    parts.extend(first.without(u).iter().zip(1..=k - 1));
    parts.extend(second.without(v).iter().zip(1..=k - 1));
    parts
}

fn two_clique_coloring(
    g: &Graph,
    k: usize,
    clique: VertexSet,
    rest: VertexSet,
    u: usize,
    v: usize,
) -> Coloring {
    let parts = two_clique_parts(k, clique, rest, u, v);
    Coloring::assemble(g.n(), k + 1, &parts)
}

/// Least cross edge (u, v) with u in the clique and v outside.
fn cross_edge(g: &Graph, clique: VertexSet, rest: VertexSet) -> (usize, usize) {
    for u in clique.iter() {
        if let Some(v) = g.neighbors(u).intersect(rest).first() {
            return (u, v);
        }
    }
    unreachable!("connected graph joins the clique to its remainder")
}

/// Recursively colors each component of `rest` and unions the results,
/// asserting that no component is itself a k-clique.
fn partition_components(
    g: &Graph,
    rest: VertexSet,
    k: usize,
    stage: &str,
) -> Result<Coloring, CliquePartitionError> {
    let rest_vertices: Vec<usize> = rest.iter().collect();
    let index_of = |v: usize| rest_vertices.iter().position(|&x| x == v).unwrap();
    let mut colors = vec![0usize; rest_vertices.len()];
    for component in g.components_within(rest) {
        let (sub, map) = g.induced_subgraph(component);
        if sub.is_k_clique_graph(k) {
            return Err(gap(
                g,
                k,
                stage,
                None,
                None,
                format!(
                    "remainder contains the complete component {:?}, which the argument rules out",
                    component.to_vec()
                ),
            ));
        }
        let sub_coloring = build(&sub, k)?;
        for i in 0..sub.n() {
            colors[index_of(map.to_parent(i))] = sub_coloring.color_of(i);
        }
    }
    Ok(Coloring::new(colors, k + 1).expect("components cover the remainder"))
}

fn verified(
    g: &Graph,
    k: usize,
    coloring: Coloring,
    stage: &str,
) -> Result<Coloring, CliquePartitionError> {
    if partition_passes(g, &coloring, TargetPattern::KClique(k)) {
        Ok(coloring)
    } else {
        let cert = verify_partition(g, &coloring, TargetPattern::KClique(k));
        Err(gap(
            g,
            k,
            stage,
            Some(coloring),
            Some(cert),
            "constructed coloring failed verification",
        ))
    }
}
