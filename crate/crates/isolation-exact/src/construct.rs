//! Constructive isomatic partitions that work on every graph.
//!
//! The k-class clique construction peels k-cliques one at a time: remove a
//! clique, partition the rest recursively, then hand each clique vertex to
//! a different class. Each class then contains one vertex of every removed
//! clique, whose closed neighborhood swallows that clique whole, so any
//! k-clique surviving a class would already survive in the recursively
//! partitioned remainder.
//!
//! The 3-class cycle construction settles forests (everything in one class)
//! and cycles (three distinguished vertices) directly, and otherwise finds
//! an ordinary-isolation 3-partition by exact search; edge-free residuals
//! are in particular forests, so those classes also isolate cycles.

use crate::budget::{NodeMeter, SearchBudget};
use crate::isomatic::exact_partition;
use graph_core::Graph;
use isolation_verify::{Coloring, TargetPattern};

/// A weak partition of any graph into k classes, each a k-clique isolating
/// set.
pub fn clique_isomatic_k_partition(g: &Graph, k: usize) -> Coloring {
    assert!(k >= 1, "need at least one class");
    let mut colors = vec![0usize; g.n()];
    fill_clique_partition(g, k, &mut colors);
    Coloring::new(colors, k).expect("total assignment")
}

fn fill_clique_partition(g: &Graph, k: usize, colors: &mut [usize]) {
    match g.find_k_clique(k) {
        None => {
            // Pattern-free remainder: park everything in class k, leaving
            // the other classes (possibly) empty.
            for c in colors.iter_mut() {
                *c = k;
            }
        }
        Some(clique) => {
            let rest = g.vertices().minus(clique);
            let (sub, map) = g.induced_subgraph(rest);
            let mut sub_colors = vec![0usize; sub.n()];
            fill_clique_partition(&sub, k, &mut sub_colors);
            for (i, c) in sub_colors.into_iter().enumerate() {
                colors[map.to_parent(i)] = c;
            }
            for (i, v) in clique.iter().enumerate() {
                colors[v] = i + 1;
            }
        }
    }
}

/// A weak partition of any graph into three cycle isolating sets.
pub fn cycle_isomatic_3_partition(g: &Graph) -> Coloring {
    let mut colors = vec![0usize; g.n()];
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(comp);
        let sub_colors = component_cycle_partition(&sub);
        for (i, c) in sub_colors.into_iter().enumerate() {
            colors[map.to_parent(i)] = c;
        }
    }
    Coloring::new(colors, 3).expect("total assignment")
}

fn component_cycle_partition(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if g.is_forest() {
        return vec![3; n];
    }
    if g.is_cycle_graph() {
        // Three distinguished vertices, one per class; the rest join class 3.
        let mut colors = vec![3; n];
        colors[0] = 1;
        colors[1] = 2;
        return colors;
    }
    // Connected, cyclic, not a cycle graph: n >= 4 and the component is
    // neither K_2 nor C_5, so an ordinary-isolation 3-partition exists;
    // exact search stands in for the published construction at this scale.
    let mut meter = NodeMeter::new(SearchBudget::for_isomatic().max_nodes);
    let partition = exact_partition(g, TargetPattern::ISOLATION, 3, &mut meter)
        .expect("component search within budget")
        .expect("isolation 3-partition exists for connected graphs other than K_2 and C_5");
    partition.colors().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::builders::{complete, cycle, double_clique, path, petersen, star};
    use isolation_verify::verify_partition;

    #[test]
    fn clique_partition_examples() {
        // Two disjoint triangles each get split 1|2|3.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let c = clique_isomatic_k_partition(&g, 3);
        assert!(verify_partition(&g, &c, TargetPattern::KClique(3)).passed());
        assert_eq!(c.colors(), &[1, 2, 3, 1, 2, 3]);

        // Triangle-free: everything lands in class 3.
        let c5 = cycle(5);
        let c = clique_isomatic_k_partition(&c5, 3);
        assert_eq!(c.colors(), &[3, 3, 3, 3, 3]);
        assert!(verify_partition(&c5, &c, TargetPattern::KClique(3)).passed());

        // K_4 with k = 3: the least triangle splits 1|2|3, vertex 3 left in
        // class 3.
        let k4 = complete(4);
        let c = clique_isomatic_k_partition(&k4, 3);
        assert_eq!(c.colors(), &[1, 2, 3, 3]);
        assert!(verify_partition(&k4, &c, TargetPattern::KClique(3)).passed());
    }

    #[test]
    fn cycle_partition_examples() {
        // Trees: everything in class 3.
        let t = star(7);
        let c = cycle_isomatic_3_partition(&t);
        assert_eq!(c.colors(), &vec![3; 7][..]);
        assert!(verify_partition(&t, &c, TargetPattern::AnyCycle).passed());

        // A cycle: three distinguished vertices.
        let c5 = cycle(5);
        let c = cycle_isomatic_3_partition(&c5);
        assert_eq!(c.colors(), &[1, 2, 3, 3, 3]);
        assert!(verify_partition(&c5, &c, TargetPattern::AnyCycle).passed());

        // Petersen goes through the exact-search branch.
        let p = petersen();
        let c = cycle_isomatic_3_partition(&p);
        assert!(verify_partition(&p, &c, TargetPattern::AnyCycle).passed());
        assert_eq!(c.num_classes(), 3);
    }

    #[test]
    fn constructions_hold_on_assorted_graphs() {
        let zoo = [
            path(1),
            path(7),
            cycle(3),
            cycle(7),
            complete(5),
            star(6),
            double_clique(3),
            petersen(),
            Graph::empty(4).unwrap(),
        ];
        for g in &zoo {
            for k in [3, 4] {
                let c = clique_isomatic_k_partition(g, k);
                assert!(
                    verify_partition(g, &c, TargetPattern::KClique(k)).passed(),
                    "clique construction failed on {g:?} k={k}"
                );
            }
            let c = cycle_isomatic_3_partition(g);
            assert!(
                verify_partition(g, &c, TargetPattern::AnyCycle).passed(),
                "cycle construction failed on {g:?}"
            );
        }
    }
}
