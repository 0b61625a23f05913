//! Property tests for the verifier invariants.

use graph_core::{Graph, VertexSet};
use isolation_verify::{
    class_passes, is_dominating, is_isolating, verify_partition, witness_is_valid, Coloring,
    TargetPattern,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_targets() -> impl Strategy<Value = TargetPattern> {
    prop_oneof![
        (1usize..=4).prop_map(TargetPattern::KClique),
        Just(TargetPattern::AnyCycle),
    ]
}

proptest! {
    // Supersets of isolating sets are isolating.
    #[test]
    fn monotone_in_d(g in arb_graph(8), target in arb_targets(), bits in any::<u64>(), extra in any::<u64>()) {
        let mask = VertexSet::full(g.n());
        let d = VertexSet::from_bits(bits).intersect(mask);
        let d_sup = d.union(VertexSet::from_bits(extra).intersect(mask));
        if is_isolating(&g, d, target).passed() {
            prop_assert!(is_isolating(&g, d_sup, target).passed());
        }
    }

    // KClique(1)-isolation is exactly domination.
    #[test]
    fn domination_consistency(g in arb_graph(8), bits in any::<u64>()) {
        let d = VertexSet::from_bits(bits).intersect(VertexSet::full(g.n()));
        prop_assert_eq!(
            is_isolating(&g, d, TargetPattern::DOMINATION).passed(),
            is_dominating(&g, d)
        );
    }

    // FAIL witnesses re-verify through the independent checker.
    #[test]
    fn certificates_are_sound(g in arb_graph(8), target in arb_targets(), bits in any::<u64>()) {
        let d = VertexSet::from_bits(bits).intersect(VertexSet::full(g.n()));
        let cert = is_isolating(&g, d, target);
        match &cert.witness {
            None => prop_assert!(cert.passed()),
            Some(w) => {
                prop_assert!(!cert.passed());
                prop_assert!(witness_is_valid(&g, d, target, w));
            }
        }
    }

    // The compact check agrees with the certificate-producing one.
    #[test]
    fn class_passes_agrees(g in arb_graph(8), target in arb_targets(), bits in any::<u64>()) {
        let d = VertexSet::from_bits(bits).intersect(VertexSet::full(g.n()));
        prop_assert_eq!(class_passes(&g, d, target), is_isolating(&g, d, target).passed());
    }

    // A PASSing partition re-verifies class by class, and a FAIL names a
    // class whose recomputation also fails with a sound witness.
    #[test]
    fn partition_verdicts_round_trip(
        g in arb_graph(7),
        target in arb_targets(),
        colors in proptest::collection::vec(1usize..=4, 2..=7),
    ) {
        let n = g.n().min(colors.len());
        prop_assume!(n == g.n());
        let coloring = Coloring::new(colors[..n].to_vec(), 4).unwrap();
        let cert = verify_partition(&g, &coloring, target);
        match cert.class {
            None => {
                prop_assert!(cert.passed());
                for i in 1..=4 {
                    prop_assert!(is_isolating(&g, coloring.class(i), target).passed());
                }
            }
            Some(i) => {
                prop_assert!(!cert.passed());
                let again = is_isolating(&g, coloring.class(i), target);
                prop_assert!(!again.passed());
                let w = cert.witness.unwrap();
                prop_assert!(witness_is_valid(&g, coloring.class(i), target, &w));
                // Classes before the reported one all pass.
                for j in 1..i {
                    prop_assert!(is_isolating(&g, coloring.class(j), target).passed());
                }
            }
        }
    }

    // An empty class passes exactly when the graph is pattern-free.
    #[test]
    fn empty_class_rule(g in arb_graph(8), target in arb_targets()) {
        let pattern_free = match target {
            TargetPattern::KClique(k) => g.find_k_clique(k).is_none(),
            TargetPattern::AnyCycle => g.find_cycle().is_none(),
        };
        prop_assert_eq!(
            is_isolating(&g, VertexSet::EMPTY, target).passed(),
            pattern_free
        );
    }
}
