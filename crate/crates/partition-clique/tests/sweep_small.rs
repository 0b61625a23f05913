//! Exhaustive verification on all connected degree-bounded graphs of
//! order up to 7. The harness acceptance suite pushes this to order 8.

use graph_core::{for_each_graph, GraphFilter};
use isolation_verify::{verify_partition, TargetPattern};
use partition_clique::partition_k_clique;

#[test]
fn all_connected_subcubic_graphs_to_n7_split_for_k3() {
    let filter = GraphFilter::connected_max_degree(3);
    let mut count = 0u64;
    for n in 1..=7 {
        for_each_graph(n, &filter, |g| {
            if g.is_k_clique_graph(3) {
                return;
            }
            let c = partition_k_clique(g, 3).expect("construction succeeds");
            assert!(verify_partition(g, &c, TargetPattern::KClique(3)).passed());
            count += 1;
        })
        .unwrap();
    }
    // Connected labeled graphs with max degree <= 3, K_3 excluded, counted
    // independently by direct mask enumeration: 1, 1, 3, 38, 472, 7540 for
    // n = 1..6, and 150930 for n = 7.
    assert_eq!(count, 1 + 1 + 3 + 38 + 472 + 7540 + 150_930);
}

#[test]
fn all_connected_max_degree_4_graphs_to_n7_split_for_k4() {
    let filter = GraphFilter::connected_max_degree(4);
    for n in 1..=7 {
        for_each_graph(n, &filter, |g| {
            if g.is_k_clique_graph(4) {
                return;
            }
            let c = partition_k_clique(g, 4).expect("construction succeeds");
            assert!(verify_partition(g, &c, TargetPattern::KClique(4)).passed());
        })
        .unwrap();
    }
}
