use graph_core::{for_each_graph, GraphFilter};
use partition_clique::partition_k_clique;
use std::time::Instant;

fn main() {
    // n=7 maxdeg4 as a proxy; n=8 is ~21x larger.
    for n in [7usize] {
        let filter = GraphFilter::connected_max_degree(4);
        let t = Instant::now();
        let mut count = 0u64;
        for_each_graph(n, &filter, |g| {
            if g.is_k_clique_graph(4) {
                return;
            }
            partition_k_clique(g, 4).unwrap();
            count += 1;
        })
        .unwrap();
        println!("n={n} maxdeg4: {count} graphs partitioned in {:?}", t.elapsed());
    }
}
