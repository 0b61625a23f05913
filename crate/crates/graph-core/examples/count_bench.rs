use graph_core::{for_each_graph, GraphFilter};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("small");
    let cases: Vec<(usize, GraphFilter, &str)> = match which {
        "small" => vec![
            (7, GraphFilter::connected_max_degree(3), "n=7 conn maxdeg3"),
            (7, GraphFilter::connected(), "n=7 connected"),
            (8, GraphFilter::connected_max_degree(3), "n=8 conn maxdeg3"),
            (9, GraphFilter::connected_claw_free_subcubic(), "n=9 cf subcubic"),
        ],
        "deg4" => vec![(8, GraphFilter::connected_max_degree(4), "n=8 conn maxdeg4")],
        "cf10" => vec![(10, GraphFilter::connected_claw_free_subcubic(), "n=10 cf subcubic")],
        _ => vec![],
    };
    for (n, filter, label) in cases {
        let t = Instant::now();
        let mut count = 0u64;
        for_each_graph(n, &filter, |_| count += 1).unwrap();
        println!("{label}: {count} graphs in {:?}", t.elapsed());
    }
}
