use graph_core::{for_each_graph, GraphFilter};
use isolation_verify::{partition_passes, TargetPattern};
use partition_cycle::{classify_cycle_structure, enumerate_cycles, partition_cycle};
use std::time::Instant;

fn main() {
    let filter = GraphFilter::connected_claw_free_subcubic();
    let n = 9;

    let t = Instant::now();
    let mut count = 0u64;
    for_each_graph(n, &filter, |_| count += 1).unwrap();
    println!("enumerate only: {count} in {:?}", t.elapsed());

    let t = Instant::now();
    let mut acc = 0u64;
    for_each_graph(n, &filter, |g| {
        acc += enumerate_cycles(g, 1_000_000).unwrap().len() as u64;
    })
    .unwrap();
    println!("+cycle enumeration: {acc} cycles in {:?}", t.elapsed());

    let t = Instant::now();
    let mut cases = 0u64;
    for_each_graph(n, &filter, |g| {
        if g.is_triangle_graph() {
            return;
        }
        cases += classify_cycle_structure(g).is_ok() as u64;
    })
    .unwrap();
    println!("+classify (top only): {cases} in {:?}", t.elapsed());

    let t = Instant::now();
    let mut ok = 0u64;
    for_each_graph(n, &filter, |g| {
        if g.is_triangle_graph() {
            return;
        }
        let c = partition_cycle(g).unwrap();
        ok += partition_passes(g, &c, TargetPattern::AnyCycle) as u64;
    })
    .unwrap();
    println!("full partition+verify: {ok} in {:?}", t.elapsed());
}
