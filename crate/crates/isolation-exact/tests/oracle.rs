//! Solver-vs-oracle agreement on exhaustively enumerated small graphs.
//! (The full-scale agreement sweep lives in the harness acceptance suite;
//! this keeps a fast version close to the solvers.)

use graph_core::{for_each_graph, Graph, GraphFilter, VertexSet};
use isolation_verify::{is_isolating, verify_partition, TargetPattern};
use isolation_exact::{
    check_iso_iota_bound, clique_isomatic_k_partition, cycle_isomatic_3_partition,
    max_isomatic, min_isolating, IsomaticValue,
};

const TARGETS: [TargetPattern; 3] = [
    TargetPattern::ISOLATION,
    TargetPattern::KClique(3),
    TargetPattern::AnyCycle,
];

fn brute_force_min(g: &Graph, t: TargetPattern) -> usize {
    (0u64..(1 << g.n()))
        .map(VertexSet::from_bits)
        .filter(|d| is_isolating(g, *d, t).passed())
        .map(|d| d.len())
        .min()
        .expect("V always isolates")
}

#[test]
fn min_isolating_matches_subset_enumeration_to_n5() {
    for n in 1..=5 {
        for_each_graph(n, &GraphFilter::default(), |g| {
            for t in TARGETS {
                let pruned = min_isolating(g, t).unwrap();
                assert_eq!(pruned.value, brute_force_min(g, t), "{g:?} {t}");
                assert!(is_isolating(g, pruned.witness, t).passed());
            }
        })
        .unwrap();
    }
}

#[test]
fn max_isomatic_matches_partition_enumeration_to_n4() {
    for n in 1..=4 {
        for_each_graph(n, &GraphFilter::default(), |g| {
            for t in TARGETS {
                let ours = max_isomatic(g, t).unwrap();
                assert_eq!(ours.value, naive_isomatic(g, t), "{g:?} {t}");
                assert!(verify_partition(g, &ours.witness, t).passed());
            }
        })
        .unwrap();
    }
}

fn naive_isomatic(g: &Graph, t: TargetPattern) -> IsomaticValue {
    let patterned = match t {
        TargetPattern::KClique(k) => g.find_k_clique(k).is_some(),
        TargetPattern::AnyCycle => g.find_cycle().is_some(),
    };
    if !patterned {
        return IsomaticValue::Unbounded;
    }
    let n = g.n();
    let mut best = 0usize;
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().copied().max().unwrap() + 1;
        if blocks > best {
            let ok = (0..blocks).all(|b| {
                let class: VertexSet = (0..n).filter(|&v| rgs[v] == b).collect();
                is_isolating(g, class, t).passed()
            });
            if ok {
                best = blocks;
            }
        }
        let mut i = n;
        loop {
            if i == 1 {
                return IsomaticValue::Finite(best);
            }
            i -= 1;
            let cap = rgs[..i].iter().copied().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for x in rgs[(i + 1)..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

#[test]
fn constructions_verify_exhaustively_to_n5() {
    for n in 1..=5 {
        for_each_graph(n, &GraphFilter::default(), |g| {
            for k in [3, 4] {
                let c = clique_isomatic_k_partition(g, k);
                assert!(
                    verify_partition(g, &c, TargetPattern::KClique(k)).passed(),
                    "clique construction failed: {g:?} k={k}"
                );
            }
            let c = cycle_isomatic_3_partition(g);
            assert!(
                verify_partition(g, &c, TargetPattern::AnyCycle).passed(),
                "cycle construction failed: {g:?}"
            );
        })
        .unwrap();
    }
}

#[test]
fn product_bound_holds_exhaustively_to_n5() {
    for n in 1..=5 {
        for_each_graph(n, &GraphFilter::default(), |g| {
            for t in TARGETS {
                let b = check_iso_iota_bound(g, t).unwrap();
                assert!(b.holds, "product bound violated: {g:?} {t} {b:?}");
            }
        })
        .unwrap();
    }
}
