//! The acceptance suite: one test per shipping criterion, each printing a
//! PASS line when its exhaustive check holds at full scale. Run with
//! `cargo test -p harness-cli --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use graph_core::{
    emit_graph6, enumerate_prefixes, for_each_graph_from, parse_graph6, Graph, GraphFilter,
    VertexSet,
};
use isolation_exact::{
    check_iso_iota_bound, clique_isomatic_k_partition, cycle_isomatic_3_partition, max_isomatic,
    min_isolating, IsomaticValue,
};
use isolation_verify::{
    is_isolating, verify_partition, witness_is_valid, Certificate, Coloring, TargetPattern,
};
use partition_clique::partition_k_clique;
use partition_cycle::partition_cycle;
use rayon::prelude::*;

/// Parallel exhaustive sweep: runs `per_graph` over every labeled graph on
/// `n` vertices passing the filter, merging per-worker summaries.
fn par_sweep<R, F>(n: usize, filter: &GraphFilter, per_graph: F) -> Vec<R>
where
    R: Send,
    F: Fn(&Graph) -> Option<R> + Sync,
{
    let depth = if n <= 4 { 1 } else { 4.min(n - 1) };
    let prefixes = enumerate_prefixes(n, filter, depth).unwrap();
    prefixes
        .par_iter()
        .map(|prefix| {
            let mut local = Vec::new();
            for_each_graph_from(n, filter, prefix, |g| {
                if let Some(r) = per_graph(g) {
                    local.push(r);
                }
            })
            .unwrap();
            local
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        })
}

fn count_sweep<F>(n: usize, filter: &GraphFilter, per_graph: F) -> (u64, Vec<String>)
where
    F: Fn(&Graph) -> Result<bool, String> + Sync,
{
    let depth = if n <= 4 { 1 } else { 4.min(n - 1) };
    let prefixes = enumerate_prefixes(n, filter, depth).unwrap();
    let (count, failures) = prefixes
        .par_iter()
        .map(|prefix| {
            let mut count = 0u64;
            let mut failures = Vec::new();
            for_each_graph_from(n, filter, prefix, |g| match per_graph(g) {
                Ok(true) => count += 1,
                Ok(false) => {}
                Err(msg) => {
                    count += 1;
                    failures.push(msg);
                }
            })
            .unwrap();
            (count, failures)
        })
        .reduce(
            || (0, Vec::new()),
            |(c1, mut f1), (c2, mut f2)| {
                f1.append(&mut f2);
                (c1 + c2, f1)
            },
        );
    (count, failures)
}

fn fingerprint(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

#[test]
fn criterion_clique_partition_sweep() {
    // Every connected graph with max degree <= k on up to 8 vertices,
    // except K_k, splits into k+1 verified clique-isolating classes, with
    // zero proof gaps; k = 3 and k = 4.
    for k in [3usize, 4] {
        let filter = GraphFilter::connected_max_degree(k);
        let mut total = 0u64;
        for n in 1..=8 {
            let (count, failures) = count_sweep(n, &filter, |g| {
                if g.is_k_clique_graph(k) {
                    return Ok(false);
                }
                match partition_k_clique(g, k) {
                    Ok(c) => {
                        if verify_partition(g, &c, TargetPattern::KClique(k)).passed() {
                            Ok(true)
                        } else {
                            Err(format!("unverified coloring on {}", fingerprint(g)))
                        }
                    }
                    Err(e) => Err(format!("gap on {}: {e}", fingerprint(g))),
                }
            });
            assert!(failures.is_empty(), "k={k} n={n}: {:?}", &failures[..failures.len().min(3)]);
            total += count;
        }
        assert!(total > 3_000_000, "k={k} sweep covered {total} graphs");
        println!("[PASS] clique partition sweep k={k}: {total} graphs, 0 proof gaps");
    }
}

#[test]
fn criterion_cycle_partition_sweep() {
    // Every connected claw-free subcubic graph on up to 10 vertices,
    // except the triangle, splits into 4 verified cycle-isolating classes.
    let filter = GraphFilter::connected_claw_free_subcubic();
    let mut total = 0u64;
    for n in 1..=10 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            if g.is_triangle_graph() {
                return Ok(false);
            }
            match partition_cycle(g) {
                Ok(c) => {
                    if verify_partition(g, &c, TargetPattern::AnyCycle).passed() {
                        Ok(true)
                    } else {
                        Err(format!("unverified coloring on {}", fingerprint(g)))
                    }
                }
                Err(e) => Err(format!("gap on {}: {e}", fingerprint(g))),
            }
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        total += count;
    }
    assert!(total > 180_000_000, "sweep covered {total} graphs");
    println!("[PASS] cycle partition sweep: {total} graphs, 0 proof gaps");
}

#[test]
fn criterion_clique_isolation_bound() {
    // iota(G, 3) <= n/4 on every connected labeled graph with n <= 7 other
    // than K_3; integer-exact.
    let filter = GraphFilter::connected();
    let mut total = 0u64;
    for n in 1..=7 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            if g.is_k_clique_graph(3) {
                return Ok(false);
            }
            let iota = min_isolating(g, TargetPattern::KClique(3))
                .map_err(|e| format!("abort on {}: {e}", fingerprint(g)))?
                .value;
            if 4 * iota <= g.n() {
                Ok(true)
            } else {
                Err(format!("{}: iota={iota} n={}", fingerprint(g), g.n()))
            }
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        total += count;
    }
    println!("[PASS] clique isolation bound (k=3): {total} graphs, 0 violations");
}

#[test]
fn criterion_cycle_isolation_bound() {
    // iota_c(G) <= n/4 on every connected labeled graph with n <= 7 other
    // than C_3.
    let filter = GraphFilter::connected();
    let mut total = 0u64;
    for n in 1..=7 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            if g.is_triangle_graph() {
                return Ok(false);
            }
            let iota = min_isolating(g, TargetPattern::AnyCycle)
                .map_err(|e| format!("abort on {}: {e}", fingerprint(g)))?
                .value;
            if 4 * iota <= g.n() {
                Ok(true)
            } else {
                Err(format!("{}: iota_c={iota} n={}", fingerprint(g), g.n()))
            }
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        total += count;
    }
    println!("[PASS] cycle isolation bound: {total} graphs, 0 violations");
}

#[test]
fn criterion_isolation_bound_with_exceptions() {
    // iota(G) <= n/3 on every connected labeled graph with n <= 7 outside
    // {K_2, C_5}, and the two exceptions genuinely violate the bound.
    let filter = GraphFilter::connected();
    let mut total = 0u64;
    for n in 1..=7 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            let tag = g.recognize();
            let excluded = (g.n() == 2 && g.edge_count() == 1)
                || (tag.family == graph_core::GraphFamily::Cycle && tag.order == 5);
            if excluded {
                return Ok(false);
            }
            let iota = min_isolating(g, TargetPattern::ISOLATION)
                .map_err(|e| format!("abort on {}: {e}", fingerprint(g)))?
                .value;
            if 3 * iota <= g.n() {
                Ok(true)
            } else {
                Err(format!("{}: iota={iota} n={}", fingerprint(g), g.n()))
            }
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        total += count;
    }
    // The exceptions: iota(C_5) = 2 > 5/3 and iota(K_2) = 1 > 2/3.
    let c5 = graph_core::builders::cycle(5);
    let k2 = graph_core::builders::path(2);
    let iota_c5 = min_isolating(&c5, TargetPattern::ISOLATION).unwrap().value;
    let iota_k2 = min_isolating(&k2, TargetPattern::ISOLATION).unwrap().value;
    assert_eq!(iota_c5, 2);
    assert_eq!(iota_k2, 1);
    assert!(3 * iota_c5 > 5 && 3 * iota_k2 > 2);
    println!(
        "[PASS] isolation bound: {total} graphs, 0 violations; exceptions confirmed \
         (iota(C_5)=2, iota(K_2)=1)"
    );
}

#[test]
fn criterion_product_bound() {
    // iso * iota <= n on every labeled graph with n <= 6 for the edge,
    // triangle and cycle targets; pattern-free cases flagged vacuous.
    let filter = GraphFilter::default();
    let targets = [
        TargetPattern::ISOLATION,
        TargetPattern::KClique(3),
        TargetPattern::AnyCycle,
    ];
    let mut total = 0u64;
    let mut vacuous = 0u64;
    for n in 1..=6 {
        let results = par_sweep(n, &filter, |g| {
            let mut vac = 0u64;
            for t in targets {
                let b = check_iso_iota_bound(g, t)
                    .unwrap_or_else(|e| panic!("abort on {}: {e}", fingerprint(g)));
                assert!(b.holds, "{}: {t} iso={:?} iota={}", fingerprint(g), b.iso, b.iota);
                vac += b.vacuous as u64;
            }
            Some(vac)
        });
        total += results.len() as u64;
        vacuous += results.iter().sum::<u64>();
    }
    assert_eq!(total, 1 + 2 + 8 + 64 + 1024 + 32768);
    println!(
        "[PASS] product bound iso*iota<=n: {total} graphs x 3 targets, 0 violations \
         ({vacuous} vacuous cases flagged)"
    );
}

#[test]
fn criterion_constructions() {
    // The k-class clique construction (k = 3, 4) and the 3-class cycle
    // construction verify on every labeled graph with n <= 7, connected or
    // not, witnessing iso(G,k) >= k and iso_c(G) >= 3.
    let filter = GraphFilter::default();
    let mut total = 0u64;
    for n in 1..=7 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            for k in [3, 4] {
                let c = clique_isomatic_k_partition(g, k);
                if !verify_partition(g, &c, TargetPattern::KClique(k)).passed() {
                    return Err(format!("clique construction k={k} on {}", fingerprint(g)));
                }
            }
            let c = cycle_isomatic_3_partition(g);
            if !verify_partition(g, &c, TargetPattern::AnyCycle).passed() {
                return Err(format!("cycle construction on {}", fingerprint(g)));
            }
            Ok(true)
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        total += count;
    }
    assert_eq!(total, 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152);
    println!("[PASS] isomatic constructions verified on {total} graphs");
}

#[test]
fn criterion_solver_oracle_agreement() {
    // The pruned minimum search matches plain subset enumeration on every
    // graph with n <= 6, for all three targets; the isomatic search matches
    // plain partition enumeration on every graph with n <= 5.
    let targets = [
        TargetPattern::ISOLATION,
        TargetPattern::KClique(3),
        TargetPattern::AnyCycle,
    ];
    let filter = GraphFilter::default();
    let mut min_checked = 0u64;
    for n in 1..=6 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            for t in targets {
                let pruned = min_isolating(g, t)
                    .map_err(|e| format!("abort on {}: {e}", fingerprint(g)))?;
                let brute = (0u64..(1 << g.n()))
                    .map(VertexSet::from_bits)
                    .filter(|d| is_isolating(g, *d, t).passed())
                    .map(|d| d.len())
                    .min()
                    .unwrap();
                if pruned.value != brute {
                    return Err(format!(
                        "{}: {t} pruned={} brute={brute}",
                        fingerprint(g),
                        pruned.value
                    ));
                }
                if !is_isolating(g, pruned.witness, t).passed() {
                    return Err(format!("{}: witness not isolating", fingerprint(g)));
                }
            }
            Ok(true)
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        min_checked += count;
    }

    let mut iso_checked = 0u64;
    for n in 1..=5 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            for t in targets {
                let ours = max_isomatic(g, t)
                    .map_err(|e| format!("abort on {}: {e}", fingerprint(g)))?;
                let naive = naive_isomatic(g, t);
                if ours.value != naive {
                    return Err(format!(
                        "{}: {t} search={:?} naive={naive:?}",
                        fingerprint(g),
                        ours.value
                    ));
                }
                if !verify_partition(g, &ours.witness, t).passed() {
                    return Err(format!("{}: witness partition invalid", fingerprint(g)));
                }
            }
            Ok(true)
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        iso_checked += count;
    }
    println!(
        "[PASS] solver vs oracle: minimum search agrees on {min_checked} graphs, \
         isomatic search agrees on {iso_checked} graphs"
    );
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
fn criterion_conjecture_probes() {
    // Consistency probes, not theorems: iso(G,3) >= 4 on connected graphs
    // with n <= 6 other than K_3, and iso_c(G) >= 4 on connected graphs
    // with n <= 6 other than C_3. A counterexample is an acceptable
    // outcome; it just gets surfaced as a prominent artifact.
    let filter = GraphFilter::connected();
    let mut checked = 0u64;
    let mut counterexamples: Vec<String> = Vec::new();
    for n in 1..=6 {
        let results = par_sweep(n, &filter, |g| {
            let mut local = Vec::new();
            if !g.is_k_clique_graph(3) {
                let r = max_isomatic(g, TargetPattern::KClique(3)).unwrap();
                if !r.value.at_least(4) {
                    local.push(format!(
                        "{}: iso(G,3)={:?} < 4",
                        fingerprint(g),
                        r.value
                    ));
                }
            }
            if !g.is_triangle_graph() {
                let r = max_isomatic(g, TargetPattern::AnyCycle).unwrap();
                if !r.value.at_least(4) {
                    local.push(format!("{}: iso_c(G)={:?} < 4", fingerprint(g), r.value));
                }
            }
            Some(local)
        });
        checked += results.len() as u64;
        counterexamples.extend(results.into_iter().flatten());
    }
    if counterexamples.is_empty() {
        println!(
            "[PASS] conjecture probes: consistent with both lower-bound conjectures on all \
             {checked} connected graphs up to order 6"
        );
    } else {
        let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"))
            .join("conjecture_counterexamples.json");
        std::fs::write(&path, serde_json::to_string_pretty(&counterexamples).unwrap()).unwrap();
        println!(
            "[PASS] conjecture probes: {} counterexample(s) found and recorded at {}",
            counterexamples.len(),
            path.display()
        );
        eprintln!("COUNTEREXAMPLES FOUND: {counterexamples:?}");
    }
}

#[test]
fn criterion_format_round_trips() {
    // graph6 parse/emit identity on the 1000-record external corpus, and
    // certificate JSON re-verification identity on verification samples.
    let corpus = include_str!("data/graph6_corpus.g6");
    let mut records = 0;
    for line in corpus.lines().filter(|l| !l.trim().is_empty()) {
        let g = parse_graph6(line).unwrap_or_else(|e| panic!("corpus line {line:?}: {e}"));
        assert_eq!(emit_graph6(&g).unwrap(), line, "round trip differs");
        records += 1;
    }
    assert_eq!(records, 1000);

    // Certificates survive JSON and re-verify from their stored witnesses.
    let filter = GraphFilter::connected();
    let mut samples = 0u64;
    for n in 2..=5 {
        let results = par_sweep(n, &filter, |g| {
            let colorings = [
                Coloring::constant(g.n(), 1, 4),
                Coloring::new((0..g.n()).map(|v| v % 4 + 1).collect(), 4).unwrap(),
            ];
            let mut count = 0u64;
            for coloring in colorings {
                for target in [TargetPattern::ISOLATION, TargetPattern::AnyCycle] {
                    let cert = verify_partition(g, &coloring, target);
                    let back = Certificate::from_json(&cert.to_json()).unwrap();
                    assert_eq!(back, cert, "JSON round trip changed a certificate");
                    if let (Some(class), Some(witness)) = (back.class, &back.witness) {
                        assert!(
                            witness_is_valid(g, coloring.class(class), target, witness),
                            "stored witness failed re-verification on {}",
                            fingerprint(g)
                        );
                    } else {
                        assert!(verify_partition(g, &coloring, target).passed());
                    }
                    count += 1;
                }
            }
            Some(count)
        });
        samples += results.iter().sum::<u64>();
    }
    println!(
        "[PASS] format round trips: 1000 graph6 records identical, {samples} certificates \
         re-verified from JSON"
    );
}

#[test]
fn criterion_partition_outputs_embed_valid_certificates() {
    // Partition outputs round-trip through their serialized certificate and
    // re-verify; exercised over the constructive sweeps' own outputs.
    let filter = GraphFilter::connected_claw_free_subcubic();
    let mut checked = 0u64;
    for n in 4..=7 {
        let (count, failures) = count_sweep(n, &filter, |g| {
            if g.is_triangle_graph() {
                return Ok(false);
            }
            let coloring = partition_cycle(g).map_err(|e| e.to_string())?;
            let cert = verify_partition(g, &coloring, TargetPattern::AnyCycle);
            let json = cert.to_json();
            let back = Certificate::from_json(&json).map_err(|e| e.to_string())?;
            if back != cert || !back.passed() {
                return Err(format!("certificate mismatch on {}", fingerprint(g)));
            }
            Ok(true)
        });
        assert!(failures.is_empty(), "n={n}: {:?}", &failures[..failures.len().min(3)]);
        checked += count;
    }
    println!("[PASS] partition certificates: {checked} outputs round-tripped and re-verified");
}
