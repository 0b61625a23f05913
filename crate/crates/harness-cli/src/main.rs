//! `isokit`: verify isolating partitions, compute exact isolation and
//! isomatic numbers, build the constructive partitions, and sweep graph
//! batches against every bound and conjecture check.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use graph_core::{Graph, GraphFilter};
use harness_cli::{
    parse_coloring, read_graphs, run_sweep, CheckSelection, InputSource, RunConfig,
};
use isolation_exact::{
    max_isomatic_with_budget, min_isolating_with_budget, IsomaticValue, SearchBudget,
};
use isolation_verify::{verify_partition, Certificate, Coloring, TargetPattern};
use partition_clique::partition_k_clique;
use partition_cycle::partition_cycle;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "isokit", about = "isolation partition toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file: graph6 records (one per line) or a single edge list.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generate all labeled graphs on this many vertices instead.
    #[arg(long, value_name = "N")]
    gen_n: Option<usize>,
    /// Keep only connected graphs (generation only).
    #[arg(long)]
    gen_connected: bool,
    /// Cap the maximum degree (generation only).
    #[arg(long, value_name = "D")]
    gen_max_degree: Option<usize>,
    /// Keep only claw-free graphs (generation only).
    #[arg(long)]
    gen_claw_free: bool,
}

impl GraphInput {
    fn filter(&self) -> GraphFilter {
        GraphFilter {
            connected: self.gen_connected,
            max_degree: self.gen_max_degree,
            claw_free: self.gen_claw_free,
        }
    }

    fn source(&self) -> Result<InputSource> {
        match (&self.input, self.gen_n) {
            (Some(path), None) => Ok(InputSource::File(path.clone())),
            (None, Some(n)) => Ok(InputSource::Generate {
                n,
                filter: self.filter(),
            }),
            _ => bail!("choose exactly one of --input or --gen-n"),
        }
    }

    /// The single graph a per-graph command operates on.
    fn one_graph(&self) -> Result<Graph> {
        match (&self.input, self.gen_n) {
            (Some(path), None) => {
                let graphs = read_graphs(path)?;
                graphs
                    .into_iter()
                    .next()
                    .ok_or_else(|| anyhow!("no graphs in {}", path.display()))
            }
            _ => bail!("this command needs --input with a single graph"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring file against a graph and target pattern.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Coloring file: JSON {"m":4,"colors":[...]} or a bare color list.
        #[arg(long)]
        coloring: PathBuf,
        /// Target pattern: kclique:<k>, cycle, or dominate.
        #[arg(long)]
        target: String,
    },
    /// Build a verified isolation partition of the input graph.
    Partition {
        #[command(flatten)]
        graph: GraphInput,
        /// Partition mode: clique (uses --k) or cycle.
        #[arg(long)]
        mode: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Exact minimum isolating set.
    Iota {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        target: String,
        /// Node budget for the search.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Exact isomatic number (maximum isolating partition size).
    Isomatic {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Run the selected checks over a batch of graphs.
    Sweep {
        #[command(flatten)]
        graph: GraphInput,
        /// Which checks to run: bounds, partitions, conjectures, or all.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Clique sizes for the k-parameterized checks.
        #[arg(long = "k", value_name = "K")]
        k_values: Vec<usize>,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Worker threads (0 = use every core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format.
        #[arg(long, default_value = "json")]
        format: String,
        /// Cap on per-graph records kept in the report.
        #[arg(long, default_value_t = 1000)]
        max_records: usize,
    },
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Verify {
            graph,
            coloring,
            target,
        } => {
            let g = graph.one_graph()?;
            let target = TargetPattern::parse(&target).map_err(|e| anyhow!(e))?;
            let text = std::fs::read_to_string(&coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let coloring = parse_coloring(&text)?;
            if coloring.n() != g.n() {
                bail!(
                    "coloring covers {} vertices but the graph has {}",
                    coloring.n(),
                    g.n()
                );
            }
            let cert = verify_partition(&g, &coloring, target);
            println!("{}", cert.to_json());
            Ok(if cert.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Partition { graph, mode, k } => {
            let g = graph.one_graph()?;
            let (coloring, target): (Coloring, TargetPattern) = match mode.as_str() {
                "clique" => match partition_k_clique(&g, k) {
                    Ok(c) => (c, TargetPattern::KClique(k)),
                    Err(e) => return partition_failure(e.to_string(), precondition_exit(&e)),
                },
                "cycle" => match partition_cycle(&g) {
                    Ok(c) => (c, TargetPattern::AnyCycle),
                    Err(e) => return partition_failure(e.to_string(), cycle_precondition_exit(&e)),
                },
                other => bail!("unknown mode {other:?} (expected clique or cycle)"),
            };
            let certificate: Certificate = verify_partition(&g, &coloring, target);
            let payload = json!({
                "n": g.n(),
                "m": coloring.num_classes(),
                "colors": coloring.colors(),
                "certificate": certificate,
            });
            println!("{}", serde_json::to_string(&payload)?);
            Ok(if certificate.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Iota {
            graph,
            target,
            budget,
        } => {
            let g = graph.one_graph()?;
            let target = TargetPattern::parse(&target).map_err(|e| anyhow!(e))?;
            let budget = SearchBudget::new(SearchBudget::for_min_isolating().max_n, budget);
            let payload = match min_isolating_with_budget(&g, target, &budget) {
                Ok(r) => json!({
                    "value": r.value,
                    "witness": r.witness.to_vec(),
                    "aborted": false,
                }),
                Err(e) => json!({ "aborted": true, "reason": e.to_string() }),
            };
            println!("{}", serde_json::to_string(&payload)?);
            Ok(ExitCode::SUCCESS)
        }

        Command::Isomatic {
            graph,
            target,
            budget,
        } => {
            let g = graph.one_graph()?;
            let target = TargetPattern::parse(&target).map_err(|e| anyhow!(e))?;
            let budget = SearchBudget::new(SearchBudget::for_isomatic().max_n, budget);
            let payload = match max_isomatic_with_budget(&g, target, &budget) {
                Ok(r) => {
                    let value = match r.value {
                        IsomaticValue::Unbounded => json!("unbounded"),
                        IsomaticValue::Finite(v) => json!(v),
                    };
                    json!({
                        "value": value,
                        "witness_coloring": r.witness.colors(),
                        "witness_classes": r.witness.num_classes(),
                        "aborted": false,
                    })
                }
                Err(e) => json!({ "aborted": true, "reason": e.to_string() }),
            };
            println!("{}", serde_json::to_string(&payload)?);
            Ok(ExitCode::SUCCESS)
        }

        Command::Sweep {
            graph,
            checks,
            k_values,
            budget,
            jobs,
            out,
            format,
            max_records,
        } => {
            let selection = CheckSelection::parse(&checks).map_err(|e| anyhow!(e))?;
            let config = RunConfig {
                source: graph.source()?,
                selection,
                k_values: if k_values.is_empty() { vec![3] } else { k_values },
                node_budget: budget,
                jobs,
                max_records,
            };
            let report = run_sweep(&config)?;
            let rendered = match format.as_str() {
                "json" => report.to_json(),
                "tsv" => report.to_tsv(),
                other => bail!("unknown format {other:?} (expected json or tsv)"),
            };
            match &out {
                Some(path) => {
                    std::fs::write(path, rendered)
                        .with_context(|| format!("writing {}", path.display()))?;
                    if !report.counterexamples.is_empty() {
                        let artifact = report.write_counterexample_artifact(path)?;
                        eprintln!(
                            "counterexamples found: {} (details in {})",
                            report.counterexamples.len(),
                            artifact.display()
                        );
                    }
                }
                None => {
                    println!("{rendered}");
                    if !report.counterexamples.is_empty() {
                        eprintln!("counterexamples found: {}", report.counterexamples.len());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn partition_failure(message: String, precondition: bool) -> Result<ExitCode> {
    eprintln!("{message}");
    Ok(if precondition {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    })
}

fn precondition_exit(e: &partition_clique::CliquePartitionError) -> bool {
    !matches!(e, partition_clique::CliquePartitionError::ProofGap(_))
}

fn cycle_precondition_exit(e: &partition_cycle::CyclePartitionError) -> bool {
    !matches!(
        e,
        partition_cycle::CyclePartitionError::ProofGap(_)
            | partition_cycle::CyclePartitionError::CycleBudget(_)
    )
}
