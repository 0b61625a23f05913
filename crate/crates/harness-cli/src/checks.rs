//! The per-graph checks the sweep engine runs.
//!
//! Checks backed by a proof are expected to pass on every graph in their
//! hypothesis class: a FAIL there is a toolkit bug or a refutation of
//! published work, and either is worth a loud artifact. Checks probing
//! conjectures report "consistent" language instead; a FAIL is a genuine
//! counterexample and gets surfaced prominently rather than failing the
//! sweep.

use crate::planar::is_planar;
use graph_core::{Graph, GraphFamily};
use isolation_exact::{
    check_iso_iota_bound_with_budget, clique_isomatic_k_partition, cycle_isomatic_3_partition,
    max_isomatic_with_budget, min_isolating_with_budget, SearchBudget,
};
use isolation_verify::{verify_partition, TargetPattern};
use partition_clique::partition_k_clique;
use partition_cycle::partition_cycle;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckVerdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "VACUOUS")]
    Vacuous,
    #[serde(rename = "ABORTED")]
    Aborted,
}

impl CheckVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckVerdict::Pass => "PASS",
            CheckVerdict::Fail => "FAIL",
            CheckVerdict::Vacuous => "VACUOUS",
            CheckVerdict::Aborted => "ABORTED",
        }
    }
}

/// How a PASS should be read: a proved statement re-confirmed, or a
/// conjecture that is merely consistent with this instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckBasis {
    #[serde(rename = "proved")]
    Proved,
    #[serde(rename = "conjectured")]
    Conjectured,
}

impl CheckBasis {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckBasis::Proved => "proved",
            CheckBasis::Conjectured => "conjectured",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub basis: CheckBasis,
    pub verdict: CheckVerdict,
    pub details: String,
}

impl CheckOutcome {
    fn pass(name: impl Into<String>, basis: CheckBasis, details: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            basis,
            verdict: CheckVerdict::Pass,
            details: details.into(),
        }
    }

    fn fail(name: impl Into<String>, basis: CheckBasis, details: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            basis,
            verdict: CheckVerdict::Fail,
            details: details.into(),
        }
    }

    fn vacuous(name: impl Into<String>, basis: CheckBasis, details: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            basis,
            verdict: CheckVerdict::Vacuous,
            details: details.into(),
        }
    }

    fn aborted(name: impl Into<String>, basis: CheckBasis, details: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            basis,
            verdict: CheckVerdict::Aborted,
            details: details.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckSelection {
    Bounds,
    Partitions,
    Conjectures,
    All,
}

impl CheckSelection {
    pub fn parse(text: &str) -> Result<Self, String> {
        match text {
            "bounds" => Ok(CheckSelection::Bounds),
            "partitions" => Ok(CheckSelection::Partitions),
            "conjectures" => Ok(CheckSelection::Conjectures),
            "all" => Ok(CheckSelection::All),
            other => Err(format!("unknown check selection {other:?}")),
        }
    }

    fn bounds(self) -> bool {
        matches!(self, CheckSelection::Bounds | CheckSelection::All)
    }

    fn partitions(self) -> bool {
        matches!(self, CheckSelection::Partitions | CheckSelection::All)
    }

    fn conjectures(self) -> bool {
        matches!(self, CheckSelection::Conjectures | CheckSelection::All)
    }
}

pub struct CheckContext {
    pub selection: CheckSelection,
    pub k_values: Vec<usize>,
    pub min_budget: SearchBudget,
    pub iso_budget: SearchBudget,
}

impl CheckContext {
    pub fn new(selection: CheckSelection, k_values: Vec<usize>, node_budget: u64) -> Self {
        CheckContext {
            selection,
            k_values,
            min_budget: SearchBudget::new(SearchBudget::for_min_isolating().max_n, node_budget),
            iso_budget: SearchBudget::new(SearchBudget::for_isomatic().max_n, node_budget),
        }
    }

    /// Runs every selected check on one graph.
    pub fn run(&self, g: &Graph) -> Vec<CheckOutcome> {
        let mut out = Vec::new();
        if self.selection.bounds() {
            out.push(self.isolation_bound(g));
            for &k in &self.k_values {
                out.push(self.clique_isolation_bound(g, k));
            }
            out.push(self.cycle_isolation_bound(g));
            for target in [
                TargetPattern::ISOLATION,
                TargetPattern::KClique(3),
                TargetPattern::AnyCycle,
            ] {
                out.push(self.iso_iota_product(g, target));
            }
        }
        if self.selection.partitions() {
            for &k in &self.k_values {
                out.push(self.clique_partition(g, k));
                out.push(self.clique_isomatic_construction(g, k));
            }
            out.push(self.cycle_partition(g));
            out.push(self.cycle_isomatic_construction(g));
        }
        if self.selection.conjectures() {
            for &k in &self.k_values {
                out.push(self.clique_isomatic_lower_bound(g, k));
            }
            out.push(self.cycle_isomatic_lower_bound(g));
            out.push(self.planar_cycle_isomatic_lower_bound(g));
        }
        out
    }

    /// iota(G) <= n/3 for connected graphs other than K_2 and C_5.
    fn isolation_bound(&self, g: &Graph) -> CheckOutcome {
        const NAME: &str = "isolation_bound_third";
        let tag = g.recognize();
        let excluded = (g.n() == 2 && g.edge_count() == 1)
            || (tag.family == GraphFamily::Cycle && tag.order == 5);
        if !g.is_connected() || g.n() == 0 || excluded {
            return CheckOutcome::vacuous(NAME, CheckBasis::Proved, "outside hypothesis class");
        }
        match min_isolating_with_budget(g, TargetPattern::ISOLATION, &self.min_budget) {
            Err(e) => CheckOutcome::aborted(NAME, CheckBasis::Proved, e.to_string()),
            Ok(r) if 3 * r.value <= g.n() => {
                CheckOutcome::pass(NAME, CheckBasis::Proved, format!("iota={} n={}", r.value, g.n()))
            }
            Ok(r) => CheckOutcome::fail(
                NAME,
                CheckBasis::Proved,
                format!("iota={} exceeds n/3 with n={}", r.value, g.n()),
            ),
        }
    }

    /// iota(G, k) <= n/(k+1) for connected graphs other than K_k.
    fn clique_isolation_bound(&self, g: &Graph, k: usize) -> CheckOutcome {
        let name = format!("clique_isolation_bound_k{k}");
        if !g.is_connected() || g.n() == 0 || g.is_k_clique_graph(k) {
            return CheckOutcome::vacuous(name, CheckBasis::Proved, "outside hypothesis class");
        }
        match min_isolating_with_budget(g, TargetPattern::KClique(k), &self.min_budget) {
            Err(e) => CheckOutcome::aborted(name, CheckBasis::Proved, e.to_string()),
            Ok(r) if (k + 1) * r.value <= g.n() => CheckOutcome::pass(
                name,
                CheckBasis::Proved,
                format!("iota={} n={}", r.value, g.n()),
            ),
            Ok(r) => CheckOutcome::fail(
                name,
                CheckBasis::Proved,
                format!("iota={} exceeds n/{} with n={}", r.value, k + 1, g.n()),
            ),
        }
    }

    /// iota_c(G) <= n/4 for connected graphs other than C_3.
    fn cycle_isolation_bound(&self, g: &Graph) -> CheckOutcome {
        const NAME: &str = "cycle_isolation_bound_quarter";
        if !g.is_connected() || g.n() == 0 || g.is_triangle_graph() {
            return CheckOutcome::vacuous(NAME, CheckBasis::Proved, "outside hypothesis class");
        }
        match min_isolating_with_budget(g, TargetPattern::AnyCycle, &self.min_budget) {
            Err(e) => CheckOutcome::aborted(NAME, CheckBasis::Proved, e.to_string()),
            Ok(r) if 4 * r.value <= g.n() => {
                CheckOutcome::pass(NAME, CheckBasis::Proved, format!("iota_c={} n={}", r.value, g.n()))
            }
            Ok(r) => CheckOutcome::fail(
                NAME,
                CheckBasis::Proved,
                format!("iota_c={} exceeds n/4 with n={}", r.value, g.n()),
            ),
        }
    }

    /// iso * iota <= n, vacuous on pattern-free graphs.
    fn iso_iota_product(&self, g: &Graph, target: TargetPattern) -> CheckOutcome {
        let name = format!("iso_iota_product_{}", slug(target));
        match check_iso_iota_bound_with_budget(g, target, &self.min_budget, &self.iso_budget) {
            Err(e) => CheckOutcome::aborted(name, CheckBasis::Proved, e.to_string()),
            Ok(b) if b.vacuous => {
                CheckOutcome::vacuous(name, CheckBasis::Proved, "pattern-free graph")
            }
            Ok(b) if b.holds => CheckOutcome::pass(
                name,
                CheckBasis::Proved,
                format!("iso={:?} iota={} n={}", b.iso, b.iota, g.n()),
            ),
            Ok(b) => CheckOutcome::fail(
                name,
                CheckBasis::Proved,
                format!("iso={:?} iota={} n={}", b.iso, b.iota, g.n()),
            ),
        }
    }

    /// The constructive (k+1)-class clique-isolation partition, verified.
    fn clique_partition(&self, g: &Graph, k: usize) -> CheckOutcome {
        let name = format!("clique_partition_k{k}");
        if !g.is_connected() || g.n() == 0 || g.max_degree() > k || g.is_k_clique_graph(k) {
            return CheckOutcome::vacuous(name, CheckBasis::Proved, "outside hypothesis class");
        }
        match partition_k_clique(g, k) {
            Ok(coloring) => {
                let cert = verify_partition(g, &coloring, TargetPattern::KClique(k));
                if cert.passed() {
                    CheckOutcome::pass(name, CheckBasis::Proved, "verified coloring")
                } else {
                    CheckOutcome::fail(name, CheckBasis::Proved, format!("bad coloring: {cert}"))
                }
            }
            Err(e) => CheckOutcome::fail(name, CheckBasis::Proved, format!("proof gap: {e}")),
        }
    }

    /// The constructive 4-class cycle-isolation partition, verified.
    fn cycle_partition(&self, g: &Graph) -> CheckOutcome {
        const NAME: &str = "cycle_partition_four";
        if !g.is_connected()
            || g.n() == 0
            || g.max_degree() > 3
            || !g.is_claw_free()
            || g.is_triangle_graph()
        {
            return CheckOutcome::vacuous(NAME, CheckBasis::Proved, "outside hypothesis class");
        }
        match partition_cycle(g) {
            Ok(coloring) => {
                let cert = verify_partition(g, &coloring, TargetPattern::AnyCycle);
                if cert.passed() {
                    CheckOutcome::pass(NAME, CheckBasis::Proved, "verified coloring")
                } else {
                    CheckOutcome::fail(NAME, CheckBasis::Proved, format!("bad coloring: {cert}"))
                }
            }
            Err(e) => CheckOutcome::fail(NAME, CheckBasis::Proved, format!("proof gap: {e}")),
        }
    }

    /// The universal k-class clique-isomatic construction, verified.
    fn clique_isomatic_construction(&self, g: &Graph, k: usize) -> CheckOutcome {
        let name = format!("clique_isomatic_construction_k{k}");
        let coloring = clique_isomatic_k_partition(g, k);
        let cert = verify_partition(g, &coloring, TargetPattern::KClique(k));
        if cert.passed() {
            CheckOutcome::pass(name, CheckBasis::Proved, format!("iso(G,{k}) >= {k}"))
        } else {
            CheckOutcome::fail(name, CheckBasis::Proved, format!("bad construction: {cert}"))
        }
    }

    /// The universal 3-class cycle-isomatic construction, verified.
    fn cycle_isomatic_construction(&self, g: &Graph) -> CheckOutcome {
        const NAME: &str = "cycle_isomatic_construction_three";
        let coloring = cycle_isomatic_3_partition(g);
        let cert = verify_partition(g, &coloring, TargetPattern::AnyCycle);
        if cert.passed() {
            CheckOutcome::pass(NAME, CheckBasis::Proved, "iso_c(G) >= 3")
        } else {
            CheckOutcome::fail(NAME, CheckBasis::Proved, format!("bad construction: {cert}"))
        }
    }

    /// Conjecture probe: iso(G, k) >= k + 1 for connected graphs != K_k.
    fn clique_isomatic_lower_bound(&self, g: &Graph, k: usize) -> CheckOutcome {
        let name = format!("clique_isomatic_lower_bound_k{k}");
        if !g.is_connected() || g.n() == 0 || g.is_k_clique_graph(k) {
            return CheckOutcome::vacuous(name, CheckBasis::Conjectured, "outside hypothesis class");
        }
        match max_isomatic_with_budget(g, TargetPattern::KClique(k), &self.iso_budget) {
            Err(e) => CheckOutcome::aborted(name, CheckBasis::Conjectured, e.to_string()),
            Ok(r) if r.value.at_least(k + 1) => CheckOutcome::pass(
                name,
                CheckBasis::Conjectured,
                format!("consistent: iso={:?} >= {}", r.value, k + 1),
            ),
            Ok(r) => CheckOutcome::fail(
                name,
                CheckBasis::Conjectured,
                format!("counterexample: iso={:?} < {}", r.value, k + 1),
            ),
        }
    }

    /// Conjecture probe: iso_c(G) >= 4 for connected graphs != C_3.
    fn cycle_isomatic_lower_bound(&self, g: &Graph) -> CheckOutcome {
        const NAME: &str = "cycle_isomatic_lower_bound_four";
        if !g.is_connected() || g.n() == 0 || g.is_triangle_graph() {
            return CheckOutcome::vacuous(NAME, CheckBasis::Conjectured, "outside hypothesis class");
        }
        match max_isomatic_with_budget(g, TargetPattern::AnyCycle, &self.iso_budget) {
            Err(e) => CheckOutcome::aborted(NAME, CheckBasis::Conjectured, e.to_string()),
            Ok(r) if r.value.at_least(4) => CheckOutcome::pass(
                NAME,
                CheckBasis::Conjectured,
                format!("consistent: iso_c={:?} >= 4", r.value),
            ),
            Ok(r) => CheckOutcome::fail(
                NAME,
                CheckBasis::Conjectured,
                format!("counterexample: iso_c={:?} < 4", r.value),
            ),
        }
    }

    /// Conjecture probe restricted to planar inputs.
    fn planar_cycle_isomatic_lower_bound(&self, g: &Graph) -> CheckOutcome {
        const NAME: &str = "planar_cycle_isomatic_lower_bound_four";
        if !g.is_connected() || g.n() == 0 || g.is_triangle_graph() || !is_planar(g) {
            return CheckOutcome::vacuous(NAME, CheckBasis::Conjectured, "outside hypothesis class");
        }
        match max_isomatic_with_budget(g, TargetPattern::AnyCycle, &self.iso_budget) {
            Err(e) => CheckOutcome::aborted(NAME, CheckBasis::Conjectured, e.to_string()),
            Ok(r) if r.value.at_least(4) => CheckOutcome::pass(
                NAME,
                CheckBasis::Conjectured,
                format!("consistent on planar input: iso_c={:?} >= 4", r.value),
            ),
            Ok(r) => CheckOutcome::fail(
                NAME,
                CheckBasis::Conjectured,
                format!("counterexample: iso_c={:?} < 4", r.value),
            ),
        }
    }
}

fn slug(target: TargetPattern) -> String {
    match target {
        TargetPattern::KClique(k) => format!("kclique{k}"),
        TargetPattern::AnyCycle => "cycle".into(),
    }
}
