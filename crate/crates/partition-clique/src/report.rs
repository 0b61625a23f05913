//! Errors and the proof-gap artifact.
//!
//! A `ProofGapReport` means a constructed coloring failed its verification
//! gate. That is never swallowed: it carries everything needed to replay
//! the failure by hand.

use graph_core::{emit_graph6, Graph};
use isolation_verify::{Certificate, Coloring};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliquePartitionError {
    #[error("the construction needs k >= 3, got k = {k}")]
    InvalidK { k: usize },
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("maximum degree {max_degree} exceeds k = {k}")]
    DegreeTooHigh { max_degree: usize, k: usize },
    #[error("input is the complete graph on {k} vertices, which has no such partition")]
    ExcludedCompleteGraph { k: usize },
    #[error("{0}")]
    ProofGap(Box<ProofGapReport>),
}

/// A verified failure of the construction. Zero of these across the full
/// sweeps is a build requirement; one of them is a finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofGapReport {
    pub graph: Graph,
    pub k: usize,
    pub stage: String,
    pub coloring: Option<Coloring>,
    pub certificate: Option<Certificate>,
    pub detail: String,
}

impl ProofGapReport {
    pub fn graph6(&self) -> String {
        emit_graph6(&self.graph).unwrap_or_else(|_| format!("{:?}", self.graph))
    }
}

impl fmt::Display for ProofGapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "proof gap at {} (k={}) on {}: {}",
            self.stage,
            self.k,
            self.graph6(),
            self.detail
        )?;
        if let Some(cert) = &self.certificate {
            write!(f, " [{cert}]")?;
        }
        Ok(())
    }
}

pub(crate) fn gap(
    graph: &Graph,
    k: usize,
    stage: &str,
    coloring: Option<Coloring>,
    certificate: Option<Certificate>,
    detail: impl Into<String>,
) -> CliquePartitionError {
    CliquePartitionError::ProofGap(Box::new(ProofGapReport {
        graph: graph.clone(),
        k,
        stage: stage.to_string(),
        coloring,
        certificate,
        detail: detail.into(),
    }))
}
