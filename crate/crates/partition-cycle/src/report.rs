//! Errors and the proof-gap artifact for the cycle-isolation construction.

use crate::cycles::CycleBudgetExceeded;
use graph_core::{emit_graph6, Graph};
use isolation_verify::{Certificate, Coloring};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclePartitionError {
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph contains a claw (an induced three-leaf star)")]
    NotClawFree,
    #[error("maximum degree {max_degree} exceeds 3")]
    NotSubcubic { max_degree: usize },
    #[error("input is the triangle, which has no such partition")]
    ExcludedTriangle,
    #[error(transparent)]
    CycleBudget(#[from] CycleBudgetExceeded),
    #[error("{0}")]
    ProofGap(Box<ProofGapReport>),
}

/// A verified failure of the construction, kept loud and replayable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofGapReport {
    pub graph: Graph,
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
            "proof gap at {} on {}: {}",
            self.stage,
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
    stage: &str,
    coloring: Option<Coloring>,
    certificate: Option<Certificate>,
    detail: impl Into<String>,
) -> CyclePartitionError {
    CyclePartitionError::ProofGap(Box::new(ProofGapReport {
        graph: graph.clone(),
        stage: stage.to_string(),
        coloring,
        certificate,
        detail: detail.into(),
    }))
}
