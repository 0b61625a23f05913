//! Explicit search budgets. Exceeding one aborts loudly; the solvers never
//! return a number they have not proved.

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest graph order the search will attempt.
    pub max_n: usize,
    /// Node expansions allowed before aborting.
    pub max_nodes: u64,
}

impl SearchBudget {
    pub fn new(max_n: usize, max_nodes: u64) -> Self {
        assert!(max_n > 0 && max_nodes > 0, "budgets must be positive");
        SearchBudget { max_n, max_nodes }
    }

    /// Default guard for minimum-isolating-set search.
    pub fn for_min_isolating() -> Self {
        SearchBudget {
            max_n: 32,
            max_nodes: 50_000_000,
        }
    }

    /// Default guard for isomatic (partition) search.
    pub fn for_isomatic() -> Self {
        SearchBudget {
            max_n: 12,
            max_nodes: 50_000_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchAborted {
    #[error("graph order {n} exceeds the search guard of {max_n} vertices")]
    OrderTooLarge { n: usize, max_n: usize },
    #[error("search aborted after {max_nodes} node expansions")]
    NodeBudgetExceeded { max_nodes: u64 },
}

/// Shared node counter for the recursive searches.
pub(crate) struct NodeMeter {
    used: u64,
    limit: u64,
}

impl NodeMeter {
    pub(crate) fn new(limit: u64) -> Self {
        NodeMeter { used: 0, limit }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SearchAborted> {
        self.used += 1;
        if self.used > self.limit {
            Err(SearchAborted::NodeBudgetExceeded {
                max_nodes: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
