//! Constructive cycle-isolation partitions.
//!
//! Any connected claw-free graph with maximum degree at most 3, other than
//! the triangle, splits into four classes whose every class is a cycle
//! isolating set. This crate builds such a partition by structural
//! recursion and verifies every coloring it emits.

mod cycles;
mod partition;
mod report;
mod structure;

pub use cycles::{
    boundary_edge_count, enumerate_cycles, is_induced_cycle, CycleBudgetExceeded,
    DEFAULT_CYCLE_BUDGET,
};
pub use partition::partition_cycle;
pub use report::{CyclePartitionError, ProofGapReport};
pub use structure::{classify_cycle_structure, BaseKind, CycleStructure, PairAttachment};
