//! Verification of isolating sets and isolation partitions.
//!
//! A set D isolates a pattern from G when G - N[D] contains no copy of it;
//! a coloring is an isolation partition when every color class isolates.
//! Verdicts carry re-checkable witnesses so failures are auditable.

mod certificate;
mod coloring;
mod target;
mod verify;

pub use certificate::{Certificate, Verdict};
pub use coloring::{Coloring, ColoringError};
pub use target::TargetPattern;
pub use verify::{
    class_passes, find_pattern_within, is_dominating, is_isolating, partition_passes, residual,
    surviving_vertices, verify_partition, witness_is_valid,
};
