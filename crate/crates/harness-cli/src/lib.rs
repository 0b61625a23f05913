//! Harness internals behind the `isokit` binary: input parsing, per-graph
//! checks, the sweep engine, and the desk-scale planarity filter.

pub mod checks;
pub mod input;
pub mod planar;
pub mod sweep;

pub use checks::{CheckBasis, CheckContext, CheckOutcome, CheckSelection, CheckVerdict};
pub use input::{parse_coloring, parse_graphs, read_coloring, read_graphs};
pub use planar::is_planar;
pub use sweep::{
    run_sweep, Aggregate, ConfigEcho, Counterexample, GraphRecord, InputSource, RunConfig,
    SweepReport,
};
