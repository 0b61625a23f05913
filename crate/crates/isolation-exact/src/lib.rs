//! Exact isolation and isomatic numbers at desk scale.
//!
//! `min_isolating` proves the minimum size of an isolating set by pruned
//! exhaustive search, `max_isomatic` the maximum number of isolating
//! classes in a weak partition; both abort loudly on budget exhaustion
//! rather than guessing. The constructions in [`construct`] realize the
//! universal lower bounds iso(G, k) >= k and iso_c(G) >= 3.

mod bound;
mod budget;
mod construct;
mod isomatic;
mod solver;

pub use bound::{check_iso_iota_bound, check_iso_iota_bound_with_budget, BoundCheck};
pub use budget::{SearchAborted, SearchBudget};
pub use construct::{clique_isomatic_k_partition, cycle_isomatic_3_partition};
pub use isomatic::{
    max_isomatic, max_isomatic_with_budget, IsomaticResult, IsomaticValue,
};
pub use solver::{min_isolating, min_isolating_with_budget, IsolationNumberResult};
