//! Bitset-based simple graphs with the structural queries, text formats and
//! exhaustive enumeration that the isolation toolkit is built on.
//!
//! Everything targets desk scale (n <= 64): adjacency lives in one machine
//! word per vertex and all queries are pure functions over immutable graphs.

pub mod builders;
mod edge_list;
mod enumerate;
mod family;
mod graph;
mod graph6;
mod query;
mod set;

pub use edge_list::{parse_edge_list, EdgeListError};
pub use enumerate::{
    enumerate_graphs, enumerate_prefixes, for_each_graph, for_each_graph_from, EnumerateError,
    GraphEnumerator, GraphFilter, GraphPrefix,
};
pub use family::{GraphFamily, GraphFamilyTag};
pub use graph::{Graph, GraphError, SubgraphMap, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error, GRAPH6_HEADER};
pub use set::VertexSet;

#[cfg(test)]
pub(crate) mod testutil {
    pub use crate::builders::*;
}
