//! Recognition of the named families the exception tests care about.

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    Cycle,
    CompleteGraph,
    Star,
    Tree,
    Other,
}

/// The recognized family of a graph, with its order. The triangle is both
/// K_3 and C_3; it reports as `CompleteGraph` with `is_also_c3` set because
/// different exception tests treat it under different names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphFamilyTag {
    pub family: GraphFamily,
    pub order: usize,
    pub is_also_c3: bool,
}

impl Graph {
    /// Classifies paths, cycles, complete graphs, stars and trees; anything
    /// else (including disconnected graphs) is `Other`.
    ///
    /// Overlaps resolve by priority: complete graphs (n >= 3) first, then
    /// cycles, paths, stars, trees. The single vertex reports as a tree.
    pub fn recognize(&self) -> GraphFamilyTag {
        let n = self.n();
        let tag = |family| GraphFamilyTag {
            family,
            order: n,
            is_also_c3: family == GraphFamily::CompleteGraph && n == 3,
        };
        if n == 0 || !self.is_connected() {
            return tag(GraphFamily::Other);
        }
        if n >= 3 && self.is_complete() {
            return tag(GraphFamily::CompleteGraph);
        }
        if n >= 4 && self.is_cycle_graph() {
            return tag(GraphFamily::Cycle);
        }
        if n >= 2 && self.is_path_graph() {
            return tag(GraphFamily::Path);
        }
        if n >= 4 && self.is_tree() && (0..n).any(|v| self.degree(v) == n - 1) {
            return tag(GraphFamily::Star);
        }
        if self.is_tree() {
            return tag(GraphFamily::Tree);
        }
        tag(GraphFamily::Other)
    }

    /// Whether this graph is K_k for the given k.
    pub fn is_k_clique_graph(&self, k: usize) -> bool {
        self.n() == k && self.is_complete()
    }

    /// Whether this graph is the triangle C_3 = K_3.
    pub fn is_triangle_graph(&self) -> bool {
        self.is_k_clique_graph(3)
    }
}
