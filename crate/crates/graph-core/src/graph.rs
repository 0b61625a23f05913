//! Immutable simple undirected graphs over vertex indices `0..n-1`.

use crate::set::VertexSet;
use thiserror::Error;

/// Largest vertex count the word-sized bitsets support.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
}

/// A simple undirected graph with per-vertex neighbor bitsets.
///
/// Graphs are immutable after construction; every query below is pure, so
/// values can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    /// Construction helper used by parsers and the enumerator.
    pub(crate) fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::EndpointOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn set_row(&mut self, v: usize, set: VertexSet) {
        self.adj[v] = set;
    }

    pub(crate) fn row_insert(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
    }

    pub(crate) fn row_remove(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closed neighborhood N[S] = S together with every neighbor of S.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = s;
        for v in s.iter() {
            out = out.union(self.adj[v]);
        }
        out
    }

    /// The subgraph induced by `s`, along with the mapping back to the
    /// original vertex labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, SubgraphMap) {
        let verts: Vec<usize> = s.iter().collect();
        let mut adj = Vec::with_capacity(verts.len());
        for (_, &v) in verts.iter().enumerate() {
            let mut row = VertexSet::EMPTY;
            for (j, &w) in verts.iter().enumerate() {
                if self.adj[v].contains(w) {
                    row.insert(j);
                }
            }
            adj.push(row);
        }
        (
            Graph {
                n: verts.len(),
                adj,
            },
            SubgraphMap { to_parent: verts },
        )
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let comp = self.component_of(v, self.vertices());
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// The component of `start` inside the vertex subset `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut comp = VertexSet::singleton(start);
        let mut frontier = VertexSet::singleton(start);
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.intersect(within).minus(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// Components of the subgraph induced by `within`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_of(v, within);
            rest = rest.minus(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0, self.vertices()).len() == self.n
    }

    /// Whether the vertices of `within` induce a connected (nonempty) subgraph.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => false,
            Some(v) => self.component_of(v, within) == within,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Index translation for an induced subgraph: position `i` of the subgraph
/// corresponds to original vertex `to_parent[i]`.
#[derive(Clone, Debug)]
pub struct SubgraphMap {
    to_parent: Vec<usize>,
}

impl SubgraphMap {
    #[inline]
    pub fn to_parent(&self, sub_vertex: usize) -> usize {
        self.to_parent[sub_vertex]
    }

    pub fn parent_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_parent[v]).collect()
    }

    pub fn parent_of_list(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.to_parent[v]).collect()
    }

    pub fn from_parent(&self, parent_vertex: usize) -> Option<usize> {
        self.to_parent.iter().position(|&p| p == parent_vertex)
    }

    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }
}
