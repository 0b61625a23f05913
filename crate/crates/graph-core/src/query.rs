//! Structural queries: cliques, cycles, claws and family predicates.

use crate::graph::Graph;
use crate::set::VertexSet;

impl Graph {
    /// Lexicographically least k-clique, if any. `k = 1` finds the least
    /// vertex and `k = 2` the least edge.
    pub fn find_k_clique(&self, k: usize) -> Option<VertexSet> {
        self.find_k_clique_within(self.vertices(), k)
    }

    /// Least k-clique using only vertices of `within`.
    pub fn find_k_clique_within(&self, within: VertexSet, k: usize) -> Option<VertexSet> {
        debug_assert!(k >= 1);
        if k > within.len() {
            return None;
        }
        self.clique_extend(VertexSet::EMPTY, within, k)
    }

    fn clique_extend(&self, chosen: VertexSet, candidates: VertexSet, need: usize) -> Option<VertexSet> {
        if need == 0 {
            return Some(chosen);
        }
        if candidates.len() < need {
            return None;
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            rest.remove(v);
            let next = rest.intersect(self.neighbors(v));
            if let Some(found) = self.clique_extend(chosen.with(v), next, need - 1) {
                return Some(found);
            }
        }
        None
    }

    /// Every k-clique, in lexicographic order of vertex sets.
    pub fn all_k_cliques(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.collect_cliques(VertexSet::EMPTY, self.vertices(), k, &mut out);
        out
    }

    fn collect_cliques(&self, chosen: VertexSet, candidates: VertexSet, need: usize, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        if candidates.len() < need {
            return;
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            rest.remove(v);
            self.collect_cliques(chosen.with(v), rest.intersect(self.neighbors(v)), need - 1, out);
        }
    }

    /// First cycle found by DFS (vertices and neighbors scanned in ascending
    /// order), returned as a closed walk of distinct vertices. `None` means
    /// the graph is a forest.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        self.find_cycle_within(self.vertices())
    }

    /// DFS cycle detection restricted to the subgraph induced by `within`.
    pub fn find_cycle_within(&self, within: VertexSet) -> Option<Vec<usize>> {
        let mut seen = VertexSet::EMPTY;
        let mut path: Vec<usize> = Vec::new();
        for root in within.iter() {
            if seen.contains(root) {
                continue;
            }
            if let Some(cycle) = self.cycle_dfs(root, usize::MAX, within, &mut seen, &mut path) {
                return Some(cycle);
            }
            debug_assert!(path.is_empty());
        }
        None
    }

    fn cycle_dfs(
        &self,
        v: usize,
        parent: usize,
        within: VertexSet,
        seen: &mut VertexSet,
        path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        seen.insert(v);
        path.push(v);
        for w in self.neighbors(v).intersect(within).iter() {
            if w == parent {
                continue;
            }
            if let Some(pos) = path.iter().position(|&x| x == w) {
                // Back edge: the cycle is the path segment from w to v.
                return Some(path[pos..].to_vec());
            }
            if !seen.contains(w) {
                if let Some(c) = self.cycle_dfs(w, v, within, seen, path) {
                    return Some(c);
                }
            }
        }
        path.pop();
        None
    }

    /// Whether the subgraph induced by `within` is a forest.
    pub fn is_forest_within(&self, within: VertexSet) -> bool {
        // |E| = |V| - #components characterizes forests; cheaper than DFS here.
        let mut edges = 0;
        for v in within.iter() {
            edges += self.neighbors(v).intersect(within).len();
        }
        edges /= 2;
        if !within.is_empty() && edges >= within.len() {
            return false;
        }
        let mut comps = 0;
        let mut rest = within;
        while let Some(v) = rest.first() {
            comps += 1;
            rest = rest.minus(self.component_of(v, within));
        }
        edges == within.len() - comps
    }

    /// A shortest cycle of the subgraph induced by `within`, if any (used to
    /// pick small branching sets in the exact solvers).
    ///
    /// Works edge by edge: the shortest cycle through edge (u, v) is that
    /// edge plus a shortest u-v path avoiding it.
    pub fn shortest_cycle_within(&self, within: VertexSet) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for u in within.iter() {
            for v in self.neighbors(u).intersect(within).iter() {
                if v < u {
                    continue;
                }
                if let Some(mut path) = self.shortest_path_avoiding_edge(u, v, within) {
                    if best.as_ref().map_or(true, |b| path.len() < b.len()) {
                        best = Some(std::mem::take(&mut path));
                    }
                }
            }
        }
        best
    }

    /// Shortest u..v path in `within` that does not use the edge (u, v);
    /// returned as the cycle u, ..., v (closing edge implicit).
    fn shortest_path_avoiding_edge(&self, u: usize, v: usize, within: VertexSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = VertexSet::singleton(u);
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for w in self.neighbors(x).intersect(within).iter() {
                if (x == u && w == v) || (x == v && w == u) || seen.contains(w) {
                    continue;
                }
                seen.insert(w);
                parent[w] = x;
                if w == v {
                    let mut path = vec![v];
                    let mut cur = v;
                    while parent[cur] != usize::MAX {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        let mut nb = [0usize; 64];
        for v in 0..self.n() {
            let mut len = 0;
            for w in self.neighbors(v).iter() {
                nb[len] = w;
                len += 1;
            }
            if len < 3 {
                continue;
            }
            let nb = &nb[..len];
            for i in 0..nb.len() {
                for j in (i + 1)..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for &c in &nb[(j + 1)..] {
                        if !self.has_edge(nb[i], c) && !self.has_edge(nb[j], c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        self.n() >= 1 && (0..self.n()).all(|v| self.degree(v) == self.n() - 1)
    }

    /// Connected 2-regular graph on >= 3 vertices.
    pub fn is_cycle_graph(&self) -> bool {
        self.n() >= 3 && (0..self.n()).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_path_graph(&self) -> bool {
        if self.n() == 1 {
            return true;
        }
        if self.n() < 2 || !self.is_connected() {
            return false;
        }
        let ones = (0..self.n()).filter(|&v| self.degree(v) == 1).count();
        let twos = (0..self.n()).filter(|&v| self.degree(v) == 2).count();
        ones == 2 && ones + twos == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() == self.n() - 1
    }

    pub fn is_forest(&self) -> bool {
        self.find_cycle().is_none()
    }
}
