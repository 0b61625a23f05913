//! Exhaustive enumeration of labeled simple graphs on a fixed vertex set.
//!
//! Graphs are generated column by column: for v = 1, 2, ..., the set of
//! neighbors of v among 0..v-1 is chosen. Degree caps prune during
//! generation, and for claw-free enumeration a claw whose four vertices are
//! all decided can never be repaired later, so the subtree is cut there.
//! Connectivity is checked on completed graphs only.
//!
//! The sweep engine splits work by enumerating all valid assignments of the
//! first few columns ([`enumerate_prefixes`]) and running each continuation
//! independently ([`for_each_graph_from`]).

use crate::graph::Graph;
use crate::set::VertexSet;
use thiserror::Error;

/// Predicates applied during generation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected: bool,
    pub max_degree: Option<usize>,
    pub claw_free: bool,
}

impl GraphFilter {
    pub fn connected() -> Self {
        GraphFilter {
            connected: true,
            ..Default::default()
        }
    }

    pub fn connected_max_degree(d: usize) -> Self {
        GraphFilter {
            connected: true,
            max_degree: Some(d),
            ..Default::default()
        }
    }

    pub fn connected_claw_free_subcubic() -> Self {
        GraphFilter {
            connected: true,
            max_degree: Some(3),
            claw_free: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("built-in enumeration supports 1 <= n <= {limit} for this filter, got n = {n}")]
    UnsupportedOrder { n: usize, limit: usize },
    #[error("prefix depth {depth} must stay below n = {n}")]
    BadPrefixDepth { depth: usize, n: usize },
}

/// A fixed assignment of the first columns, used to split enumeration into
/// independent chunks for parallel sweeps. `columns[i]` is the lower
/// neighborhood of vertex `i + 1`.
#[derive(Clone, Debug)]
pub struct GraphPrefix {
    columns: Vec<u64>,
}

fn order_limit(filter: &GraphFilter) -> usize {
    // Unrestricted enumeration walks all 2^C(n,2) graphs; degree caps make
    // markedly larger orders tractable.
    match filter.max_degree {
        Some(d) if d <= 4 => 12,
        _ => 7,
    }
}

fn check_order(n: usize, filter: &GraphFilter) -> Result<(), EnumerateError> {
    let limit = order_limit(filter);
    if n == 0 || n > limit {
        return Err(EnumerateError::UnsupportedOrder { n, limit });
    }
    Ok(())
}

struct Engine {
    n: usize,
    filter: GraphFilter,
    cap: usize,
    g: Graph,
    deg: Vec<usize>,
}

impl Engine {
    fn new(n: usize, filter: &GraphFilter) -> Self {
        let cap = filter.max_degree.unwrap_or(n.saturating_sub(1));
        Engine {
            n,
            filter: filter.clone(),
            cap,
            g: Graph::empty(n).expect("order checked"),
            deg: vec![0; n],
        }
    }

    /// Lower vertices that may still accept another edge.
    fn avail(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        for u in 0..v {
            if self.deg[u] < self.cap {
                mask |= 1 << u;
            }
        }
        mask
    }

    fn place(&mut self, v: usize, mask: u64) {
        self.g.set_row_bits(v, mask);
        self.deg[v] = mask.count_ones() as usize;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            self.g.row_insert(u, v);
            self.deg[u] += 1;
        }
    }

    fn unplace(&mut self, v: usize, mask: u64) {
        self.g.set_row_bits(v, 0);
        self.deg[v] = 0;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            self.g.row_remove(u, v);
            self.deg[u] -= 1;
        }
    }

    /// Checks a candidate column before placement. All edges among vertices
    /// <= v are decided at this point, so any claw found here is permanent.
    fn candidate_ok(&self, mask: u64) -> bool {
        if mask.count_ones() as usize > self.cap {
            return false;
        }
        if !self.filter.claw_free {
            return true;
        }
        let mut nb = [0usize; 64];
        let len = fill_bits(mask, &mut nb);
        let nb = &nb[..len];
        // v as the claw center: three chosen lower neighbors, pairwise
        // non-adjacent.
        for i in 0..len {
            for j in (i + 1)..len {
                if self.g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for &c in &nb[(j + 1)..] {
                    if !self.g.has_edge(nb[i], c) && !self.g.has_edge(nb[j], c) {
                        return false;
                    }
                }
            }
        }
        // v as a leaf: for each new neighbor u, a pair of u's existing
        // neighbors that avoid both v and each other closes a claw at u.
        for &u in nb {
            let mut cand = [0usize; 64];
            let clen = fill_bits(self.g.neighbors(u).bits() & !mask, &mut cand);
            for i in 0..clen {
                for j in (i + 1)..clen {
                    if !self.g.has_edge(cand[i], cand[j]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn accept_complete(&self) -> bool {
        !self.filter.connected || self.g.is_connected()
    }

    fn for_each<F: FnMut(&Graph)>(&mut self, v: usize, f: &mut F) {
        if v == self.n {
            if self.accept_complete() {
                f(&self.g);
            }
            return;
        }
        let avail = self.avail(v);
        let mut mask = 0u64;
        loop {
            if self.candidate_ok(mask) {
                self.place(v, mask);
                self.for_each(v + 1, f);
                self.unplace(v, mask);
            }
            mask = mask.wrapping_sub(avail) & avail;
            if mask == 0 {
                break;
            }
        }
    }

    fn collect_prefixes(&mut self, v: usize, depth: usize, out: &mut Vec<GraphPrefix>) {
        if v == depth + 1 {
            out.push(GraphPrefix {
                columns: (1..=depth).map(|u| self.g.neighbors(u).bits() & ((1 << u) - 1)).collect(),
            });
            return;
        }
        let avail = self.avail(v);
        let mut mask = 0u64;
        loop {
            if self.candidate_ok(mask) {
                self.place(v, mask);
                self.collect_prefixes(v + 1, depth, out);
                self.unplace(v, mask);
            }
            mask = mask.wrapping_sub(avail) & avail;
            if mask == 0 {
                break;
            }
        }
    }

    fn apply_prefix(&mut self, prefix: &GraphPrefix) {
        for (i, &mask) in prefix.columns.iter().enumerate() {
            debug_assert!(self.candidate_ok(mask));
            self.place(i + 1, mask);
        }
    }
}

fn fill_bits(mut mask: u64, out: &mut [usize; 64]) -> usize {
    let mut len = 0;
    while mask != 0 {
        out[len] = mask.trailing_zeros() as usize;
        len += 1;
        mask &= mask - 1;
    }
    len
}

/// Calls `f` on every labeled graph on `n` vertices passing the filter.
/// The reference passed to `f` is reused between calls; clone to keep it.
pub fn for_each_graph<F: FnMut(&Graph)>(
    n: usize,
    filter: &GraphFilter,
    mut f: F,
) -> Result<(), EnumerateError> {
    check_order(n, filter)?;
    let mut engine = Engine::new(n, filter);
    engine.for_each(1.min(n), &mut f);
    Ok(())
}

/// As [`for_each_graph`], but only over completions of the given prefix.
pub fn for_each_graph_from<F: FnMut(&Graph)>(
    n: usize,
    filter: &GraphFilter,
    prefix: &GraphPrefix,
    mut f: F,
) -> Result<(), EnumerateError> {
    check_order(n, filter)?;
    let mut engine = Engine::new(n, filter);
    engine.apply_prefix(prefix);
    engine.for_each(prefix.columns.len() + 1, &mut f);
    Ok(())
}

/// All valid assignments of the first `depth` columns (lower neighborhoods
/// of vertices 1..=depth). Each prefix can be completed independently.
pub fn enumerate_prefixes(
    n: usize,
    filter: &GraphFilter,
    depth: usize,
) -> Result<Vec<GraphPrefix>, EnumerateError> {
    check_order(n, filter)?;
    if depth >= n {
        return Err(EnumerateError::BadPrefixDepth { depth, n });
    }
    let mut engine = Engine::new(n, filter);
    let mut out = Vec::new();
    engine.collect_prefixes(1, depth, &mut out);
    Ok(out)
}

/// Iterator over every labeled graph on `n` vertices passing the filter.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter) -> Result<GraphEnumerator, EnumerateError> {
    check_order(n, filter)?;
    Ok(GraphEnumerator {
        engine: Engine::new(n, filter),
        stack: Vec::new(),
        started: false,
        done: false,
    })
}

struct Frame {
    avail: u64,
    mask: u64,
    virgin: bool,
    placed: bool,
}

pub struct GraphEnumerator {
    engine: Engine,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl GraphEnumerator {
    fn push_frame(&mut self, v: usize) {
        let avail = self.engine.avail(v);
        self.stack.push(Frame {
            avail,
            mask: 0,
            virgin: true,
            placed: false,
        });
    }

    /// Advances the top frame to its next acceptable candidate mask.
    fn next_candidate(&mut self) -> Option<u64> {
        loop {
            let frame = self.stack.last_mut().expect("frame exists");
            if frame.virgin {
                frame.virgin = false;
                frame.mask = 0;
            } else {
                frame.mask = frame.mask.wrapping_sub(frame.avail) & frame.avail;
                if frame.mask == 0 {
                    return None;
                }
            }
            let mask = frame.mask;
            if self.engine.candidate_ok(mask) {
                return Some(mask);
            }
        }
    }
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let n = self.engine.n;
        if n <= 1 {
            self.done = true;
            return Some(self.engine.g.clone());
        }
        if !self.started {
            self.started = true;
            self.push_frame(1);
        }
        loop {
            if self.stack.is_empty() {
                self.done = true;
                return None;
            }
            let v = self.stack.len(); // column handled by the top frame
            if self.stack.last().unwrap().placed {
                let mask = self.stack.last().unwrap().mask;
                self.engine.unplace(v, mask);
                self.stack.last_mut().unwrap().placed = false;
            }
            match self.next_candidate() {
                None => {
                    self.stack.pop();
                }
                Some(mask) => {
                    self.engine.place(v, mask);
                    self.stack.last_mut().unwrap().placed = true;
                    if v == n - 1 {
                        if self.engine.accept_complete() {
                            return Some(self.engine.g.clone());
                        }
                        // keep iterating in place
                    } else {
                        self.push_frame(v + 1);
                    }
                }
            }
        }
    }
}

// Construction hooks used only by the enumerator.
impl Graph {
    pub(crate) fn set_row_bits(&mut self, v: usize, bits: u64) {
        self.set_row(v, VertexSet::from_bits(bits));
    }
}
