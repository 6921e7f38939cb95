//! Undirected simple graphs over at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbour row, so vertex sets, closed
//! neighbourhoods and connectivity sweeps are all word operations. Graphs are
//! immutable values: every alteration returns a fresh graph.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest order representable by the word-sized adjacency rows.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("edge {edge} has an endpoint outside 0..{order}")]
    VertexOutOfRange { edge: Edge, order: usize },
    #[error("vertex {vertex} is outside 0..{order}")]
    MemberOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),
    #[error("edge {0} is already present in the graph")]
    EdgePresent(Edge),
    #[error("{family} requires order at least {min}, got {n}")]
    FamilyTooSmall { family: Family, n: usize, min: usize },
    #[error("star components need order at least 2, got {0}")]
    StarTooSmall(usize),
    #[error("vertex sets over different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
}

/// An unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    /// Panics on a self-loop; for literal edges in code and tests.
    pub fn of(a: usize, b: usize) -> Self {
        Edge::new(a, b).expect("edge endpoints must differ")
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A subset of `0..order`, one bit per vertex (vertex 0 is the least significant bit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    order: usize,
}

#[inline]
pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        VertexSet { bits: 0, order }
    }

    pub fn full(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        VertexSet {
            bits: full_mask(order),
            order,
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(order: usize, ids: I) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, max: MAX_ORDER });
        }
        let mut bits = 0u64;
        for id in ids {
            if id >= order {
                return Err(GraphError::MemberOutOfRange { vertex: id, order });
            }
            bits |= 1 << id;
        }
        Ok(VertexSet { bits, order })
    }

    pub fn from_bits(order: usize, bits: u64) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, max: MAX_ORDER });
        }
        let stray = bits & !full_mask(order);
        if stray != 0 {
            return Err(GraphError::MemberOutOfRange {
                vertex: stray.trailing_zeros() as usize,
                order,
            });
        }
        Ok(VertexSet { bits, order })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            return Err(GraphError::MemberOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        self.bits |= 1 << v;
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.bits &= !(1 << v);
        }
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            bits: !self.bits & full_mask(self.order),
            order: self.order,
        }
    }

    pub fn union(&self, other: &VertexSet) -> Result<Self, GraphError> {
        if self.order != other.order {
            return Err(GraphError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(VertexSet {
            bits: self.bits | other.bits,
            order: self.order,
        })
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Star,
}

impl Family {
    pub fn min_order(self) -> usize {
        match self {
            Family::Complete | Family::Cycle => 3,
            Family::Path => 1,
            Family::Star => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
        };
        f.write_str(name)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints and duplicates (after normalization).
    pub fn new(order: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &e in edges {
            if e.v >= order {
                return Err(GraphError::VertexOutOfRange { edge: e, order });
            }
            if g.has_edge(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.set(e, true);
        }
        Ok(g)
    }

    /// Same as [`Graph::new`] but from raw endpoint pairs, so self-loops can be reported.
    pub fn from_pairs(order: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Graph::new(order, &edges)
    }

    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, max: MAX_ORDER });
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    fn set(&mut self, e: Edge, present: bool) {
        if present {
            self.adj[e.u] |= 1 << e.v;
            self.adj[e.v] |= 1 << e.u;
        } else {
            self.adj[e.u] &= !(1 << e.v);
            self.adj[e.v] &= !(1 << e.u);
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.v < self.order && self.adj[e.u] >> e.v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Open neighbourhood of `v` as a bit row.
    pub fn neighbors_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            bits: self.adj[v],
            order: self.order,
        }
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            bits: self.adj[v] | 1 << v,
            order: self.order,
        }
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let bits = (0..self.order)
            .filter(|&v| self.adj[v] == 0)
            .fold(0u64, |acc, v| acc | 1 << v);
        VertexSet {
            bits,
            order: self.order,
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in BitIter(self.adj[u] >> u >> 1) {
                out.push(Edge { u, v: u + 1 + v });
            }
        }
        out
    }

    /// All non-adjacent pairs of distinct vertices, sorted lexicographically.
    pub fn complement_non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.adj[u] >> v & 1 == 0 {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// `G - B`. Every edge of `removed` must be present and listed once.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &e in removed {
            if !g.has_edge(e) {
                return Err(GraphError::MissingEdge(e));
            }
            g.set(e, false);
        }
        Ok(g)
    }

    /// `G + A`. Every edge of `added` must be absent and in range.
    pub fn add_edges(&self, added: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &e in added {
            if e.v >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    edge: e,
                    order: self.order,
                });
            }
            if g.has_edge(e) {
                return Err(GraphError::EdgePresent(e));
            }
            g.set(e, true);
        }
        Ok(g)
    }

    /// Subgraph induced by `s`, re-indexed by ascending original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.order != self.order {
            return Err(GraphError::OrderMismatch {
                left: self.order,
                right: s.order,
            });
        }
        let ids = s.to_vec();
        let mut position = [usize::MAX; MAX_ORDER];
        for (i, &v) in ids.iter().enumerate() {
            position[v] = i;
        }
        let mut adj = vec![0u64; ids.len()];
        for (i, &v) in ids.iter().enumerate() {
            for w in BitIter(self.adj[v] & s.bits) {
                adj[i] |= 1 << position[w];
            }
        }
        Ok(Graph { order: ids.len(), adj })
    }

    /// Orders 0 and 1 count as connected.
    pub fn is_connected(&self) -> bool {
        connected_within(&self.adj, full_mask(self.order))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = full_mask(self.order);
        let mut out = Vec::new();
        while left != 0 {
            let reach = reach_from(&self.adj, left & left.wrapping_neg(), left);
            out.push(VertexSet {
                bits: reach,
                order: self.order,
            });
            left &= !reach;
        }
        out
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let edges = self
            .edges()
            .into_iter()
            .map(|e| Edge::new(perm[e.u], perm[e.v]))
            .collect::<Result<Vec<_>, _>>()?;
        Graph::new(self.order, &edges)
    }
}

/// Vertices of `within` reachable from `start` using only vertices of `within`.
#[inline]
pub(crate) fn reach_from(adj: &[u64], start: u64, within: u64) -> u64 {
    let mut reach = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= adj[v];
        }
        next &= within & !reach;
        reach |= next;
        frontier = next;
    }
    reach
}

/// Whether the subgraph induced by `within` is connected; empty sets are connected.
#[inline]
pub(crate) fn connected_within(adj: &[u64], within: u64) -> bool {
    if within == 0 {
        return true;
    }
    reach_from(adj, within & within.wrapping_neg(), within) == within
}

pub fn make_graph(order: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
    Graph::new(order, edges)
}

pub fn generate_family(family: Family, n: usize) -> Result<Graph, GraphError> {
    let min = family.min_order();
    if n < min {
        return Err(GraphError::FamilyTooSmall { family, n, min });
    }
    let edges: Vec<Edge> = match family {
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge { u, v })).collect(),
        Family::Path => (1..n).map(|v| Edge { u: v - 1, v }).collect(),
        Family::Cycle => (1..n)
            .map(|v| Edge { u: v - 1, v })
            .chain(std::iter::once(Edge { u: 0, v: n - 1 }))
            .collect(),
        Family::Star => (1..n).map(|v| Edge { u: 0, v }).collect(),
    };
    Graph::new(n, &edges)
}

/// Disjoint union of stars; component `i` starts right after component `i - 1`
/// and has its centre at its first id.
pub fn generate_galaxy(star_orders: &[usize]) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut base = 0;
    for &k in star_orders {
        if k < 2 {
            return Err(GraphError::StarTooSmall(k));
        }
        edges.extend((1..k).map(|leaf| Edge {
            u: base,
            v: base + leaf,
        }));
        base += k;
    }
    Graph::new(base, &edges)
}
