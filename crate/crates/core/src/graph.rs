//! Simple undirected graphs on small vertex sets, labelled `1..=63`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_VERTEX: u32 = 63;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} in edge [{0}, {0}]")]
    Loop(u32),
    #[error("edge [{u}, {v}] has an endpoint outside 1..={n}")]
    OutOfRange { u: i64, v: i64, n: usize },
    #[error("graphs are limited to {MAX_VERTEX} vertices, got {0}")]
    TooLarge(usize),
    #[error("{kind} needs size >= {min}, got {got}")]
    FamilySize { kind: &'static str, min: usize, got: usize },
    #[error("vertex set is not contained in the graph")]
    NotSubset,
    #[error("cannot read graph file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// A set of vertex labels in `1..=63`, stored as a bitmask.
///
/// Ordering is lexicographic on the increasing member lists, matching
/// [`crate::simplicial::Face`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        debug_assert!(bits & 1 == 0, "vertex 0 is not a label");
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1,..,n}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= MAX_VERTEX as usize);
        VertexSet(((1u128 << (n + 1)) - 2) as u64)
    }

    pub fn singleton(v: u32) -> Self {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex {v} out of range");
        VertexSet(1 << v)
    }

    pub fn contains(self, v: u32) -> bool {
        v <= MAX_VERTEX && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: u32) {
        *self = self.with(v);
    }

    pub fn with(self, v: u32) -> Self {
        VertexSet(self.0 | Self::singleton(v).0)
    }

    pub fn without(self, v: u32) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = u32> + Clone {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn min(self) -> Option<u32> {
        self.iter().next()
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Line,
    Cycle,
    Star,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Line => "line",
            GraphKind::Cycle => "cycle",
            GraphKind::Star => "star",
        }
    }
}

/// A simple undirected graph. Vertex labels are kept as given; induced
/// subgraphs do not renumber.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    // adj[v] for v in 0..=MAX_VERTEX
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("vertices", &self.vertices).field("edges", &self.edges()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[i64; 2]>,
}

impl Graph {
    /// The edgeless graph on `{1,..,n}`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTEX as usize {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { vertices: VertexSet::range(n), adj: vec![VertexSet::EMPTY; MAX_VERTEX as usize + 1] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            let in_range = |x: i64| x >= 1 && x <= n as i64;
            if !in_range(u) || !in_range(v) {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u as u32));
            }
            let (u, v) = (u as u32, v as u32);
            g.adj[u as usize].insert(v);
            g.adj[v as usize].insert(u);
        }
        Ok(g)
    }

    pub fn from_json_str(s: &str) -> Result<Self, GraphError> {
        let parsed: GraphJson = serde_json::from_str(s)?;
        Graph::from_edges(parsed.n, parsed.edges.into_iter().map(|[u, v]| (u, v)))
    }

    pub fn from_json_file(path: &Path) -> Result<Self, GraphError> {
        Graph::from_json_str(&std::fs::read_to_string(path)?)
    }

    /// JSON form `{"n": .., "edges": [[u, v], ..]}`; `n` is the largest label.
    pub fn to_json(&self) -> String {
        let edges = self.edges().into_iter().map(|(u, v)| [u as i64, v as i64]).collect();
        let n = self.vertices.iter().last().unwrap_or(0) as usize;
        serde_json::to_string(&GraphJson { n, edges }).expect("graph serializes")
    }

    pub fn line(n: usize) -> Result<Self, GraphError> {
        standard_graph(GraphKind::Line, n)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        standard_graph(GraphKind::Cycle, n)
    }

    pub fn star(n: usize) -> Result<Self, GraphError> {
        standard_graph(GraphKind::Star, n)
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, v: u32) -> VertexSet {
        self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.vertices.iter().flat_map(|u| self.adj[u as usize].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph, GraphError> {
        if !w.is_subset(self.vertices) {
            return Err(GraphError::NotSubset);
        }
        let mut adj = vec![VertexSet::EMPTY; self.adj.len()];
        for v in w.iter() {
            adj[v as usize] = self.adj[v as usize].intersection(w);
        }
        Ok(Graph { vertices: w, adj })
    }

    /// Component vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in self.vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v as usize]));
                frontier = reach.difference(comp);
                comp = comp.union(reach);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.vertices.iter().any(|v| self.adj[v as usize].is_empty())
    }

    /// Orders of the components, sorted descending, when every component
    /// is a path graph.
    pub fn line_decomposition(&self) -> Option<Vec<usize>> {
        let mut orders = Vec::new();
        for comp in self.connected_components() {
            let k = comp.len();
            let edges: usize = comp.iter().map(|v| self.degree(v)).sum::<usize>() / 2;
            if edges + 1 != k || comp.iter().any(|v| self.degree(v) > 2) {
                return None;
            }
            orders.push(k);
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Some(orders)
    }

    /// Supports of all paths on `t` distinct vertices, sorted.
    pub fn enumerate_t_paths(&self, t: usize) -> Vec<VertexSet> {
        let mut found = BTreeSet::new();
        if t == 0 || t > self.order() {
            return Vec::new();
        }
        for start in self.vertices.iter() {
            self.extend_paths(start, VertexSet::singleton(start), t, &mut found);
        }
        found.into_iter().collect()
    }

    fn extend_paths(&self, end: u32, visited: VertexSet, t: usize, found: &mut BTreeSet<VertexSet>) {
        if visited.len() == t {
            found.insert(visited);
            return;
        }
        for next in self.adj[end as usize].difference(visited).iter() {
            self.extend_paths(next, visited.with(next), t, found);
        }
    }
}

/// `L_n` has `n` vertices; `C_n` and the star `S_n` have `n` edges. The
/// star centre is vertex 1.
pub fn standard_graph(kind: GraphKind, size: usize) -> Result<Graph, GraphError> {
    let min = match kind {
        GraphKind::Line | GraphKind::Star => 1,
        GraphKind::Cycle => 3,
    };
    if size < min {
        return Err(GraphError::FamilySize { kind: kind.name(), min, got: size });
    }
    let n = size as i64;
    match kind {
        GraphKind::Line => Graph::from_edges(size, (1..n).map(|i| (i, i + 1))),
        GraphKind::Cycle => Graph::from_edges(size, (1..=n).map(|i| (i, i % n + 1))),
        GraphKind::Star => Graph::from_edges(size + 1, (2..=n + 1).map(|leaf| (1, leaf))),
    }
}
