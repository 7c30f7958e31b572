//! Core graph types and structure algorithms.
//!
//! Vertices are `0..n`. Undirected edges are stored as ordered pairs
//! `(u, v)` with `u < v`, sorted lexicographically, so an edge index is a
//! stable handle; orientations are bit vectors aligned with that edge list.

pub mod bipartite;
pub mod blocks;
pub mod coloring;
pub mod contract;
pub mod enumerate;
pub mod girth;
pub mod parse;
pub mod patterns;

pub use bipartite::{bipartition, Bipartition, OddCycle};
pub use blocks::{biconnected_blocks, BlockDecomposition};
pub use coloring::{chromatic_number, Coloring, ColoringOutcome};
pub use contract::{contract, ContractError};
pub use girth::girth;
pub use parse::{
    parse_digraph, parse_graph, to_digraph_text, to_edge_list, to_graph6, GraphFormat, ParseError,
};
pub use patterns::{find_pattern, Embedding, PatternKind};

use std::fmt;

/// Errors raised when building a graph from an explicit edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge `(u, u)`.
    SelfLoop(usize),
    /// The same undirected edge (or directed arc) listed twice.
    DuplicateEdge(usize, usize),
    /// An endpoint `v >= n`.
    VertexOutOfRange { vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(u) => write!(f, "self-loop at vertex {u}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    /// Builds a graph on `n` vertices from an edge list. Endpoint order
    /// within a pair is irrelevant; self-loops and duplicates are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(UndirectedGraph { n, edges, adj })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edge list sorted lexicographically, each pair with smaller endpoint first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `u` in ascending order.
    pub fn adj(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in `edges()`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Per-vertex neighbor bitmasks; available only for `n <= 64`.
    pub fn adj_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Some(masks)
    }

    /// Subgraph induced by `vertices` (deduplicated, sorted). Returns the
    /// graph together with the map from new ids to original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (UndirectedGraph, Vec<usize>) {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
            }
        }
        let g = UndirectedGraph::new(keep.len(), &edges).expect("induced subgraph is simple");
        (g, keep)
    }
}

/// A finite directed graph without self-loops or repeated arcs
/// (antiparallel arc pairs are allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    ins: Vec<Vec<usize>>,
}

impl DirectedGraph {
    pub fn new(n: usize, arc_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut arcs = Vec::with_capacity(arc_list.len());
        for &(a, b) in arc_list {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            arcs.push((a, b));
        }
        let mut sorted = arcs.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut ins = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            ins[v].push(u);
        }
        for list in out.iter_mut().chain(ins.iter_mut()) {
            list.sort_unstable();
        }
        Ok(DirectedGraph { n, arcs, out, ins })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in construction order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Out-neighbors of `u` in ascending order.
    pub fn out(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    /// In-neighbors of `u` in ascending order.
    pub fn ins(&self, u: usize) -> &[usize] {
        &self.ins[u]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> DirectedGraph {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        DirectedGraph::new(self.n, &arcs).expect("reversal preserves simplicity")
    }

    /// Forgets directions. Fails with `DuplicateEdge` if the digraph has an
    /// antiparallel arc pair.
    pub fn underlying(&self) -> Result<UndirectedGraph, GraphError> {
        UndirectedGraph::new(self.n, &self.arcs)
    }
}

/// An assignment of directions to every edge of an [`UndirectedGraph`],
/// stored as one bit per edge index.
///
/// For edge `i = (u, v)` with `u < v`: bit clear means arc `u -> v`, bit set
/// means arc `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    flipped: Vec<bool>,
}

impl Orientation {
    /// All edges directed from smaller to larger endpoint.
    pub fn forward(m: usize) -> Self {
        Orientation {
            flipped: vec![false; m],
        }
    }

    pub fn from_flips(flipped: Vec<bool>) -> Self {
        Orientation { flipped }
    }

    /// Bit `i` of `mask` set means edge `i` is flipped; requires `m <= 64`.
    pub fn from_mask(m: usize, mask: u64) -> Self {
        assert!(m <= 64, "mask orientation limited to 64 edges");
        Orientation {
            flipped: (0..m).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.flipped.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flipped.is_empty()
    }

    pub fn is_flipped(&self, i: usize) -> bool {
        self.flipped[i]
    }

    pub fn set_flipped(&mut self, i: usize, value: bool) {
        self.flipped[i] = value;
    }

    /// The arc `(tail, head)` assigned to edge `i` of `g`.
    pub fn arc(&self, g: &UndirectedGraph, i: usize) -> (usize, usize) {
        let (u, v) = g.edges()[i];
        if self.flipped[i] {
            (v, u)
        } else {
            (u, v)
        }
    }

    /// Materializes the oriented digraph; arc `i` corresponds to edge `i`.
    pub fn to_digraph(&self, g: &UndirectedGraph) -> DirectedGraph {
        assert_eq!(self.flipped.len(), g.m(), "orientation/graph size mismatch");
        let arcs: Vec<(usize, usize)> = (0..g.m()).map(|i| self.arc(g, i)).collect();
        DirectedGraph::new(g.n(), &arcs).expect("orienting a simple graph stays simple")
    }

    /// The orientation with every edge reversed.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            flipped: self.flipped.iter().map(|&b| !b).collect(),
        }
    }
}
