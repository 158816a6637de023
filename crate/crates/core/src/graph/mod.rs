//! Simple undirected graphs on dense vertex indices `0..n`.

mod bitset;
pub mod clique;
pub mod chromatic;
pub mod compose;
pub mod generate;
pub mod homomorphism;
pub mod io;

pub use bitset::VertexSet;
pub use chromatic::{chromatic_number, greedy_coloring, ChromaticResult, DEFAULT_BUDGET};
pub use clique::max_clique;
pub use compose::{compose, double_subdivide, reduce_four_cycle_pairs, ComposeKind, GraphExpr};
pub use generate::{generate, smallest_star_n, GraphSpec};
pub use homomorphism::{verify_homomorphism, Homomorphism};

use crate::error::{Error, Result};

/// Simple undirected finite graph. Edges are stored once as `(u, v)` with
/// `u < v`, sorted; adjacency is kept as bitsets for the exact solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![VertexSet::new(n); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !adj[a].contains(b) {
                adj[a].insert(b);
                adj[b].insert(a);
                list.push((a, b));
            }
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied().chain(std::iter::once((u, v))))
    }

    /// Subgraph induced by `keep` (in the given order); vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph edges are valid")
    }

    /// Whether no edge joins two vertices of the same color.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        self.monochromatic_edge(colors).is_none()
    }

    /// First edge whose endpoints share a color.
    pub fn monochromatic_edge(&self, colors: &[usize]) -> Option<(usize, usize)> {
        self.edges.iter().copied().find(|&(u, v)| colors[u] == colors[v])
    }
}
