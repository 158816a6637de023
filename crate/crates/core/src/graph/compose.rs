//! Graph operators: join, Cartesian product, disjoint union, complement,
//! double subdivision and the four-cycle pair reduction.

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComposeKind {
    Join,
    Cartesian,
    DisjointUnion,
    Complement,
}

/// Applies a binary (or, for `Complement`, unary) operator.
///
/// Vertex numbering: join and disjoint union put `g` first, then `h`
/// shifted by `g.n()`; the Cartesian product numbers `(u, x)` as
/// `u * h.n() + x`.
pub fn compose(kind: ComposeKind, g: &Graph, h: Option<&Graph>) -> Result<Graph> {
    if kind == ComposeKind::Complement {
        return Ok(complement(g));
    }
    let h = h.ok_or_else(|| Error::Parameter(format!("{kind:?} needs a second graph")))?;
    Ok(match kind {
        ComposeKind::Join => join(g, h),
        ComposeKind::Cartesian => cartesian(g, h),
        ComposeKind::DisjointUnion => disjoint_union(g, h),
        ComposeKind::Complement => unreachable!(),
    })
}

fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges = g.edges().iter().copied().chain(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_edges(g.n() + h.n(), edges).expect("union edges are valid")
}

fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let cross = (0..g.n()).flat_map(|u| (0..h.n()).map(move |x| (u, x + off)));
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + off, v + off)))
        .chain(cross);
    Graph::from_edges(g.n() + h.n(), edges).expect("join edges are valid")
}

fn cartesian(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let idx = |u: usize, x: usize| u * nh + x;
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for &(x, y) in h.edges() {
            edges.push((idx(u, x), idx(u, y)));
        }
    }
    for x in 0..nh {
        for &(u, v) in g.edges() {
            edges.push((idx(u, x), idx(v, x)));
        }
    }
    Graph::from_edges(g.n() * nh, edges).expect("product edges are valid")
}

fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v));
    Graph::from_edges(n, edges).expect("complement edges are valid")
}

/// Replaces edge `uv` by the path `u x y v` through two new vertices
/// `x = n`, `y = n + 1`.
pub fn double_subdivide(g: &Graph, edge: (usize, usize)) -> Result<Graph> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(Error::Parameter(format!("({u}, {v}) is not an edge")));
    }
    let (x, y) = (g.n(), g.n() + 1);
    let kept = g.edges().iter().copied().filter(|&e| e != (u.min(v), u.max(v)));
    Graph::from_edges(g.n() + 2, kept.chain([(u, x), (x, y), (y, v)]))
}

/// Repeatedly deletes an adjacent pair `x y` of degree-2 vertices lying on a
/// four-cycle `u x y v` (so `u ~ v`), until no such pair remains. Surviving
/// vertices keep their relative order.
pub fn reduce_four_cycle_pairs(g: &Graph) -> Graph {
    reduce_four_cycle_pairs_with_map(g).0
}

/// As [`reduce_four_cycle_pairs`], also returning the original index of
/// every surviving vertex.
pub fn reduce_four_cycle_pairs_with_map(g: &Graph) -> (Graph, Vec<usize>) {
    let mut current = g.clone();
    let mut origin: Vec<usize> = (0..g.n()).collect();
    while let Some((x, y)) = find_reducible_pair(&current) {
        let keep: Vec<usize> = (0..current.n()).filter(|&w| w != x && w != y).collect();
        origin = keep.iter().map(|&w| origin[w]).collect();
        current = current.induced(&keep);
    }
    (current, origin)
}

fn find_reducible_pair(g: &Graph) -> Option<(usize, usize)> {
    let other = |a: usize, b: usize| g.neighbors(a).iter().find(|&w| w != b);
    g.edges().iter().copied().find(|&(x, y)| {
        if g.degree(x) != 2 || g.degree(y) != 2 {
            return false;
        }
        match (other(x, y), other(y, x)) {
            (Some(u), Some(v)) => u != v && g.has_edge(u, v),
            _ => false,
        }
    })
}

/// A graph together with the recipe that built it, so the bounds engine can
/// apply the composition constructions recursively.
#[derive(Clone, Debug)]
pub enum GraphExpr {
    Leaf(Graph),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Cartesian(Box<GraphExpr>, Box<GraphExpr>),
    Union(Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn leaf(g: Graph) -> Self {
        GraphExpr::Leaf(g)
    }

    pub fn join(a: GraphExpr, b: GraphExpr) -> Self {
        GraphExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn cartesian(a: GraphExpr, b: GraphExpr) -> Self {
        GraphExpr::Cartesian(Box::new(a), Box::new(b))
    }

    pub fn union(a: GraphExpr, b: GraphExpr) -> Self {
        GraphExpr::Union(Box::new(a), Box::new(b))
    }

    /// The graph this expression denotes.
    pub fn graph(&self) -> Graph {
        let bin = |k, a: &GraphExpr, b: &GraphExpr| {
            compose(k, &a.graph(), Some(&b.graph())).expect("binary compose with both operands")
        };
        match self {
            GraphExpr::Leaf(g) => g.clone(),
            GraphExpr::Join(a, b) => bin(ComposeKind::Join, a, b),
            GraphExpr::Cartesian(a, b) => bin(ComposeKind::Cartesian, a, b),
            GraphExpr::Union(a, b) => bin(ComposeKind::DisjointUnion, a, b),
        }
    }
}

impl From<Graph> for GraphExpr {
    fn from(g: Graph) -> Self {
        GraphExpr::Leaf(g)
    }
}
