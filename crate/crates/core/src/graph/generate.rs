//! Named graph families.

use std::f64::consts::PI;
use std::path::PathBuf;

use super::io::{read_graph, GraphFormat};
use super::Graph;
use crate::error::{Error, Result};

/// A graph family plus its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Odd cycle of the given length plus a hub adjacent to every cycle vertex.
    OddWheel(usize),
    /// K_{p/q}: `i ~ j` iff the circular index distance is at least `q`.
    Circulant { p: usize, q: usize },
    /// `6n + 1` equidistant points on a circle of diameter `2 + eps`, joined
    /// when their chord is at least one, plus a universal center vertex.
    CircleStar { n: usize, eps: f64 },
    Petersen,
    Grotzsch,
    FromFile { path: PathBuf, format: GraphFormat },
}

impl GraphSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parameter(msg));
        match *self {
            GraphSpec::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            GraphSpec::OddWheel(k) if k < 3 || k % 2 == 0 => {
                bad(format!("odd wheel needs an odd cycle length >= 3, got {k}"))
            }
            GraphSpec::Circulant { p, q } if q < 1 || p <= 2 * q => {
                bad(format!("circulant needs p > 2q >= 2, got p = {p}, q = {q}"))
            }
            GraphSpec::CircleStar { n, eps } if n < 1 || !(eps > 0.0) || !eps.is_finite() => {
                bad(format!("circle-star needs n >= 1 and eps > 0, got n = {n}, eps = {eps}"))
            }
            _ => Ok(()),
        }
    }
}

/// Builds the graph named by `spec`.
pub fn generate(spec: &GraphSpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match spec {
        GraphSpec::Complete(n) => Graph::complete(*n),
        GraphSpec::Cycle(n) => cycle(*n),
        GraphSpec::Path(n) => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))?,
        GraphSpec::OddWheel(k) => {
            let hub = *k;
            let edges = (0..*k).map(|i| (i, (i + 1) % k)).chain((0..*k).map(|i| (i, hub)));
            Graph::from_edges(k + 1, edges)?
        }
        GraphSpec::Circulant { p, q } => circulant(*p, *q),
        GraphSpec::CircleStar { n, eps } => circle_star(*n, *eps),
        GraphSpec::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))?
        }
        GraphSpec::Grotzsch => {
            // Mycielskian of C5: shadows 5..9, apex 10.
            let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            for i in 0..5 {
                edges.push((i + 5, (i + 1) % 5));
                edges.push((i + 5, (i + 4) % 5));
                edges.push((i + 5, 10));
            }
            Graph::from_edges(11, edges)?
        }
        GraphSpec::FromFile { path, format } => {
            let text = std::fs::read_to_string(path)?;
            read_graph(&text, *format)?
        }
    })
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

fn circulant(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            let d = (j - i).min(p - (j - i));
            if d >= q {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(p, edges).expect("circulant edges are valid")
}

/// Chord between points `k` steps apart among `m` equidistant points on a
/// circle of diameter `diam`.
pub(crate) fn chord(diam: f64, k: usize, m: usize) -> f64 {
    diam * (k as f64 * PI / m as f64).sin()
}

fn circle_star(n: usize, eps: f64) -> Graph {
    let m = 6 * n + 1;
    let diam = 2.0 + eps;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let k = (j - i).min(m - (j - i));
            if chord(diam, k, m) >= 1.0 {
                edges.push((i, j));
            }
        }
        edges.push((i, m));
    }
    Graph::from_edges(m + 1, edges).expect("star edges are valid")
}

/// Smallest `n >= 2` with `(2 + eps) sin(n pi / (6n + 1)) >= 1`.
pub fn smallest_star_n(eps: f64) -> Result<usize> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Parameter(format!("eps must be positive and finite, got {eps}")));
    }
    const CAP: usize = 10_000_000;
    (2..=CAP)
        .find(|&n| chord(2.0 + eps, n, 6 * n + 1) >= 1.0)
        .ok_or_else(|| Error::Parameter(format!("eps = {eps} needs n beyond {CAP}")))
}
