//! Realizations, colorings and their verification, plus every explicit
//! construction.

mod complete;
mod compose;
mod construct;
pub mod io;

pub use complete::{known_complete_arrangement, known_complete_width, lattice_complete_arrangement};
pub use compose::{join_realization, product_realization, union_realization};
pub use construct::{from_circular, from_coloring, low_dim_realization, pullback, star_arrangement, LowDimMode};

use crate::error::{Error, Result};
use crate::geometry::{diameter, distance, NormSpec, Point};
use crate::graph::Graph;

/// One point per vertex, together with the norm the points live in.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub points: Vec<Point>,
    pub norm: NormSpec,
}

impl Realization {
    pub fn new(points: Vec<Point>, norm: NormSpec) -> Result<Self> {
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::Parameter(format!("point {i} has a non-finite coordinate")));
        }
        Ok(Realization { points, norm })
    }

    pub fn euclidean(points: Vec<Point>) -> Self {
        Realization { points, norm: NormSpec::EUCLIDEAN }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Diameter of the arrangement (0 for fewer than two points).
    pub fn width(&self) -> f64 {
        if self.points.is_empty() {
            0.0
        } else {
            diameter(&self.points, self.norm).0
        }
    }

    pub fn dist(&self, u: usize, v: usize) -> f64 {
        distance(self.points[u], self.points[v], self.norm)
    }

    /// Smallest image distance over the edges of `g`, with the edge.
    pub fn min_edge(&self, g: &Graph) -> Option<(f64, (usize, usize))> {
        g.edges().iter().fold(None, |best, &(u, v)| {
            let d = self.dist(u, v);
            match best {
                Some((b, _)) if b <= d => best,
                _ => Some((d, (u, v))),
            }
        })
    }
}

/// Color per vertex; `k` is one more than the largest color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let k = colors.iter().max().map_or(0, |m| m + 1);
        Coloring { colors, k }
    }

    /// Fails with a certificate error naming a monochromatic edge.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::Parameter(format!(
                "coloring has {} entries, graph has {} vertices",
                self.colors.len(),
                g.n()
            )));
        }
        match g.monochromatic_edge(&self.colors) {
            None => Ok(()),
            Some((u, v)) => Err(Error::Certificate(format!(
                "edge ({u}, {v}) is monochromatic (color {})",
                self.colors[u]
            ))),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check_proper(g).is_ok()
    }
}

/// Result of checking a realization against a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub width: f64,
    /// `+inf` for an edgeless graph.
    pub min_edge_distance: f64,
    pub valid: bool,
    pub violating_edge: Option<(usize, usize)>,
}

/// Width and edge-constraint check. Valid iff every edge has image distance
/// at least `1 - tol`.
pub fn evaluate(g: &Graph, r: &Realization, tol: f64) -> Result<Evaluation> {
    if r.n() != g.n() {
        return Err(Error::Parameter(format!("realization has {} points, graph has {} vertices", r.n(), g.n())));
    }
    let width = r.width();
    Ok(match r.min_edge(g) {
        None => Evaluation { width, min_edge_distance: f64::INFINITY, valid: true, violating_edge: None },
        Some((d, e)) => {
            let valid = d >= 1.0 - tol;
            Evaluation { width, min_edge_distance: d, valid, violating_edge: (!valid).then_some(e) }
        }
    })
}

/// Scales `r` about its centroid so every edge has length at least one.
/// Valid inputs come back unchanged; the width grows by the same factor.
pub fn feasibilize(g: &Graph, r: &Realization) -> Result<Realization> {
    if r.n() != g.n() {
        return Err(Error::Parameter(format!("realization has {} points, graph has {} vertices", r.n(), g.n())));
    }
    let (m, (u, v)) = r.min_edge(g).ok_or_else(|| Error::Parameter("graph has no edges".into()))?;
    if m >= 1.0 {
        return Ok(r.clone());
    }
    if !(m > 0.0) {
        return Err(Error::Infeasible(format!("adjacent vertices {u} and {v} share a point")));
    }
    let n = r.n() as f64;
    let centroid = r.points.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * (1.0 / n);
    let mut scale = 1.0 / m;
    loop {
        let points: Vec<Point> = r.points.iter().map(|&p| centroid + (p - centroid) * scale).collect();
        let out = Realization { points, norm: r.norm };
        match out.min_edge(g) {
            Some((d, _)) if d >= 1.0 => return Ok(out),
            _ => scale *= 1.0 + 4.0 * f64::EPSILON,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphSpec};

    fn sq() -> Realization {
        Realization::euclidean(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
    }

    #[test]
    fn k4_on_square() {
        let e = evaluate(&Graph::complete(4), &sq(), 1e-9).unwrap();
        assert!((e.width - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(e.min_edge_distance, 1.0);
        assert!(e.valid);
    }

    #[test]
    fn coincident_k2_invalid() {
        let r = Realization::euclidean(vec![Point::ORIGIN; 2]);
        let e = evaluate(&Graph::complete(2), &r, 1e-9).unwrap();
        assert_eq!(e.min_edge_distance, 0.0);
        assert!(!e.valid);
        assert_eq!(e.violating_edge, Some((0, 1)));
        assert!(matches!(feasibilize(&Graph::complete(2), &r), Err(Error::Infeasible(_))));
    }

    #[test]
    fn edgeless_is_valid() {
        let r = Realization::euclidean(vec![Point::ORIGIN, Point::new(3.0, 4.0)]);
        let e = evaluate(&Graph::empty(2), &r, 1e-9).unwrap();
        assert!(e.valid);
        assert_eq!(e.width, 5.0);
        assert!(e.min_edge_distance.is_infinite());
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(evaluate(&Graph::complete(3), &sq(), 1e-9), Err(Error::Parameter(_))));
    }

    #[test]
    fn feasibilize_identity_and_scaling() {
        let k4 = Graph::complete(4);
        assert_eq!(feasibilize(&k4, &sq()).unwrap(), sq());

        let h = 3f64.sqrt() / 4.0;
        let small = Realization::euclidean(vec![Point::new(0.0, 0.0), Point::new(0.5, 0.0), Point::new(0.25, h)]);
        let k3 = Graph::complete(3);
        let out = feasibilize(&k3, &small).unwrap();
        let e = evaluate(&k3, &out, 0.0).unwrap();
        assert!(e.min_edge_distance >= 1.0);
        assert!((e.width - 1.0).abs() < 1e-12);
        assert_eq!(feasibilize(&k3, &out).unwrap(), out);
    }

    #[test]
    fn feasibilize_perturbed_pentagon() {
        use rand::{Rng, SeedableRng};
        let k5 = Graph::complete(5);
        let base = known_complete_arrangement(5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let pts: Vec<Point> = base
            .points
            .iter()
            .map(|&p| p * 0.98 + Point::new(rng.gen_range(-1e-3..1e-3), rng.gen_range(-1e-3..1e-3)))
            .collect();
        let r = Realization::euclidean(pts);
        let (m, _) = r.min_edge(&k5).unwrap();
        assert!(m < 1.0);
        let out = feasibilize(&k5, &r).unwrap();
        let (m2, _) = out.min_edge(&k5).unwrap();
        assert!(m2 >= 1.0 && m2 < 1.0 + 1e-12);
        // width scales by the same factor, recomputed from scratch
        assert!((out.width() - r.width() / m).abs() < 1e-12);
    }

    #[test]
    fn coloring_check_names_edge() {
        let c5 = generate(&GraphSpec::Cycle(5)).unwrap();
        let bad = Coloring::new(vec![0, 1, 0, 1, 0]);
        match bad.check_proper(&c5) {
            Err(Error::Certificate(msg)) => assert!(msg.contains("(0, 4)")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Coloring::new(vec![0, 1, 0, 1, 2]).is_proper(&c5));
        assert_eq!(Coloring::new(vec![0, 1, 0, 1, 2]).k, 3);
    }
}
