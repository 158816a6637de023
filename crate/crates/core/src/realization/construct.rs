//! Realizations built from colorings, circular colorings and homomorphisms.

use std::f64::consts::{PI, TAU};

use super::{evaluate, known_complete_arrangement, lattice_complete_arrangement, Coloring, Realization};
use crate::error::{Error, Result};
use crate::geometry::{NormSpec, Point};
use crate::graph::{Graph, Homomorphism};
use crate::DEFAULT_TOL;

/// Arrangement that color classes are sent to, by number of colors.
fn class_targets(k: usize) -> Result<Realization> {
    match k {
        0..=3 => known_complete_arrangement(3),
        4..=8 => known_complete_arrangement(k),
        _ => lattice_complete_arrangement(k),
    }
}

/// Sends every color class to its own point of an arrangement of K_k
/// (k = number of colors): triangle for k <= 3, the known optimal
/// arrangements for k <= 8, the lattice disk beyond.
pub fn from_coloring(g: &Graph, c: &Coloring) -> Result<Realization> {
    c.check_proper(g)?;
    let target = class_targets(c.k)?;
    Ok(Realization::euclidean(c.colors.iter().map(|&col| target.points[col]).collect()))
}

/// Angular separation of two directions, in `[0, π]`.
fn angular_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Places every vertex on the circle of radius `1 / (2 sin(π/chi_c))` at its
/// angle. Every edge must span an angle of at least `2π/chi_c`.
pub fn from_circular(g: &Graph, angles: &[f64], chi_c: f64) -> Result<Realization> {
    if !(chi_c >= 2.0) || !chi_c.is_finite() {
        return Err(Error::Parameter(format!("circular chromatic number must be >= 2, got {chi_c}")));
    }
    if angles.len() != g.n() {
        return Err(Error::Parameter(format!("{} angles for {} vertices", angles.len(), g.n())));
    }
    let need = TAU / chi_c;
    for &(u, v) in g.edges() {
        let gap = angular_gap(angles[u], angles[v]);
        if gap < need * (1.0 - 1e-12) {
            return Err(Error::Certificate(format!(
                "edge ({u}, {v}) spans {gap:.12} rad, needs {need:.12}"
            )));
        }
    }
    let radius = 1.0 / (2.0 * (PI / chi_c).sin());
    Ok(Realization::euclidean(angles.iter().map(|&a| Point::polar(radius, a)).collect()))
}

/// `r'(v) = r(φ(v))`.
pub fn pullback(phi: &Homomorphism, target: &Realization) -> Result<Realization> {
    if let Some((u, v)) = phi.broken_edge()? {
        return Err(Error::Certificate(format!("edge ({u}, {v}) does not map to an edge")));
    }
    let eval = evaluate(&phi.target, target, DEFAULT_TOL)?;
    if !eval.valid {
        return Err(Error::Certificate(format!(
            "target realization violates edge {:?}",
            eval.violating_edge.expect("invalid evaluation names an edge")
        )));
    }
    Ok(Realization { points: phi.map.iter().map(|&w| target.points[w]).collect(), norm: target.norm })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowDimMode {
    /// Color `i` at coordinate `i` on a line.
    Line,
    /// Color `i` at `(i mod s, i div s)` under the maximum norm, `s = ⌈√k⌉`.
    LinfGrid,
}

/// Smallest `s` with `s² >= k`.
fn ceil_sqrt(k: usize) -> usize {
    let mut s = (k as f64).sqrt() as usize;
    while s * s < k {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= k {
        s -= 1;
    }
    s
}

pub fn low_dim_realization(g: &Graph, c: &Coloring, mode: LowDimMode) -> Result<Realization> {
    c.check_proper(g)?;
    Ok(match mode {
        LowDimMode::Line => Realization {
            points: c.colors.iter().map(|&i| Point::new(i as f64, 0.0)).collect(),
            norm: NormSpec::LINE,
        },
        LowDimMode::LinfGrid => {
            let s = ceil_sqrt(c.k).max(1);
            Realization {
                points: c.colors.iter().map(|&i| Point::new((i % s) as f64, (i / s) as f64)).collect(),
                norm: NormSpec::MAX,
            }
        }
    })
}

/// Defining arrangement of the circle-star graph: `6n + 1` equidistant
/// points on the circle of diameter `2 + eps`, then the center.
pub fn star_arrangement(n: usize, eps: f64) -> Realization {
    let m = 6 * n + 1;
    let radius = (2.0 + eps) / 2.0;
    Realization::euclidean(
        (0..m).map(|i| Point::polar(radius, i as f64 * TAU / m as f64)).chain([Point::ORIGIN]).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chromatic_number, generate, GraphSpec};
    use crate::realization::known_complete_width;
    use std::time::Duration;

    fn exact_coloring(g: &Graph) -> Coloring {
        let r = chromatic_number(g, Duration::from_secs(10));
        assert!(r.exact);
        Coloring::new(r.coloring)
    }

    #[test]
    fn bipartite_width_one() {
        let g = generate(&GraphSpec::Cycle(6)).unwrap();
        let r = from_coloring(&g, &exact_coloring(&g)).unwrap();
        let e = evaluate(&g, &r, 1e-9).unwrap();
        assert!(e.valid);
        assert!((e.width - 1.0).abs() < 1e-12);
    }

    #[test]
    fn seven_colors_hexagon() {
        let g = Graph::complete(7);
        let r = from_coloring(&g, &Coloring::new((0..7).collect())).unwrap();
        assert!((r.width() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn odd_wheel_square() {
        let g = generate(&GraphSpec::OddWheel(5)).unwrap();
        let r = from_coloring(&g, &exact_coloring(&g)).unwrap();
        let e = evaluate(&g, &r, 1e-9).unwrap();
        assert!(e.valid);
        assert!((e.width - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn table_widths_from_colorings() {
        for k in 2..=8 {
            let r = from_coloring(&Graph::complete(k), &Coloring::new((0..k).collect())).unwrap();
            assert!((r.width() - known_complete_width(k).unwrap()).abs() < 1e-12);
        }
        let r9 = from_coloring(&Graph::complete(9), &Coloring::new((0..9).collect())).unwrap();
        assert!(evaluate(&Graph::complete(9), &r9, 1e-9).unwrap().valid);
    }

    #[test]
    fn improper_coloring_rejected() {
        let g = Graph::complete(3);
        assert!(matches!(from_coloring(&g, &Coloring::new(vec![0, 0, 1])), Err(Error::Certificate(_))));
    }

    #[test]
    fn circular_triangle() {
        let g = Graph::complete(3);
        let r = from_circular(&g, &[0.0, TAU / 3.0, 2.0 * TAU / 3.0], 3.0).unwrap();
        let e = evaluate(&g, &r, 1e-9).unwrap();
        assert!(e.valid);
        // inscribed unit triangle, inside the circle bound 1/sin(π/3) = 2/√3
        assert!((e.width - 1.0).abs() < 1e-12);
        assert!(e.width <= 2.0 / 3f64.sqrt());
    }

    #[test]
    fn circular_antipodal_pair() {
        let g = Graph::complete(2);
        let r = from_circular(&g, &[0.0, PI], 2.0).unwrap();
        assert!((r.points[0].norm() - 0.5).abs() < 1e-15);
        assert!((r.width() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn circular_circulant() {
        let g = generate(&GraphSpec::Circulant { p: 25, q: 4 }).unwrap();
        let angles: Vec<f64> = (0..25).map(|i| TAU * i as f64 / 25.0).collect();
        let r = from_circular(&g, &angles, 25.0 / 4.0).unwrap();
        let e = evaluate(&g, &r, 1e-9).unwrap();
        assert!(e.valid);
        let bound = 1.0 / (4.0 * PI / 25.0).sin();
        assert!((bound - 2.075750).abs() < 1e-6);
        assert!(e.width <= bound + 1e-9);
    }

    #[test]
    fn circular_gap_violation() {
        let g = Graph::complete(3);
        match from_circular(&g, &[0.0, 0.5, 3.0], 3.0) {
            Err(Error::Certificate(msg)) => assert!(msg.contains("(0, 1)")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(from_circular(&g, &[0.0, 1.0, 2.0], 1.5).is_err());
    }

    #[test]
    fn pullback_identity_and_coloring() {
        let k4 = Graph::complete(4);
        let sq = known_complete_arrangement(4).unwrap();
        let id = Homomorphism { source: k4.clone(), target: k4.clone(), map: vec![0, 1, 2, 3] };
        assert_eq!(pullback(&id, &sq).unwrap(), sq);

        let w = generate(&GraphSpec::OddWheel(7)).unwrap();
        let c = exact_coloring(&w);
        assert_eq!(c.k, 4);
        let phi = Homomorphism::from_coloring(&w, &c.colors, 4);
        assert_eq!(pullback(&phi, &sq).unwrap(), from_coloring(&w, &c).unwrap());
    }

    #[test]
    fn pullback_through_subdivision() {
        let k4 = Graph::complete(4);
        let s = crate::graph::double_subdivide(&k4, (0, 1)).unwrap();
        let phi = Homomorphism { source: s.clone(), target: k4, map: vec![0, 1, 2, 3, 1, 0] };
        let r = pullback(&phi, &known_complete_arrangement(4).unwrap()).unwrap();
        let e = evaluate(&s, &r, 1e-9).unwrap();
        assert!(e.valid && e.width <= 2f64.sqrt() + 1e-12);
    }

    #[test]
    fn pullback_rejects_bad_map() {
        let k3 = Graph::complete(3);
        let phi = Homomorphism { source: k3.clone(), target: k3, map: vec![0, 0, 1] };
        assert!(matches!(
            pullback(&phi, &known_complete_arrangement(3).unwrap()),
            Err(Error::Certificate(_))
        ));
    }

    #[test]
    fn low_dim_examples() {
        let k3 = Graph::complete(3);
        let line = low_dim_realization(&k3, &Coloring::new(vec![0, 1, 2]), LowDimMode::Line).unwrap();
        assert_eq!(line.width(), 2.0);
        assert!(evaluate(&k3, &line, 0.0).unwrap().valid);

        let k5 = Graph::complete(5);
        let grid = low_dim_realization(&k5, &Coloring::new((0..5).collect()), LowDimMode::LinfGrid).unwrap();
        assert_eq!(grid.width(), 2.0);
        assert!(5f64.sqrt() - 1.0 <= 2.0 && 2.0 < 5f64.sqrt());
        assert!(evaluate(&k5, &grid, 0.0).unwrap().valid);

        let k4 = Graph::complete(4);
        let grid4 = low_dim_realization(&k4, &Coloring::new((0..4).collect()), LowDimMode::LinfGrid).unwrap();
        assert_eq!(grid4.width(), 1.0);
        assert!(evaluate(&k4, &grid4, 0.0).unwrap().valid);
    }

    #[test]
    fn ceil_sqrt_exact() {
        for k in 0..500usize {
            let s = ceil_sqrt(k);
            assert!(s * s >= k && (s == 0 || (s - 1) * (s - 1) < k), "k = {k}");
        }
    }

    #[test]
    fn star_arrangement_realizes_star() {
        let g = generate(&GraphSpec::CircleStar { n: 4, eps: 0.1 }).unwrap();
        let e = evaluate(&g, &star_arrangement(4, 0.1), 1e-9).unwrap();
        assert!(e.valid);
        assert!(e.width < 2.1);
    }
}
