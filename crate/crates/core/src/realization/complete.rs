//! Arrangements for complete graphs.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::Realization;
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Exact plane-width of K_n for `2 <= n <= 8`.
pub fn known_complete_width(n: usize) -> Result<f64> {
    Ok(match n {
        2 | 3 => 1.0,
        4 => 2f64.sqrt(),
        5 => (1.0 + 5f64.sqrt()) / 2.0,
        6 => 2.0 * (2.0 * PI / 5.0).sin(),
        7 => 2.0,
        8 => 1.0 / (2.0 * (PI / 14.0).sin()),
        _ => return Err(Error::Parameter(format!("exact plane-width of K_{n} is not known (2..=8)"))),
    })
}

fn regular_polygon(k: usize, circumradius: f64, phase: f64) -> impl Iterator<Item = Point> {
    (0..k).map(move |i| Point::polar(circumradius, phase + i as f64 * TAU / k as f64))
}

/// Optimal arrangement of K_n for `2 <= n <= 8`:
/// segment, triangle, unit square, unit-side pentagon, circumradius-1
/// pentagon plus center, unit hexagon plus center, unit-side heptagon plus
/// circumcenter.
pub fn known_complete_arrangement(n: usize) -> Result<Realization> {
    let points: Vec<Point> = match n {
        2 => vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)],
        3 => vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 3f64.sqrt() / 2.0)],
        4 => vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)],
        5 => regular_polygon(5, 1.0 / (2.0 * (PI / 5.0).sin()), FRAC_PI_2).collect(),
        6 => regular_polygon(5, 1.0, FRAC_PI_2).chain([Point::ORIGIN]).collect(),
        7 => regular_polygon(6, 1.0, 0.0).chain([Point::ORIGIN]).collect(),
        8 => regular_polygon(7, 1.0 / (2.0 * (PI / 7.0).sin()), FRAC_PI_2).chain([Point::ORIGIN]).collect(),
        _ => return Err(Error::Parameter(format!("no known arrangement for K_{n} (2..=8)"))),
    };
    Ok(Realization::euclidean(points))
}

/// The `n` unit triangular-lattice points closest to a lattice point, ties
/// broken by polar angle in `[0, 2π)`. Pairwise distances are at least one,
/// so this realizes K_n.
pub fn lattice_complete_arrangement(n: usize) -> Result<Realization> {
    if n < 2 {
        return Err(Error::Parameter(format!("lattice arrangement needs n >= 2, got {n}")));
    }
    let h = 3f64.sqrt() / 2.0;
    let mut radius = (n as f64 * h / PI).sqrt() + 2.0;
    loop {
        // lattice point i*(1,0) + j*(1/2, √3/2) has squared norm i² + ij + j²
        let r2 = (radius * radius).floor() as i64;
        let span = (radius / h).ceil() as i64 + 1;
        let mut pts: Vec<(i64, f64, Point)> = Vec::new();
        for j in -span..=span {
            for i in -2 * span..=2 * span {
                let norm2 = i * i + i * j + j * j;
                if norm2 <= r2 {
                    let p = Point::new(i as f64 + 0.5 * j as f64, h * j as f64);
                    let angle = if norm2 == 0 { 0.0 } else { p.y.atan2(p.x).rem_euclid(TAU) };
                    pts.push((norm2, angle, p));
                }
            }
        }
        if pts.len() >= n {
            pts.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
            return Ok(Realization::euclidean(pts.into_iter().take(n).map(|t| t.2).collect()));
        }
        radius *= 1.5;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::realization::evaluate;

    #[test]
    fn table_widths() {
        for n in 2..=8 {
            let r = known_complete_arrangement(n).unwrap();
            let e = evaluate(&Graph::complete(n), &r, 1e-9).unwrap();
            assert!(e.valid, "K_{n}");
            assert!((e.width - known_complete_width(n).unwrap()).abs() < 1e-12, "K_{n}: {}", e.width);
        }
    }

    #[test]
    fn table_decimals() {
        let approx = [1.0, 1.0, 1.414214, 1.618034, 1.902113, 2.0, 2.246980];
        for (n, a) in (2..=8).zip(approx) {
            assert!((known_complete_width(n).unwrap() - a).abs() < 1e-6);
        }
    }

    #[test]
    fn k8_center_clearance() {
        let r = known_complete_arrangement(8).unwrap();
        let d = (r.points[0] - r.points[7]).norm();
        assert!((d - 1.0 / (2.0 * (PI / 7.0).sin())).abs() < 1e-12);
        assert!((d - 1.152382).abs() < 1e-6);
        // every heptagon side is exactly one
        for i in 0..7 {
            assert!(((r.points[i] - r.points[(i + 1) % 7]).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(known_complete_arrangement(1).is_err());
        assert!(known_complete_arrangement(9).is_err());
        assert!(lattice_complete_arrangement(1).is_err());
    }

    #[test]
    fn lattice_small_cases() {
        let r3 = lattice_complete_arrangement(3).unwrap();
        assert!((r3.width() - 1.0).abs() < 1e-12);
        let r7 = lattice_complete_arrangement(7).unwrap();
        assert!((r7.width() - 2.0).abs() < 1e-12);
        for n in [2, 3, 7, 12, 19, 40] {
            let r = lattice_complete_arrangement(n).unwrap();
            assert_eq!(r.n(), n);
            assert!(evaluate(&Graph::complete(n), &r, 1e-9).unwrap().valid);
        }
    }

    #[test]
    fn lattice_widths_nondecreasing() {
        let widths: Vec<f64> = (2..60).map(|n| lattice_complete_arrangement(n).unwrap().width()).collect();
        assert!(widths.windows(2).all(|w| w[0] <= w[1] + 1e-12));
    }
}
