use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use crate::error::{Error, Result};
use crate::geometry::{pal_hexagon, Point};
use crate::graph::Graph;
use crate::realization::{evaluate, Coloring, Realization};
use crate::DEFAULT_TOL;

/// `t = ⌊2d/3⌋ + 1`, so that tiling cells of side `d/(3t)` have diameter
/// strictly below one.
pub fn tiling_parameter(d: f64) -> usize {
    (2.0 * d / 3.0).floor() as usize + 1
}

/// Nearest point of the triangular lattice in axial coordinates, by cube
/// rounding.
fn cube_round(a: f64, b: f64) -> (i64, i64) {
    let c = -a - b;
    let (mut ra, mut rb, rc) = (a.round(), b.round(), c.round());
    let (da, db, dc) = ((ra - a).abs(), (rb - b).abs(), (rc - c).abs());
    if da > db && da > dc {
        ra = -rb - rc;
    } else if db > dc {
        rb = -ra - rc;
    }
    (ra as i64, rb as i64)
}

fn hex_distance(a: i64, b: i64) -> i64 {
    a.abs().max(b.abs()).max((a + b).abs())
}

/// Colors a realization of width `d` by the cells of a hexagonal tiling
/// with cell side `d/(3t)`, aligned so the corners of the enclosing hexagon
/// sit at cell centers. Uses at most `3t² + 3t + 1` colors, numbered by
/// cell in axial order.
pub fn tiling_coloring(g: &Graph, r: &Realization) -> Result<Coloring> {
    if !r.norm.is_euclidean() {
        return Err(Error::Precondition("tiling needs a planar Euclidean realization".into()));
    }
    let e = evaluate(g, r, DEFAULT_TOL)?;
    if !e.valid {
        return Err(Error::Precondition(format!(
            "realization violates edge {:?}",
            e.violating_edge.expect("invalid evaluation names an edge")
        )));
    }
    if g.n() == 0 {
        return Ok(Coloring::new(Vec::new()));
    }
    if e.width == 0.0 {
        return Ok(Coloring::new(vec![0; g.n()]));
    }

    let t = tiling_parameter(e.width);
    let hex = pal_hexagon(&r.points);
    let side = hex.width / (3 * t) as f64;
    let spacing = 3f64.sqrt() * side;
    // lattice basis along the corner directions of the enclosing hexagon
    let e1 = Point::polar(spacing, hex.orientation + FRAC_PI_6);
    let e2 = Point::polar(spacing, hex.orientation + FRAC_PI_6 + FRAC_PI_3);
    let det = e1.cross(e2);

    let cells = r
        .points
        .iter()
        .enumerate()
        .map(|(v, &p)| {
            let d = p - hex.center;
            let (a, b) = cube_round(d.cross(e2) / det, e1.cross(d) / det);
            if hex_distance(a, b) > t as i64 {
                return Err(Error::Consistency(format!(
                    "vertex {v} falls outside the {} designated cells",
                    3 * t * t + 3 * t + 1
                )));
            }
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;

    let used: BTreeSet<(i64, i64)> = cells.iter().copied().collect();
    let index: Vec<(i64, i64)> = used.into_iter().collect();
    let colors = cells.iter().map(|c| index.binary_search(c).expect("cell is listed")).collect();
    let coloring = Coloring::new(colors);
    coloring
        .check_proper(g)
        .map_err(|err| Error::Consistency(format!("tiling produced an improper coloring: {err}")))?;
    Ok(coloring)
}
