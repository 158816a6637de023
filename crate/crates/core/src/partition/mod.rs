//! Partitions of unit-diameter point sets into small pieces, and the proper
//! colorings they induce on realizations.
//!
//! Every membership rule is total: each point gets exactly one label, with
//! boundary points resolved by the inclusive/exclusive rules documented on
//! each scheme and, where pieces still overlap, by the lowest region index.

mod tiling;

pub use tiling::{tiling_coloring, tiling_parameter};

use std::f64::consts::{FRAC_PI_3, TAU};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{diameter, pal_hexagon, Hexagon, NormSpec, Point};
use crate::graph::Graph;
use crate::realization::{evaluate, Coloring, Realization};
use crate::DEFAULT_TOL;

/// Coordinates within this distance of a cut line, corner or special point
/// are snapped onto it.
const SNAP: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Three sectors of the enclosing hexagon.
    Three,
    /// Four quadrants of the enclosing unit square.
    Four,
    /// Core hexagon plus six rim pieces.
    Seven,
}

impl Scheme {
    pub fn pieces(self) -> usize {
        match self {
            Scheme::Three => 3,
            Scheme::Four => 4,
            Scheme::Seven => 7,
        }
    }

    /// Every piece of a unit-diameter set has diameter below this.
    pub fn delta(self) -> f64 {
        match self {
            Scheme::Three => 3f64.sqrt() / 2.0,
            Scheme::Four => 2f64.sqrt() / 2.0,
            Scheme::Seven => 0.5,
        }
    }

    /// Largest realization width for which the pieces are independent sets.
    pub fn threshold(self) -> f64 {
        1.0 / self.delta()
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "3" => Ok(Scheme::Three),
            "4" => Ok(Scheme::Four),
            "7" => Ok(Scheme::Seven),
            _ => Err(Error::Parameter(format!("unknown partition scheme {s:?} (3, 4 or 7)"))),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pieces())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrant {
    NorthWest,
    NorthEast,
    SouthWest,
    SouthEast,
}

/// A labeled piece of a partition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region {
    /// Sector `i` of the enclosing hexagon, from the cut through side
    /// midpoint `2i` (inclusive) to the cut through `2i + 2` (exclusive);
    /// sector 0 also holds the center.
    HexSector { hexagon: Hexagon, index: usize },
    /// Quadrant of the unit square with its two corner-side removals.
    SquareQuadrant(Quadrant),
    /// Convex hull of the six inner points, without those points.
    HexCore { hexagon: Hexagon },
    /// Rim piece `i`: hull of `q_i, m_i, p_i, m_{i+1}, q_{i+1}` without
    /// `q_{i+1}` and `m_{i+1}`.
    HexRim { hexagon: Hexagon, index: usize },
    /// Cell of the hexagonal tiling in axial coordinates.
    TilingCell { a: i64, b: i64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    pub regions: Vec<Region>,
    pub delta: f64,
    /// Region index per input point.
    pub labels: Vec<usize>,
}

/// Splits a point set of diameter at most `1 + 1e-9` into `delta`-small
/// pieces.
pub fn partition_unit(points: &[Point], scheme: Scheme) -> Result<Partition> {
    if points.is_empty() {
        return Ok(Partition { regions: Vec::new(), delta: scheme.delta(), labels: Vec::new() });
    }
    let (d, _) = diameter(points, NormSpec::EUCLIDEAN);
    if d > 1.0 + 1e-9 {
        return Err(Error::Precondition(format!("point set has diameter {d}, partitions need at most 1")));
    }
    match scheme {
        Scheme::Three => Ok(sectors(points)),
        Scheme::Four => quadrants(points),
        Scheme::Seven => Ok(core_and_rim(points)),
    }
}

/// Enclosing hexagon widened to unit width about its center.
fn unit_hexagon(points: &[Point]) -> Hexagon {
    let mut h = pal_hexagon(points);
    h.width = h.width.max(1.0);
    h
}

/// Angle of `p` around the hexagon center relative to its orientation, in
/// `[0, 2π)`, snapped onto multiples of 60° when within [`SNAP`].
fn relative_angle(h: &Hexagon, p: Point) -> f64 {
    let d = p - h.center;
    let a = (d.y.atan2(d.x) - h.orientation).rem_euclid(TAU);
    let k = (a / FRAC_PI_3).round();
    let snapped = if (a - k * FRAC_PI_3).abs() <= SNAP { k * FRAC_PI_3 } else { a };
    if snapped >= TAU { 0.0 } else { snapped }
}

fn sectors(points: &[Point]) -> Partition {
    let hexagon = unit_hexagon(points);
    let labels = points
        .iter()
        .map(|&p| {
            if (p - hexagon.center).norm() <= SNAP {
                return 0;
            }
            let sector = (relative_angle(&hexagon, p) / (2.0 * FRAC_PI_3)).floor() as usize;
            sector.min(2)
        })
        .collect();
    Partition {
        regions: (0..3).map(|index| Region::HexSector { hexagon, index }).collect(),
        delta: Scheme::Three.delta(),
        labels,
    }
}

fn snap_unit(x: f64) -> f64 {
    for anchor in [0.0, 0.5, 1.0] {
        if (x - anchor).abs() <= SNAP {
            return anchor;
        }
    }
    x.clamp(0.0, 1.0)
}

const QUADRANTS: [Quadrant; 4] = [Quadrant::NorthWest, Quadrant::NorthEast, Quadrant::SouthWest, Quadrant::SouthEast];

fn in_quadrant(q: Quadrant, x: f64, y: f64) -> bool {
    let at = |a: f64, b: f64| x == a && y == b;
    match q {
        Quadrant::NorthWest => x <= 0.5 && y >= 0.5 && !at(0.0, 0.5) && !at(0.5, 0.5),
        Quadrant::NorthEast => x >= 0.5 && y >= 0.5 && !at(0.5, 0.5) && !at(0.5, 1.0),
        Quadrant::SouthWest => x <= 0.5 && y <= 0.5 && !at(0.0, 0.0) && !at(0.5, 0.0),
        Quadrant::SouthEast => x >= 0.5 && y <= 0.5 && !at(0.5, 0.5) && !at(1.0, 0.5),
    }
}

fn quadrants(points: &[Point]) -> Result<Partition> {
    let xmin = points.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let ymin = points.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let local: Vec<(f64, f64)> = points.iter().map(|p| (snap_unit(p.x - xmin), snap_unit(p.y - ymin))).collect();

    // a diagonal pair of corners cannot both hold points of a unit-diameter set
    let corner = [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]
        .into_iter()
        .find(|&(cx, cy)| !local.iter().any(|&(x, y)| x == cx && y == cy))
        .ok_or_else(|| Error::Consistency("every corner of the enclosing square holds a point".into()))?;
    let flip = |v: f64, c: f64| if c == 0.0 { v } else { 1.0 - v };

    let labels = local
        .iter()
        .map(|&(x, y)| {
            let (x, y) = (flip(x, corner.0), flip(y, corner.1));
            QUADRANTS
                .iter()
                .position(|&q| in_quadrant(q, x, y))
                .ok_or_else(|| Error::Consistency(format!("point ({x}, {y}) lies in no quadrant")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition {
        regions: QUADRANTS.iter().map(|&q| Region::SquareQuadrant(q)).collect(),
        delta: Scheme::Four.delta(),
        labels,
    })
}

/// Distance of the inner points `q_i` from the center, for a unit hexagon.
fn core_radius() -> f64 {
    1.0 - 3f64.sqrt() / 2.0
}

/// Label 0 is the core, label `i + 1` the rim piece `R_i`.
fn core_and_rim(points: &[Point]) -> Partition {
    let hexagon = unit_hexagon(points);
    let w = hexagon.width;
    let rho = core_radius() * w;
    let label = |p: Point| -> usize {
        let d = p - hexagon.center;
        let r = d.norm();
        if r <= SNAP * w {
            return 0;
        }
        let a = relative_angle(&hexagon, p);
        let ray = a / FRAC_PI_3;
        if ray.fract() == 0.0 {
            let k = ray as usize % 6;
            // on the ray through m_k: q_k and m_k belong to R_k, points
            // strictly between them to the lower-indexed neighbor
            if (r - rho).abs() <= SNAP * w || (r - w / 2.0).abs() <= SNAP * w {
                return k + 1;
            }
            if r < rho {
                return 0;
            }
            return if k == 0 { 1 } else { k };
        }
        // core hexagon has corners on the rays, inradius rho·cos 30°
        let inner = (0..6)
            .map(|k| d.dot(Point::polar(1.0, hexagon.orientation + FRAC_PI_3 * (k as f64 + 0.5))))
            .fold(f64::NEG_INFINITY, f64::max);
        if inner <= rho * 3f64.sqrt() / 2.0 {
            return 0;
        }
        (a / FRAC_PI_3).floor() as usize % 6 + 1
    };
    let mut regions = vec![Region::HexCore { hexagon }];
    regions.extend((0..6).map(|index| Region::HexRim { hexagon, index }));
    Partition { regions, delta: Scheme::Seven.delta(), labels: points.iter().map(|&p| label(p)).collect() }
}

/// Proper coloring read off a realization of width at most the scheme's
/// threshold: the arrangement is scaled to unit diameter and partitioned.
pub fn extract_coloring(g: &Graph, r: &Realization, scheme: Scheme) -> Result<Coloring> {
    if !r.norm.is_euclidean() {
        return Err(Error::Precondition("partitions need a planar Euclidean realization".into()));
    }
    let e = evaluate(g, r, DEFAULT_TOL)?;
    if !e.valid {
        return Err(Error::Precondition(format!(
            "realization violates edge {:?}",
            e.violating_edge.expect("invalid evaluation names an edge")
        )));
    }
    let threshold = scheme.threshold();
    if e.width > threshold * (1.0 + DEFAULT_TOL) {
        return Err(Error::Precondition(format!(
            "width {} exceeds the scheme-{scheme} threshold {threshold}",
            e.width
        )));
    }
    if g.n() == 0 {
        return Ok(Coloring::new(Vec::new()));
    }
    if e.width == 0.0 {
        return Ok(Coloring::new(vec![0; g.n()]));
    }
    let scaled: Vec<Point> = r.points.iter().map(|&p| p * (1.0 / e.width)).collect();
    let part = partition_unit(&scaled, scheme)?;
    let coloring = Coloring::new(part.labels);
    coloring
        .check_proper(g)
        .map_err(|err| Error::Consistency(format!("scheme-{scheme} partition produced an improper coloring: {err}")))?;
    Ok(coloring)
}
