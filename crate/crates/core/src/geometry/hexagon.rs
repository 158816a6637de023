use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use super::{diameter, NormSpec, Point};

/// Regular hexagon given by its center, the angle of one side normal, and
/// the distance between opposite sides.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hexagon {
    pub center: Point,
    pub orientation: f64,
    pub width: f64,
}

impl Hexagon {
    /// Outward unit normal of side `k` (k = 0..6), counter-clockwise.
    pub fn normal(&self, k: usize) -> Point {
        Point::polar(1.0, self.orientation + k as f64 * FRAC_PI_3)
    }

    /// Midpoint of side `k`.
    pub fn side_midpoint(&self, k: usize) -> Point {
        self.center + self.normal(k) * (self.width / 2.0)
    }

    /// Corner between side `k` and side `k + 1`.
    pub fn vertex(&self, k: usize) -> Point {
        self.center + Point::polar(self.width / 3f64.sqrt(), self.orientation + FRAC_PI_6 + k as f64 * FRAC_PI_3)
    }

    pub fn circumradius(&self) -> f64 {
        self.width / 3f64.sqrt()
    }

    /// Largest signed distance from `p` to the six side lines; `<= 0`
    /// inside.
    pub fn signed_distance(&self, p: Point) -> f64 {
        (0..6)
            .map(|k| (p - self.center).dot(self.normal(k)) - self.width / 2.0)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.signed_distance(p) <= tol
    }
}

/// Center of the projection range of `points` onto direction `u`, and its length.
fn slab(points: &[Point], u: Point) -> (f64, f64) {
    let (lo, hi) = points.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
        let t = p.dot(u);
        (lo.min(t), hi.max(t))
    });
    ((lo + hi) / 2.0, hi - lo)
}

/// Disagreement between the three slab centers at orientation `theta`.
/// A regular hexagon needs `m0 - m1 + m2 = 0`; the mismatch changes sign
/// under a 60° turn, so it has a root in `[0, 60°]`.
fn mismatch(points: &[Point], theta: f64) -> f64 {
    let m = |k: f64| slab(points, Point::polar(1.0, theta + k * FRAC_PI_3)).0;
    m(0.0) - m(1.0) + m(2.0)
}

/// Regular hexagon with opposite sides at distance `diam(points)` that
/// contains every point. The width may exceed the diameter by the residual
/// of the floating-point root, which stays near machine precision.
///
/// Panics on an empty slice.
pub fn pal_hexagon(points: &[Point]) -> Hexagon {
    let (diam, _) = diameter(points, NormSpec::EUCLIDEAN);
    if diam == 0.0 {
        return Hexagon { center: points[0], orientation: 0.0, width: 0.0 };
    }

    let (mut lo, mut hi) = (0.0, FRAC_PI_3);
    let f_lo = mismatch(points, lo);
    let theta = if f_lo == 0.0 {
        0.0
    } else {
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            let f_mid = mismatch(points, mid);
            if f_mid == 0.0 {
                lo = mid;
                hi = mid;
            } else if (f_mid > 0.0) == (f_lo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    // Center from the first two slab centers; the third follows up to the
    // root residual, absorbed below by widening.
    let u0 = Point::polar(1.0, theta);
    let u1 = Point::polar(1.0, theta + FRAC_PI_3);
    let (m0, _) = slab(points, u0);
    let (m1, _) = slab(points, u1);
    let det = u0.cross(u1);
    let center = Point::new((m0 * u1.y - m1 * u0.y) / det, (u0.x * m1 - u1.x * m0) / det);

    let mut hex = Hexagon { center, orientation: theta, width: diam };
    let defect = points.iter().map(|&p| hex.signed_distance(p)).fold(0.0, f64::max);
    hex.width += 2.0 * defect;
    hex
}
