//! Plane points, ℓ_p distances, diameters and enclosing hexagons.

mod diameter;
mod hexagon;

pub use diameter::{convex_hull, diameter, diameter_exhaustive};
pub use hexagon::{pal_hexagon, Hexagon};

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Point at `radius` in direction `angle` (radians) from the origin.
    pub fn polar(radius: f64, angle: f64) -> Self {
        Point { x: radius * angle.cos(), y: radius * angle.sin() }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise rotation about the origin.
    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point { x: c * self.x - s * self.y, y: s * self.x + c * self.y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point { x: self.x + o.x, y: self.y + o.y }
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point { x: self.x - o.x, y: self.y - o.y }
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point { x: self.x * s, y: self.y * s }
    }
}

/// ℓ_p norm on the line (`dim == 1`) or the plane (`dim == 2`). `p` is
/// `f64::INFINITY` for the maximum norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormSpec {
    pub p: f64,
    pub dim: u8,
}

impl NormSpec {
    pub const EUCLIDEAN: NormSpec = NormSpec { p: 2.0, dim: 2 };
    pub const MAX: NormSpec = NormSpec { p: f64::INFINITY, dim: 2 };
    pub const LINE: NormSpec = NormSpec { p: 2.0, dim: 1 };

    pub fn new(p: f64, dim: u8) -> Result<Self> {
        if !(p >= 1.0) {
            return Err(Error::Parameter(format!("norm exponent must be >= 1, got {p}")));
        }
        if dim != 1 && dim != 2 {
            return Err(Error::Parameter(format!("dimension must be 1 or 2, got {dim}")));
        }
        Ok(NormSpec { p, dim })
    }

    pub fn is_euclidean(&self) -> bool {
        self.dim == 2 && self.p == 2.0
    }

    pub fn is_max(&self) -> bool {
        self.p == f64::INFINITY
    }

    /// Length of a difference vector.
    pub fn length(&self, d: Point) -> f64 {
        if self.dim == 1 {
            return d.x.abs();
        }
        let (ax, ay) = (d.x.abs(), d.y.abs());
        if self.p == 2.0 {
            ax.hypot(ay)
        } else if self.p == f64::INFINITY {
            ax.max(ay)
        } else if self.p == 1.0 {
            ax + ay
        } else {
            // scale by the larger coordinate to avoid overflow for big p
            let m = ax.max(ay);
            if m == 0.0 {
                0.0
            } else {
                m * ((ax / m).powf(self.p) + (ay / m).powf(self.p)).powf(1.0 / self.p)
            }
        }
    }
}

impl Default for NormSpec {
    fn default() -> Self {
        NormSpec::EUCLIDEAN
    }
}

/// ℓ_p distance between two points.
pub fn distance(a: Point, b: Point, norm: NormSpec) -> f64 {
    norm.length(a - b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let o = Point::ORIGIN;
        assert_eq!(distance(o, Point::new(1.0, 0.0), NormSpec::EUCLIDEAN), 1.0);
        assert_eq!(distance(o, Point::new(1.0, 1.0), NormSpec::MAX), 1.0);
        assert_eq!(distance(o, Point::new(3.0, 4.0), NormSpec::EUCLIDEAN), 5.0);
        assert_eq!(distance(o, Point::new(3.0, 4.0), NormSpec::new(1.0, 2).unwrap()), 7.0);
        assert_eq!(distance(o, Point::new(-3.0, 4.0), NormSpec::LINE), 3.0);
    }

    #[test]
    fn rejects_bad_norms() {
        assert!(NormSpec::new(0.5, 2).is_err());
        assert!(NormSpec::new(2.0, 3).is_err());
        assert!(NormSpec::new(f64::NAN, 2).is_err());
    }

    fn pt() -> impl Strategy<Value = Point> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn metric_axioms(a in pt(), b in pt(), c in pt(), pi in 0usize..5) {
            let p = [1.0, 1.5, 2.0, 3.0, f64::INFINITY][pi];
            let norm = NormSpec::new(p, 2).unwrap();
            let d = |u, v| distance(u, v, norm);
            prop_assert!((d(a, b) - d(b, a)).abs() <= 1e-12);
            prop_assert!(d(a, c) <= d(a, b) + d(b, c) + 1e-9);
            prop_assert!(d(a, a) == 0.0);
        }
    }
}
