//! Realizations of joins, Cartesian products and disjoint unions, built
//! from realizations of the parts. Vertex order matches
//! [`crate::graph::compose`].

use super::{evaluate, Realization};
use crate::error::{Error, Result};
use crate::geometry::{diameter, pal_hexagon, Point};
use crate::graph::Graph;
use crate::DEFAULT_TOL;

fn check_part(g: &Graph, r: &Realization, name: &str) -> Result<()> {
    let e = evaluate(g, r, DEFAULT_TOL)?;
    if !e.valid {
        return Err(Error::Certificate(format!(
            "{name} realization violates edge {:?}",
            e.violating_edge.expect("invalid evaluation names an edge")
        )));
    }
    Ok(())
}

fn require_euclidean(r: &Realization, what: &str) -> Result<()> {
    if !r.norm.is_euclidean() {
        return Err(Error::Parameter(format!("{what} needs planar Euclidean realizations")));
    }
    Ok(())
}

/// Rigid motion taking the diametral pair `(a, b)` of `points` to
/// `a -> origin`, `b -> (-w, 0)`. Every point then has `x <= 0`.
fn face_right(points: &[Point]) -> Vec<Point> {
    if points.is_empty() {
        return Vec::new();
    }
    let (w, (ia, ib)) = diameter(points, crate::geometry::NormSpec::EUCLIDEAN);
    let a = points[ia];
    if w == 0.0 {
        return points.iter().map(|&p| p - a).collect();
    }
    let dir = points[ib] - a;
    // rotate dir onto the negative x-axis
    let angle = std::f64::consts::PI - dir.y.atan2(dir.x);
    points.iter().map(|&p| (p - a).rotate(angle)).collect()
}

/// Realization of the join: each part is turned so that its diametral pair
/// lies on the x-axis, the parts sit on opposite sides of the strip
/// `0 < x < 1` with the facing diametral points at distance one. Width is at
/// most `w_g + w_h + 1`.
pub fn join_realization(g: &Graph, h: &Graph, r_g: &Realization, r_h: &Realization) -> Result<Realization> {
    require_euclidean(r_g, "join")?;
    require_euclidean(r_h, "join")?;
    check_part(g, r_g, "first")?;
    check_part(h, r_h, "second")?;

    let left = face_right(&r_g.points);
    let mut right: Vec<Point> = face_right(&r_h.points).into_iter().map(|p| Point::new(1.0 - p.x, p.y)).collect();
    // rounding in the rotation may pull a point past its half-plane
    let max_left = left.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
    let min_right = right.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    if min_right - max_left < 1.0 {
        let shift = 1.0 - (min_right - max_left);
        for p in &mut right {
            p.x += shift;
        }
    }
    let mut out = Realization::euclidean(left.into_iter().chain(right).collect());
    nudge_until_valid(&mut out, g.n());
    Ok(out)
}

/// Pushes the second block right by tiny steps until every cross pair is at
/// distance at least one.
fn nudge_until_valid(r: &mut Realization, split: usize) {
    loop {
        let (left, right) = r.points.split_at(split);
        let d = left
            .iter()
            .flat_map(|&p| right.iter().map(move |&q| (p - q).norm()))
            .fold(f64::INFINITY, f64::min);
        if d >= 1.0 {
            break;
        }
        let step = (1.0 - d).max(4.0 * f64::EPSILON);
        for p in &mut r.points[split..] {
            p.x += step;
        }
    }
}

/// Vector-sum realization of the Cartesian product: vertex `(u, x)` goes to
/// `r_g(u) + r_h(x)`. Width is at most `w_g + w_h`.
pub fn product_realization(g: &Graph, h: &Graph, r_g: &Realization, r_h: &Realization) -> Result<Realization> {
    if r_g.norm != r_h.norm {
        return Err(Error::Parameter("product parts use different norms".into()));
    }
    check_part(g, r_g, "first")?;
    check_part(h, r_h, "second")?;
    let points = r_g.points.iter().flat_map(|&p| r_h.points.iter().map(move |&q| p + q)).collect();
    Ok(Realization { points, norm: r_g.norm })
}

/// Realization of the disjoint union: both arrangements are moved into
/// concentric, parallel enclosing hexagons centered at the origin. Width is
/// at most `max(w_g, w_h, (w_g + w_h) / √3)` up to the hexagon residual.
pub fn union_realization(g: &Graph, h: &Graph, r_g: &Realization, r_h: &Realization) -> Result<Realization> {
    require_euclidean(r_g, "union")?;
    require_euclidean(r_h, "union")?;
    check_part(g, r_g, "first")?;
    check_part(h, r_h, "second")?;
    if r_g.n() == 0 || r_h.n() == 0 {
        return Ok(Realization::euclidean(r_g.points.iter().chain(&r_h.points).copied().collect()));
    }
    let hg = pal_hexagon(&r_g.points);
    let hh = pal_hexagon(&r_h.points);
    let turn = hg.orientation - hh.orientation;
    let points = r_g
        .points
        .iter()
        .map(|&p| p - hg.center)
        .chain(r_h.points.iter().map(|&p| (p - hh.center).rotate(turn)))
        .collect();
    Ok(Realization::euclidean(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compose, generate, ComposeKind, GraphSpec};
    use crate::realization::{known_complete_arrangement, Coloring};

    fn seg() -> Realization {
        known_complete_arrangement(2).unwrap()
    }

    #[test]
    fn join_of_segments() {
        let k2 = Graph::complete(2);
        let r = join_realization(&k2, &k2, &seg(), &seg()).unwrap();
        let k4 = compose(ComposeKind::Join, &k2, Some(&k2)).unwrap();
        let e = evaluate(&k4, &r, 1e-9).unwrap();
        assert!(e.valid);
        assert!(e.width <= 3.0 + 1e-12);
    }

    #[test]
    fn join_single_vertex_with_c5() {
        let k1 = Graph::empty(1);
        let c5 = generate(&GraphSpec::Cycle(5)).unwrap();
        let rc5 = crate::realization::from_coloring(&c5, &Coloring::new(vec![0, 1, 0, 1, 2])).unwrap();
        let r1 = Realization::euclidean(vec![Point::new(3.0, -2.0)]);
        let r = join_realization(&k1, &c5, &r1, &rc5).unwrap();
        let w = compose(ComposeKind::Join, &k1, Some(&c5)).unwrap();
        let e = evaluate(&w, &r, 1e-9).unwrap();
        assert!(e.valid);
        assert!(e.width <= rc5.width() + 1.0 + 1e-12);
    }

    #[test]
    fn product_of_orthogonal_segments() {
        let k2 = Graph::complete(2);
        let vertical = Realization::euclidean(vec![Point::ORIGIN, Point::new(0.0, 1.0)]);
        let r = product_realization(&k2, &k2, &seg(), &vertical).unwrap();
        let c4 = compose(ComposeKind::Cartesian, &k2, Some(&k2)).unwrap();
        let e = evaluate(&c4, &r, 1e-9).unwrap();
        assert!(e.valid);
        assert!((e.width - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn union_of_triangles() {
        let k3 = Graph::complete(3);
        let t = known_complete_arrangement(3).unwrap();
        let r = union_realization(&k3, &k3, &t, &t).unwrap();
        let u = compose(ComposeKind::DisjointUnion, &k3, Some(&k3)).unwrap();
        let e = evaluate(&u, &r, 1e-9).unwrap();
        assert!(e.valid);
        assert!(e.width <= 2.0 / 3f64.sqrt() + 1e-9);
    }

    #[test]
    fn union_with_single_point() {
        let k3 = Graph::complete(3);
        let t = known_complete_arrangement(3).unwrap();
        let one = Realization::euclidean(vec![Point::new(5.0, 5.0)]);
        let r = union_realization(&k3, &Graph::empty(1), &t, &one).unwrap();
        assert!((r.width() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn invalid_part_rejected() {
        let k2 = Graph::complete(2);
        let bad = Realization::euclidean(vec![Point::ORIGIN, Point::new(0.5, 0.0)]);
        assert!(matches!(join_realization(&k2, &k2, &bad, &seg()), Err(Error::Certificate(_))));
        assert!(matches!(product_realization(&k2, &k2, &seg(), &bad), Err(Error::Certificate(_))));
    }
}
