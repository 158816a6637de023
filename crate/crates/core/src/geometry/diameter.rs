use super::{distance, NormSpec, Point};

/// Above this many points the Euclidean diameter goes through the convex hull.
const HULL_THRESHOLD: usize = 64;

/// Largest pairwise distance and a pair achieving it (`i <= j`). A single
/// point has diameter 0 with the degenerate pair `(0, 0)`.
///
/// Panics on an empty slice.
pub fn diameter(points: &[Point], norm: NormSpec) -> (f64, (usize, usize)) {
    assert!(!points.is_empty(), "diameter of an empty point set");
    if norm.is_euclidean() && points.len() > HULL_THRESHOLD {
        hull_diameter(points)
    } else {
        diameter_exhaustive(points, norm)
    }
}

/// O(n²) scan; the lexicographically first pair attaining the maximum.
pub fn diameter_exhaustive(points: &[Point], norm: NormSpec) -> (f64, (usize, usize)) {
    let mut best = (0.0, (0, 0));
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = distance(points[i], points[j], norm);
            if d > best.0 {
                best = (d, (i, j));
            }
        }
    }
    best
}

/// Indices of the convex hull vertices in counter-clockwise order, without
/// collinear points (monotone chain).
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        let (p, q) = (points[a], points[b]);
        p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y)).then(a.cmp(&b))
    });
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() <= 2 {
        return idx;
    }
    let turn = |o: usize, a: usize, b: usize| (points[a] - points[o]).cross(points[b] - points[o]);
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn hull_diameter(points: &[Point]) -> (f64, (usize, usize)) {
    let hull = convex_hull(points);
    let h = hull.len();
    let d = |a: usize, b: usize| distance(points[hull[a]], points[hull[b]], NormSpec::EUCLIDEAN);
    let ordered = |a: usize, b: usize| (hull[a].min(hull[b]), hull[a].max(hull[b]));
    match h {
        0 => unreachable!(),
        1 => return (0.0, (hull[0], hull[0])),
        2 => return (d(0, 1), ordered(0, 1)),
        _ => {}
    }
    let area = |a: usize, b: usize, c: usize| {
        (points[hull[b]] - points[hull[a]]).cross(points[hull[c]] - points[hull[a]]).abs()
    };
    let mut best = (0.0, (0, 0));
    let consider = |a: usize, b: usize, best: &mut (f64, (usize, usize))| {
        let v = d(a, b);
        let pair = ordered(a, b);
        if v > best.0 || (v == best.0 && pair < best.1) {
            *best = (v, pair);
        }
    };
    // Rotating calipers: for each hull edge, advance the antipodal pointer
    // while the triangle area grows.
    let mut j = 1;
    for i in 0..h {
        let next = (i + 1) % h;
        while area(i, next, (j + 1) % h) > area(i, next, j) {
            j = (j + 1) % h;
        }
        consider(i, j, &mut best);
        consider(next, j, &mut best);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unit_square() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 1.0)];
        let (d, pair) = diameter(&pts, NormSpec::EUCLIDEAN);
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(pair, (0, 3));
    }

    #[test]
    fn single_point() {
        assert_eq!(diameter(&[Point::new(2.0, 3.0)], NormSpec::EUCLIDEAN), (0.0, (0, 0)));
    }

    #[test]
    fn unit_pentagon() {
        let r = 1.0 / (2.0 * (std::f64::consts::PI / 5.0).sin());
        let pts: Vec<_> = (0..5).map(|i| Point::polar(r, i as f64 * 2.0 * std::f64::consts::PI / 5.0)).collect();
        let (d, _) = diameter(&pts, NormSpec::EUCLIDEAN);
        assert!((d - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.3),
        ];
        let mut h = convex_hull(&pts);
        h.sort_unstable();
        assert_eq!(h, vec![0, 2, 3]);
    }

    #[test]
    fn collinear_many() {
        let pts: Vec<_> = (0..100).map(|i| Point::new(i as f64 * 0.5, i as f64 * 0.25)).collect();
        let fast = diameter(&pts, NormSpec::EUCLIDEAN);
        let slow = diameter_exhaustive(&pts, NormSpec::EUCLIDEAN);
        assert_eq!(fast.1, (0, 99));
        assert_eq!(fast.0, slow.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn hull_matches_exhaustive(
            coords in prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 1..200),
            grid in any::<bool>(),
        ) {
            // optionally snap to a coarse grid to force ties and duplicates
            let pts: Vec<Point> = coords
                .iter()
                .map(|&(x, y)| if grid { Point::new(x.round(), y.round()) } else { Point::new(x, y) })
                .collect();
            let slow = diameter_exhaustive(&pts, NormSpec::EUCLIDEAN);
            let fast = if pts.len() > 2 { hull_diameter(&pts) } else { slow };
            prop_assert!(fast.1 == slow.1 || (fast.0 - slow.0).abs() <= 1e-12);
            let (i, j) = fast.1;
            prop_assert_eq!(distance(pts[i], pts[j], NormSpec::EUCLIDEAN), fast.0);
        }
    }
}
