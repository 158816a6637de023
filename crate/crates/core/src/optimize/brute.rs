use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::Graph;
use crate::realization::Realization;

/// Largest graph the grid search accepts by default.
pub const BRUTE_FORCE_CAP: usize = 4;
/// Hard upper limit for [`brute_force_with_cap`].
pub const BRUTE_FORCE_MAX_CAP: usize = 5;

/// Exhaustive grid search for the narrowest realization: vertex 0 at the
/// origin, vertex 1 on the nonnegative x-axis, vertex 2 in the upper half
/// plane, all others on the grid of step `resolution` in
/// `[-d_max, d_max]²`. Edges must have length at least one exactly.
pub fn brute_force(g: &Graph, resolution: f64, d_max: f64) -> Result<(f64, Realization)> {
    brute_force_with_cap(g, resolution, d_max, BRUTE_FORCE_CAP)
}

pub fn brute_force_with_cap(g: &Graph, resolution: f64, d_max: f64, cap: usize) -> Result<(f64, Realization)> {
    if cap > BRUTE_FORCE_MAX_CAP {
        return Err(Error::Parameter(format!("brute force cap {cap} exceeds the limit {BRUTE_FORCE_MAX_CAP}")));
    }
    if g.n() > cap {
        return Err(Error::Parameter(format!(
            "brute force refuses graphs with more than {cap} vertices (got {})",
            g.n()
        )));
    }
    if g.m() == 0 {
        return Err(Error::Parameter("brute force needs a graph with at least one edge".into()));
    }
    if !(resolution > 0.0) || !(d_max > 0.0) {
        return Err(Error::Parameter("resolution and d_max must be positive".into()));
    }
    let steps = (d_max / resolution).floor() as i64;
    let mut search = Search {
        g,
        res: resolution,
        steps,
        placed: Vec::with_capacity(g.n()),
        best: f64::INFINITY,
        best_points: Vec::new(),
    };
    search.placed.push((0, 0));
    search.extend(0.0);
    if search.best_points.is_empty() {
        return Err(Error::Infeasible(format!("no grid realization within [-{d_max}, {d_max}]²")));
    }
    let points = search.best_points.iter().map(|&(i, j)| search.point(i, j)).collect();
    Ok((search.best, Realization::euclidean(points)))
}

struct Search<'a> {
    g: &'a Graph,
    res: f64,
    steps: i64,
    placed: Vec<(i64, i64)>,
    best: f64,
    best_points: Vec<(i64, i64)>,
}

impl Search<'_> {
    fn point(&self, i: i64, j: i64) -> Point {
        Point::new(i as f64 * self.res, j as f64 * self.res)
    }

    fn extend(&mut self, width: f64) {
        let k = self.placed.len();
        if k == self.g.n() {
            if width < self.best {
                self.best = width;
                self.best_points = self.placed.clone();
            }
            return;
        }
        // grid box of points within the current best of every placed point
        let reach = if self.best.is_finite() { (self.best / self.res).floor() as i64 } else { 2 * self.steps };
        let (mut ilo, mut ihi, mut jlo, mut jhi) = (-self.steps, self.steps, -self.steps, self.steps);
        for &(i, j) in &self.placed {
            ilo = ilo.max(i - reach);
            ihi = ihi.min(i + reach);
            jlo = jlo.max(j - reach);
            jhi = jhi.min(j + reach);
        }
        match k {
            1 => {
                ilo = ilo.max(0);
                jlo = 0;
                jhi = jhi.min(0);
            }
            2 => jlo = jlo.max(0),
            _ => {}
        }
        // narrowest extensions first, so good widths prune early
        let mut candidates: Vec<(f64, i64, i64)> = Vec::new();
        for i in ilo..=ihi {
            'cand: for j in jlo..=jhi {
                let p = self.point(i, j);
                let mut w = width;
                for (v, &(a, b)) in self.placed.iter().enumerate() {
                    let d = (p - self.point(a, b)).norm();
                    w = w.max(d);
                    if (self.g.has_edge(v, k) && d < 1.0) || w >= self.best {
                        continue 'cand;
                    }
                }
                candidates.push((w, i, j));
            }
        }
        candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        for (w, i, j) in candidates {
            if w >= self.best {
                break;
            }
            self.placed.push((i, j));
            self.extend(w);
            self.placed.pop();
        }
    }
}
