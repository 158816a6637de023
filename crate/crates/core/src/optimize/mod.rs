//! Multistart numerical search for narrow realizations, and a grid oracle
//! for tiny graphs.

mod brute;
mod objective;

pub use brute::{brute_force, brute_force_with_cap, BRUTE_FORCE_CAP, BRUTE_FORCE_MAX_CAP};
pub use objective::Objective;

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{NormSpec, Point};
use crate::graph::{greedy_coloring, Graph};
use crate::realization::{evaluate, feasibilize, from_coloring, Coloring, Realization};
use crate::DEFAULT_TOL;

/// Exponent standing in for the maximum norm during descent.
pub const LINF_SURROGATE_P: f64 = 64.0;

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizeConfig {
    pub restarts: usize,
    /// Iteration budget per restart, split evenly over the stages.
    pub max_iters: usize,
    pub seed: u64,
    pub norm: NormSpec,
    pub beta_start: f64,
    pub beta_end: f64,
    pub mu_start: f64,
    pub mu_end: f64,
    /// Number of (β, μ) stages on the geometric schedules.
    pub stages: usize,
    /// A stage ends once one step decreases the objective by less than this.
    pub tol: f64,
}

impl Default for OptimizeConfig {
    fn default() -> Self {
        OptimizeConfig {
            restarts: 50,
            max_iters: 2000,
            seed: 0,
            norm: NormSpec::EUCLIDEAN,
            beta_start: 10.0,
            beta_end: 1000.0,
            mu_start: 1.0,
            mu_end: 1e6,
            stages: 10,
            tol: 1e-10,
        }
    }
}

impl OptimizeConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Parameter(m.to_string()));
        if self.restarts == 0 {
            return bad("restarts must be at least 1");
        }
        if self.stages == 0 || self.max_iters < self.stages {
            return bad("need at least one iteration per stage");
        }
        if !(self.beta_start > 0.0 && self.beta_start <= self.beta_end) {
            return bad("smooth-max schedule must be positive and nondecreasing");
        }
        if !(self.mu_start > 0.0 && self.mu_start <= self.mu_end) {
            return bad("penalty schedule must be positive and nondecreasing");
        }
        if !(self.tol >= 0.0) {
            return bad("tolerance must be nonnegative");
        }
        NormSpec::new(self.norm.p, self.norm.dim).map(|_| ())
    }

    /// `(β, μ)` of stage `s`.
    pub fn schedule(&self, s: usize) -> (f64, f64) {
        let f = if self.stages == 1 { 1.0 } else { s as f64 / (self.stages - 1) as f64 };
        (
            self.beta_start * (self.beta_end / self.beta_start).powf(f),
            self.mu_start * (self.mu_end / self.mu_start).powf(f),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizeResult {
    pub realization: Realization,
    pub width: f64,
    pub restart_index: usize,
    pub iterations: usize,
}

/// Runs every restart (in parallel), certifies each candidate by scaling,
/// and keeps the narrowest, ties going to the lowest restart index.
pub fn optimize(g: &Graph, cfg: &OptimizeConfig) -> Result<OptimizeResult> {
    cfg.validate()?;
    if g.m() == 0 {
        return Err(Error::Parameter("optimizing needs a graph with at least one edge".into()));
    }
    let greedy = greedy_coloring(g);
    let chi_greedy = greedy.iter().max().map_or(1, |m| m + 1);
    let side = 1.0 + (chi_greedy as f64).sqrt();

    let runs: Vec<Option<OptimizeResult>> =
        (0..cfg.restarts).into_par_iter().map(|i| run_restart(g, cfg, side, i)).collect();
    let best = runs.into_iter().flatten().fold(None, |best: Option<OptimizeResult>, r| match best {
        Some(b) if b.width <= r.width => Some(b),
        _ => Some(r),
    });
    match best {
        Some(b) => Ok(b),
        None => {
            // every descent collapsed an edge; fall back to the coloring witness
            let realization = from_coloring(g, &Coloring::new(greedy))?;
            let width = realization.width();
            Ok(OptimizeResult { realization, width, restart_index: cfg.restarts, iterations: 0 })
        }
    }
}

fn run_restart(g: &Graph, cfg: &OptimizeConfig, side: f64, restart: usize) -> Option<OptimizeResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(restart as u64));
    let line = cfg.norm.dim == 1;
    let mut x: Vec<f64> = (0..g.n())
        .flat_map(|_| {
            let px = rng.gen_range(0.0..side);
            let py = rng.gen_range(0.0..side);
            [px, if line { 0.0 } else { py }]
        })
        .collect();
    let p = if cfg.norm.is_max() { LINF_SURROGATE_P } else { cfg.norm.p };
    let per_stage = cfg.max_iters / cfg.stages;
    let mut iterations = 0;
    for s in 0..cfg.stages {
        let (beta, mu) = cfg.schedule(s);
        let obj = Objective { graph: g, beta, mu, p };
        iterations += descend(&obj, &mut x, per_stage, cfg.tol, line);
    }
    let points: Vec<Point> = x.chunks(2).map(|c| Point::new(c[0], c[1])).collect();
    let candidate = Realization { points, norm: cfg.norm };
    let realization = feasibilize(g, &candidate).ok()?;
    let e = evaluate(g, &realization, DEFAULT_TOL).ok()?;
    if !e.valid {
        return None;
    }
    Some(OptimizeResult { realization, width: e.width, restart_index: restart, iterations })
}

/// Memory of the limited-memory quasi-Newton direction.
const HISTORY: usize = 8;

/// Quasi-Newton descent with Armijo backtracking; falls back to the
/// negative gradient whenever the two-loop direction is not a descent
/// direction. Returns the number of accepted steps.
fn descend(obj: &Objective, x: &mut [f64], max_iters: usize, tol: f64, line: bool) -> usize {
    let dim = x.len();
    let mut grad = vec![0.0; dim];
    let mut f = obj.value_and_gradient(x, &mut grad);
    if line {
        zero_odd(&mut grad);
    }
    let mut history: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::with_capacity(HISTORY);
    let mut trial = vec![0.0; dim];
    let mut trial_grad = vec![0.0; dim];
    for it in 0..max_iters {
        let mut dir = two_loop(&grad, &history);
        let mut slope = dot(&dir, &grad);
        if !(slope < 0.0) {
            history.clear();
            dir = grad.iter().map(|g| -g).collect();
            slope = -dot(&grad, &grad);
        }
        if slope == 0.0 {
            return it;
        }
        let mut step = if history.is_empty() { 1.0 / dot(&grad, &grad).sqrt().max(1.0) } else { 1.0 };
        let mut accepted = None;
        for _ in 0..60 {
            for k in 0..dim {
                trial[k] = x[k] + step * dir[k];
            }
            let ft = obj.value_and_gradient(&trial, &mut trial_grad);
            if ft <= f + 1e-4 * step * slope {
                accepted = Some(ft);
                break;
            }
            step *= 0.5;
        }
        let Some(ft) = accepted else { return it };
        if line {
            zero_odd(&mut trial_grad);
        }
        let s: Vec<f64> = (0..dim).map(|k| trial[k] - x[k]).collect();
        let y: Vec<f64> = (0..dim).map(|k| trial_grad[k] - grad[k]).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 * dot(&y, &y).sqrt() * dot(&s, &s).sqrt() {
            if history.len() == HISTORY {
                history.pop_front();
            }
            history.push_back((s, y, 1.0 / sy));
        }
        x.copy_from_slice(&trial);
        grad.copy_from_slice(&trial_grad);
        let decrease = f - ft;
        f = ft;
        if decrease < tol {
            return it + 1;
        }
    }
    max_iters
}

fn zero_odd(v: &mut [f64]) {
    v.iter_mut().skip(1).step_by(2).for_each(|c| *c = 0.0);
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn two_loop(grad: &[f64], history: &VecDeque<(Vec<f64>, Vec<f64>, f64)>) -> Vec<f64> {
    let mut q: Vec<f64> = grad.to_vec();
    let mut alpha = Vec::with_capacity(history.len());
    for (s, y, rho) in history.iter().rev() {
        let a = rho * dot(s, &q);
        q.iter_mut().zip(y).for_each(|(qi, yi)| *qi -= a * yi);
        alpha.push(a);
    }
    if let Some((s, y, _)) = history.back() {
        let gamma = dot(s, y) / dot(y, y);
        q.iter_mut().for_each(|qi| *qi *= gamma);
    }
    for ((s, y, rho), a) in history.iter().zip(alpha.into_iter().rev()) {
        let b = rho * dot(y, &q);
        q.iter_mut().zip(s).for_each(|(qi, si)| *qi += (a - b) * si);
    }
    q.iter_mut().for_each(|qi| *qi = -*qi);
    q
}
