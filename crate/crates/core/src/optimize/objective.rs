//! Smoothed width objective over flat coordinate vectors
//! `[x_0, y_0, x_1, y_1, ...]`.

use crate::graph::Graph;

/// `LSE_β(pairwise distances) + μ Σ_edges max(0, 1 - d_uv)²` with ℓ_p
/// distances (`p` finite, at least 1).
#[derive(Clone, Debug)]
pub struct Objective<'a> {
    pub graph: &'a Graph,
    pub beta: f64,
    pub mu: f64,
    pub p: f64,
}

/// Length of `(dx, dy)` and its gradient with respect to `(dx, dy)`.
/// Coincident points get the gradient of a 1e-12 offset along x.
pub(crate) fn length_and_grad(dx: f64, dy: f64, p: f64) -> (f64, f64, f64) {
    let (ax, ay) = (dx.abs(), dy.abs());
    let m = ax.max(ay);
    if m == 0.0 {
        return (0.0, 1.0, 0.0);
    }
    if p == 2.0 {
        let d = dx.hypot(dy);
        return (d, dx / d, dy / d);
    }
    if p == 1.0 {
        return (ax + ay, dx.signum(), dy.signum());
    }
    let d = m * ((ax / m).powf(p) + (ay / m).powf(p)).powf(1.0 / p);
    let gx = dx.signum() * (ax / d).powf(p - 1.0);
    let gy = dy.signum() * (ay / d).powf(p - 1.0);
    (d, gx, gy)
}

impl Objective<'_> {
    pub fn value(&self, x: &[f64]) -> f64 {
        self.evaluate(x, None)
    }

    /// Value, writing the gradient into `grad`.
    pub fn value_and_gradient(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        self.evaluate(x, Some(grad))
    }

    fn evaluate(&self, x: &[f64], mut grad: Option<&mut [f64]>) -> f64 {
        let n = x.len() / 2;
        if let Some(g) = grad.as_deref_mut() {
            g.iter_mut().for_each(|v| *v = 0.0);
        }
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let (d, gx, gy) = length_and_grad(x[2 * i] - x[2 * j], x[2 * i + 1] - x[2 * j + 1], self.p);
                pairs.push((i, j, d, gx, gy));
            }
        }
        let mut value = 0.0;
        if !pairs.is_empty() {
            let top = pairs.iter().map(|t| t.2).fold(f64::NEG_INFINITY, f64::max);
            let sum: f64 = pairs.iter().map(|t| (self.beta * (t.2 - top)).exp()).sum();
            value = top + sum.ln() / self.beta;
            if let Some(g) = grad.as_deref_mut() {
                for &(i, j, d, gx, gy) in &pairs {
                    let w = (self.beta * (d - top)).exp() / sum;
                    g[2 * i] += w * gx;
                    g[2 * i + 1] += w * gy;
                    g[2 * j] -= w * gx;
                    g[2 * j + 1] -= w * gy;
                }
            }
        }
        for &(u, v) in self.graph.edges() {
            let (d, gx, gy) = length_and_grad(x[2 * u] - x[2 * v], x[2 * u + 1] - x[2 * v + 1], self.p);
            let slack = 1.0 - d;
            if slack > 0.0 {
                value += self.mu * slack * slack;
                if let Some(g) = grad.as_deref_mut() {
                    let c = -2.0 * self.mu * slack;
                    g[2 * u] += c * gx;
                    g[2 * u + 1] += c * gy;
                    g[2 * v] -= c * gx;
                    g[2 * v + 1] -= c * gy;
                }
            }
        }
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn central_difference(obj: &Objective, x: &[f64], h: f64) -> Vec<f64> {
        let mut y = x.to_vec();
        (0..x.len())
            .map(|k| {
                y[k] = x[k] + h;
                let up = obj.value(&y);
                y[k] = x[k] - h;
                let down = obj.value(&y);
                y[k] = x[k];
                (up - down) / (2.0 * h)
            })
            .collect()
    }

    #[test]
    fn gradient_matches_differences() {
        let g = crate::graph::generate(&crate::graph::GraphSpec::OddWheel(5)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for p in [2.0, 3.0, 64.0] {
            for _ in 0..20 {
                let x: Vec<f64> = (0..2 * g.n()).map(|_| rng.gen_range(0.0..2.0)).collect();
                let obj = Objective { graph: &g, beta: rng.gen_range(10.0..100.0), mu: rng.gen_range(1.0..100.0), p };
                let mut grad = vec![0.0; x.len()];
                obj.value_and_gradient(&x, &mut grad);
                let fd = central_difference(&obj, &x, 1e-6);
                let err: f64 = grad.iter().zip(&fd).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
                let scale: f64 = fd.iter().map(|v| v * v).sum::<f64>().sqrt();
                assert!(err <= 1e-5 * scale, "p = {p}: {err} vs {scale}");
            }
        }
    }

    #[test]
    fn smooth_max_bias() {
        let g = Graph::complete(2);
        let obj = Objective { graph: &g, beta: 100.0, mu: 1.0, p: 2.0 };
        // one pair: the smooth max is exact; no penalty at distance one
        assert!((obj.value(&[0.0, 0.0, 1.0, 0.0]) - 1.0).abs() < 1e-15);
        // penalty for a short edge
        assert!((obj.value(&[0.0, 0.0, 0.5, 0.0]) - 0.75).abs() < 1e-15);
    }
}
