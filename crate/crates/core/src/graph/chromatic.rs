//! Exact chromatic number by saturation-ordered (DSATUR) branch and bound.

use std::time::{Duration, Instant};

use super::{max_clique, Graph};

/// Outcome of [`chromatic_number`]. When `exact` is false the solver ran
/// out of budget and `lower..=upper` brackets χ; `coloring` always witnesses
/// `upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub lower: usize,
    pub upper: usize,
    pub coloring: Vec<usize>,
    pub exact: bool,
}

impl ChromaticResult {
    /// χ when known exactly.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

/// Default solver budget.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(10);

const NONE: usize = usize::MAX;

/// Greedy DSATUR coloring (no backtracking). Ties: lowest vertex index,
/// lowest color.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![NONE; n];
    let mut state = Saturation::new(g, n.max(1));
    for _ in 0..n {
        let v = state.pick(g, &colors).expect("uncolored vertex remains");
        let c = (0..).find(|&c| state.count(v, c) == 0).unwrap();
        colors[v] = c;
        state.assign(g, v, c);
    }
    colors
}

/// Exact χ(g) within `budget`; on timeout, the best bounds found so far.
pub fn chromatic_number(g: &Graph, budget: Duration) -> ChromaticResult {
    let n = g.n();
    if n == 0 {
        return ChromaticResult { lower: 0, upper: 0, coloring: Vec::new(), exact: true };
    }
    let greedy = greedy_coloring(g);
    let upper = greedy.iter().max().unwrap() + 1;
    let clique = max_clique(g);
    let lower = clique.len();
    if lower == upper {
        return ChromaticResult { lower, upper, coloring: greedy, exact: true };
    }

    let mut bb = BranchAndBound {
        g,
        colors: vec![NONE; n],
        state: Saturation::new(g, upper),
        best: greedy,
        upper,
        lower,
        deadline: Instant::now() + budget,
        nodes: 0,
        timed_out: false,
    };
    // Symmetry breaking: the clique takes colors 0..ω in index order.
    for (c, &v) in clique.iter().enumerate() {
        bb.colors[v] = c;
        bb.state.assign(g, v, c);
    }
    bb.search(clique.len(), clique.len());
    let exact = !bb.timed_out;
    // a completed search proves the incumbent optimal
    let lower = if exact { bb.upper } else { bb.lower };
    ChromaticResult { lower, upper: bb.upper, coloring: bb.best, exact }
}

/// Per-vertex counts of neighbours holding each color.
struct Saturation {
    width: usize,
    counts: Vec<u32>,
    saturation: Vec<usize>,
    free_degree: Vec<usize>,
}

impl Saturation {
    fn new(g: &Graph, width: usize) -> Self {
        Saturation {
            width,
            counts: vec![0; g.n() * width],
            saturation: vec![0; g.n()],
            free_degree: (0..g.n()).map(|v| g.degree(v)).collect(),
        }
    }

    fn count(&self, v: usize, c: usize) -> u32 {
        if c >= self.width {
            0
        } else {
            self.counts[v * self.width + c]
        }
    }

    fn assign(&mut self, g: &Graph, v: usize, c: usize) {
        for w in g.neighbors(v).iter() {
            let slot = &mut self.counts[w * self.width + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
            self.free_degree[w] -= 1;
        }
    }

    fn unassign(&mut self, g: &Graph, v: usize, c: usize) {
        for w in g.neighbors(v).iter() {
            let slot = &mut self.counts[w * self.width + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
            self.free_degree[w] += 1;
        }
    }

    /// Uncolored vertex of maximum saturation, then maximum uncolored
    /// degree, then lowest index.
    fn pick(&self, g: &Graph, colors: &[usize]) -> Option<usize> {
        (0..g.n())
            .filter(|&v| colors[v] == NONE)
            .max_by_key(|&v| (self.saturation[v], self.free_degree[v], std::cmp::Reverse(v)))
    }
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    state: Saturation,
    best: Vec<usize>,
    upper: usize,
    lower: usize,
    deadline: Instant,
    nodes: u64,
    timed_out: bool,
}

impl BranchAndBound<'_> {
    fn search(&mut self, colored: usize, used: usize) {
        self.nodes += 1;
        if self.nodes % 1024 == 0 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out || self.upper == self.lower {
            return;
        }
        if colored == self.g.n() {
            if used < self.upper {
                self.upper = used;
                self.best = self.colors.clone();
            }
            return;
        }
        let v = self.state.pick(self.g, &self.colors).expect("uncolored vertex remains");
        // Colors 0..used are reusable; `used` opens a new class, allowed only
        // while it still beats the incumbent.
        let limit = (used + 1).min(self.upper - 1);
        for c in 0..limit {
            if self.state.count(v, c) > 0 {
                continue;
            }
            self.colors[v] = c;
            self.state.assign(self.g, v, c);
            self.search(colored + 1, used.max(c + 1));
            self.state.unassign(self.g, v, c);
            self.colors[v] = NONE;
            if self.timed_out || self.upper == self.lower {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphSpec};

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g, DEFAULT_BUDGET);
        assert!(r.exact);
        assert!(g.is_proper_coloring(&r.coloring));
        assert_eq!(r.coloring.iter().max().map_or(0, |m| m + 1), r.upper);
        r.upper
    }

    /// Tries every assignment of k colors; independent of the solver.
    fn brute_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let mut colors = vec![0usize; n];
        loop {
            if g.is_proper_coloring(&colors) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(&Graph::complete(6)), 6);
        assert_eq!(chi(&generate(&GraphSpec::Cycle(5)).unwrap()), 3);
        assert_eq!(chi(&generate(&GraphSpec::Cycle(6)).unwrap()), 2);
        assert_eq!(chi(&generate(&GraphSpec::OddWheel(5)).unwrap()), 4);
        assert_eq!(chi(&generate(&GraphSpec::Petersen).unwrap()), 3);
        assert_eq!(chi(&generate(&GraphSpec::Grotzsch).unwrap()), 4);
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
    }

    #[test]
    fn circulant_chi() {
        // χ = ⌈p/q⌉ for K_{p/q}
        assert_eq!(chi(&generate(&GraphSpec::Circulant { p: 25, q: 4 }).unwrap()), 7);
        assert_eq!(chi(&generate(&GraphSpec::Circulant { p: 7, q: 2 }).unwrap()), 4);
    }

    #[test]
    fn star_chi_is_eight() {
        assert_eq!(chi(&generate(&GraphSpec::CircleStar { n: 4, eps: 0.1 }).unwrap()), 8);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..9);
            let p = rng.gen_range(0.2..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let k = chi(&g);
            assert!(brute_colorable(&g, k));
            assert!(k == 1 || !brute_colorable(&g, k - 1));
            assert!(k >= max_clique(&g).len());
        }
    }

    #[test]
    fn zero_budget_reports_bounds() {
        let g = generate(&GraphSpec::CircleStar { n: 4, eps: 0.1 }).unwrap();
        let r = chromatic_number(&g, Duration::ZERO);
        assert!(r.lower <= 8 && 8 <= r.upper);
        assert!(g.is_proper_coloring(&r.coloring));
    }

    #[test]
    fn greedy_is_proper() {
        let g = generate(&GraphSpec::Circulant { p: 13, q: 3 }).unwrap();
        assert!(g.is_proper_coloring(&greedy_coloring(&g)));
    }
}
