//! Fixture graphs shared by the benchmarks.

use planewidth::graph::generate;
use planewidth::{Graph, GraphSpec};

/// Named graphs of increasing difficulty for the exact solvers.
pub fn solver_corpus() -> Vec<(&'static str, Graph)> {
    let specs = [
        ("petersen", GraphSpec::Petersen),
        ("grotzsch", GraphSpec::Grotzsch),
        ("wheel-11", GraphSpec::OddWheel(11)),
        ("circulant-25-4", GraphSpec::Circulant { p: 25, q: 4 }),
        ("star-4", GraphSpec::CircleStar { n: 4, eps: 0.1 }),
    ];
    specs.into_iter().map(|(name, s)| (name, generate(&s).expect("fixture spec is valid"))).collect()
}
