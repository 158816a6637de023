//! Bounds and witnesses for the minimum-diameter unit-distance drawing of a graph.
//!
//! A *realization* maps every vertex of a graph to a point of the plane so
//! that adjacent vertices land at distance at least one. Its *width* is the
//! diameter of the image, and the plane-width of a graph is the smallest
//! width any realization can reach.
//!
//! The crate is organised around the pieces needed to bracket that number:
//!
//! * [`graph`]: graphs, generators, composition operators, exact clique and
//!   chromatic-number solvers, homomorphisms and file formats.
//! * [`geometry`]: points, ℓ_p distances, diameters and the enclosing
//!   regular hexagon of a bounded set.
//! * [`realization`]: realizations, colorings, verification and every
//!   explicit construction (complete-graph arrangements, lattice disks,
//!   circular colorings, pullbacks, joins, products and unions).
//! * [`partition`]: partitions of unit-diameter sets into small pieces and
//!   the colorings they induce on realized graphs.
//! * [`optimize`]: multistart smooth-max descent for near-optimal witnesses
//!   and a grid brute-force oracle for tiny graphs.
//! * [`bounds`]: the certified lower/upper interval engine.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod optimize;
pub mod partition;
pub mod realization;

pub use bounds::{pw_interval, BoundReport, BoundsConfig, Mechanism};
pub use error::{Error, Result};
pub use geometry::{diameter, distance, pal_hexagon, Hexagon, NormSpec, Point};
pub use graph::{Graph, GraphExpr, GraphSpec, Homomorphism};
pub use optimize::{brute_force, optimize, OptimizeConfig, OptimizeResult};
pub use realization::{evaluate, feasibilize, Coloring, Evaluation, Realization};

/// Default verification tolerance on the unit edge-length constraint.
pub const DEFAULT_TOL: f64 = 1e-9;
