//! Certified plane-width intervals. Every bound carries the mechanisms that
//! produced it; every upper bound carries a realization that re-verifies.

use std::f64::consts::PI;
use std::fmt;
use std::time::Duration;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{chromatic_number, max_clique, ChromaticResult, Graph, GraphExpr};
use crate::optimize::{optimize, OptimizeConfig};
use crate::realization::{
    evaluate, from_circular, from_coloring, join_realization, known_complete_width, product_realization,
    union_realization, Coloring, Realization,
};
use crate::DEFAULT_TOL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mechanism {
    Edge,
    CliqueTable,
    CliqueFormula,
    ChiThreshold,
    TilingInversion,
    Coloring,
    Optimizer,
    Circular,
    Join,
    Product,
    Union,
    /// A realization supplied by the caller.
    Witness,
}

impl Mechanism {
    pub fn tag(self) -> &'static str {
        match self {
            Mechanism::Edge => "edge",
            Mechanism::CliqueTable => "clique-table",
            Mechanism::CliqueFormula => "clique-formula",
            Mechanism::ChiThreshold => "chi-threshold",
            Mechanism::TilingInversion => "tiling-inversion",
            Mechanism::Coloring => "coloring",
            Mechanism::Optimizer => "optimizer",
            Mechanism::Circular => "circular",
            Mechanism::Join => "join",
            Mechanism::Product => "product",
            Mechanism::Union => "union",
            Mechanism::Witness => "witness",
        }
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `√(2√3/π · n) − 1`, the packing lower bound for K_n.
pub fn kn_packing_bound(n: usize) -> f64 {
    (2.0 * 3f64.sqrt() / PI * n as f64).sqrt() - 1.0
}

/// Lower bound on the plane-width of K_n: exact for `n <= 8`, otherwise the
/// larger of the K_8 value and the packing bound.
pub fn kn_lower(n: usize) -> Result<f64> {
    kn_lower_with_source(n).map(|(v, _)| v)
}

fn kn_lower_with_source(n: usize) -> Result<(f64, Mechanism)> {
    if n < 2 {
        return Err(Error::Parameter(format!("K_n bound needs n >= 2, got {n}")));
    }
    if n <= 8 {
        return Ok((known_complete_width(n)?, Mechanism::CliqueTable));
    }
    let table = known_complete_width(8)?;
    let formula = kn_packing_bound(n);
    Ok(if formula > table { (formula, Mechanism::CliqueFormula) } else { (table, Mechanism::CliqueTable) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBound {
    pub value: f64,
    /// The plane-width is known to exceed `value` strictly.
    pub strict: bool,
    pub provenance: Vec<Mechanism>,
}

/// Largest `t >= 1` with `3t² + 3t + 1 < chi`.
fn tiling_inversion_t(chi: usize) -> Option<usize> {
    (1..).take_while(|&t| 3 * t * t + 3 * t + 1 < chi).last()
}

/// Best lower bound from edges, the clique number and the chromatic number
/// (the exact value or, after a timeout, its lower bound).
pub fn lower_bound(g: &Graph, omega: usize, chi: &ChromaticResult) -> Result<LowerBound> {
    if g.m() == 0 {
        return Err(Error::Parameter("lower bounds need a graph with at least one edge".into()));
    }
    let mut cands: Vec<(f64, bool, Mechanism)> = vec![(1.0, false, Mechanism::Edge)];
    if omega >= 2 {
        let (v, m) = kn_lower_with_source(omega)?;
        cands.push((v, false, m));
    }
    let k = chi.lower;
    for (need, value) in [(4, 2.0 / 3f64.sqrt()), (5, 2f64.sqrt()), (8, 2.0)] {
        if k >= need {
            cands.push((value, true, Mechanism::ChiThreshold));
        }
    }
    if let Some(t) = tiling_inversion_t(k) {
        cands.push((1.5 * t as f64, false, Mechanism::TilingInversion));
    }
    let value = cands.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let top: Vec<_> = cands.iter().filter(|c| c.0 >= value - 1e-12).collect();
    let mut provenance: Vec<Mechanism> = top.iter().map(|c| c.2).collect();
    provenance.sort();
    provenance.dedup();
    Ok(LowerBound { value, strict: top.iter().any(|c| c.1), provenance })
}

/// Circular coloring supplied from outside: one angle per vertex and the
/// circular chromatic number it certifies.
#[derive(Clone, Debug, PartialEq)]
pub struct CircularHint {
    pub angles: Vec<f64>,
    pub chi_c: f64,
}

#[derive(Clone, Debug)]
pub struct BoundsConfig {
    pub chi_budget: Duration,
    /// `None` skips the optimizer.
    pub optimizer: Option<OptimizeConfig>,
    pub circular: Option<CircularHint>,
    /// Extra candidate realizations; each is verified before use.
    pub witnesses: Vec<Realization>,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            chi_budget: crate::graph::DEFAULT_BUDGET,
            optimizer: Some(OptimizeConfig::default()),
            circular: None,
            witnesses: Vec::new(),
        }
    }
}

impl BoundsConfig {
    /// Coloring constructions only.
    pub fn without_optimizer() -> Self {
        BoundsConfig { optimizer: None, ..BoundsConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UpperBound {
    pub value: f64,
    pub witness: Realization,
    pub provenance: Vec<Mechanism>,
}

fn consider(best: &mut Option<UpperBound>, g: &Graph, r: Realization, provenance: Vec<Mechanism>) -> Result<()> {
    let e = evaluate(g, &r, DEFAULT_TOL)?;
    if !e.valid || !r.norm.is_euclidean() {
        return Ok(());
    }
    match best {
        Some(b) if b.value <= e.width => {}
        _ => *best = Some(UpperBound { value: e.width, witness: r, provenance }),
    }
    Ok(())
}

/// Narrowest verified realization among the coloring construction, the
/// optimizer, a supplied circular coloring and supplied witnesses.
pub fn upper_bound(g: &Graph, chi: &ChromaticResult, cfg: &BoundsConfig) -> Result<UpperBound> {
    let mut best = None;
    consider(&mut best, g, from_coloring(g, &Coloring::new(chi.coloring.clone()))?, vec![Mechanism::Coloring])?;
    if let Some(hint) = &cfg.circular {
        let r = from_circular(g, &hint.angles, hint.chi_c)?;
        consider(&mut best, g, r, vec![Mechanism::Circular])?;
    }
    for w in &cfg.witnesses {
        if w.n() != g.n() {
            return Err(Error::Parameter(format!("witness has {} points, graph has {} vertices", w.n(), g.n())));
        }
        consider(&mut best, g, w.clone(), vec![Mechanism::Witness])?;
    }
    if let (Some(opt), true) = (&cfg.optimizer, g.m() > 0) {
        let r = optimize(g, opt)?;
        consider(&mut best, g, r.realization, vec![Mechanism::Optimizer])?;
    }
    Ok(best.expect("the coloring construction always yields a valid witness"))
}

/// Upper bound for a composed graph: the best of the direct mechanisms on
/// the whole graph and the composition constructions applied to the parts'
/// own best witnesses, recursively.
pub fn upper_bound_expr(expr: &GraphExpr, cfg: &BoundsConfig) -> Result<UpperBound> {
    upper_bound_expr_with(expr, None, cfg)
}

fn upper_bound_expr_with(expr: &GraphExpr, chi: Option<&ChromaticResult>, cfg: &BoundsConfig) -> Result<UpperBound> {
    let g = expr.graph();
    let mut best = Some(match chi {
        Some(chi) => upper_bound(&g, chi, cfg)?,
        None => upper_bound(&g, &chromatic_number(&g, cfg.chi_budget), cfg)?,
    });
    let part_cfg = BoundsConfig { circular: None, witnesses: Vec::new(), ..cfg.clone() };
    let composed = match expr {
        GraphExpr::Leaf(_) => None,
        GraphExpr::Join(a, b) | GraphExpr::Cartesian(a, b) | GraphExpr::Union(a, b) => {
            let (ga, gb) = (a.graph(), b.graph());
            let (ua, ub) = (upper_bound_expr(a, &part_cfg)?, upper_bound_expr(b, &part_cfg)?);
            let (r, m) = match expr {
                GraphExpr::Join(..) => (join_realization(&ga, &gb, &ua.witness, &ub.witness)?, Mechanism::Join),
                GraphExpr::Cartesian(..) => {
                    (product_realization(&ga, &gb, &ua.witness, &ub.witness)?, Mechanism::Product)
                }
                _ => (union_realization(&ga, &gb, &ua.witness, &ub.witness)?, Mechanism::Union),
            };
            let mut provenance = vec![m];
            provenance.extend(ua.provenance.iter().chain(&ub.provenance));
            provenance.sort();
            provenance.dedup();
            Some((r, provenance))
        }
    };
    if let Some((r, provenance)) = composed {
        consider(&mut best, &g, r, provenance)?;
    }
    Ok(best.expect("direct bound present"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub lower: f64,
    pub lower_strict: bool,
    pub lower_provenance: Vec<Mechanism>,
    pub upper: f64,
    pub upper_witness: Realization,
    pub upper_provenance: Vec<Mechanism>,
    pub clique_number: usize,
    pub chromatic: ChromaticResult,
    /// Degradations worth knowing about, such as a chromatic-number timeout.
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn to_json(&self) -> Value {
        let tags = |v: &[Mechanism]| v.iter().map(|m| m.tag()).collect::<Vec<_>>();
        json!({
            "lower": self.lower,
            "lower_strict": self.lower_strict,
            "upper": self.upper,
            "lower_provenance": tags(&self.lower_provenance),
            "upper_provenance": tags(&self.upper_provenance),
            "clique_number": self.clique_number,
            "chromatic_lower": self.chromatic.lower,
            "chromatic_upper": self.chromatic.upper,
            "chromatic_exact": self.chromatic.exact,
            "notes": self.notes,
        })
    }

    /// The interval contains `x` up to `tol` (strictness is not enforced).
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.lower - tol <= x && x <= self.upper + tol
    }
}

/// Plane-width interval of `g`.
pub fn pw_interval(g: &Graph, cfg: &BoundsConfig) -> Result<BoundReport> {
    pw_interval_expr(&GraphExpr::leaf(g.clone()), cfg)
}

/// Plane-width interval of a composed graph, using the composition
/// constructions as extra upper-bound mechanisms.
pub fn pw_interval_expr(expr: &GraphExpr, cfg: &BoundsConfig) -> Result<BoundReport> {
    let g = expr.graph();
    if g.m() == 0 {
        return Err(Error::Parameter("plane-width bounds need a graph with at least one edge".into()));
    }
    let omega = max_clique(&g).len();
    let chi = chromatic_number(&g, cfg.chi_budget);
    let mut notes = Vec::new();
    if !chi.exact {
        notes.push(format!(
            "chromatic number only bounded: {} <= chi <= {}; thresholds use the lower end",
            chi.lower, chi.upper
        ));
    }
    let lower = lower_bound(&g, omega, &chi)?;
    let upper = upper_bound_expr_with(expr, Some(&chi), cfg)?;
    if lower.value > upper.value + 1e-9 {
        return Err(Error::Consistency(format!(
            "lower bound {} ({:?}) exceeds upper bound {} ({:?})",
            lower.value, lower.provenance, upper.value, upper.provenance
        )));
    }
    Ok(BoundReport {
        lower: lower.value,
        lower_strict: lower.strict,
        lower_provenance: lower.provenance,
        upper: upper.value,
        upper_witness: upper.witness,
        upper_provenance: upper.provenance,
        clique_number: omega,
        chromatic: chi,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compose, generate, ComposeKind, GraphSpec};

    fn fast() -> BoundsConfig {
        BoundsConfig::without_optimizer()
    }

    #[test]
    fn kn_lower_values() {
        assert_eq!(kn_lower(7).unwrap(), 2.0);
        assert!((kn_lower(8).unwrap() - 2.246980).abs() < 1e-6);
        assert!((kn_lower(16).unwrap() - 3.200301).abs() < 1e-6);
        assert!(kn_lower(1).is_err());
        // the table value dominates just past K_8
        assert_eq!(kn_lower(9).unwrap(), kn_lower(8).unwrap());
        let seq: Vec<f64> = (2..200).map(|n| kn_lower(n).unwrap()).collect();
        assert!(seq.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn tiling_inversion_values() {
        assert_eq!(tiling_inversion_t(7), None);
        assert_eq!(tiling_inversion_t(8), Some(1));
        assert_eq!(tiling_inversion_t(19), Some(1));
        assert_eq!(tiling_inversion_t(20), Some(2));
    }

    #[test]
    fn k4_interval() {
        let r = pw_interval(&Graph::complete(4), &fast()).unwrap();
        assert!((r.lower - 2f64.sqrt()).abs() < 1e-12);
        assert!(!r.lower_strict);
        assert!((r.upper - 2f64.sqrt()).abs() < 1e-12);
        assert!(r.lower_provenance.contains(&Mechanism::CliqueTable));
    }

    #[test]
    fn k5_pinned() {
        let r = pw_interval(&Graph::complete(5), &fast()).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r.lower - phi).abs() < 1e-12 && (r.upper - phi).abs() < 1e-12);
    }

    #[test]
    fn grotzsch_threshold() {
        let g = generate(&GraphSpec::Grotzsch).unwrap();
        let r = pw_interval(&g, &fast()).unwrap();
        assert_eq!(r.clique_number, 2);
        assert!((r.lower - 2.0 / 3f64.sqrt()).abs() < 1e-12, "{r:?}");
        assert!(r.lower_strict);
        assert_eq!(r.lower_provenance, vec![Mechanism::ChiThreshold]);
        assert!((r.upper - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn petersen_pinned() {
        let g = generate(&GraphSpec::Petersen).unwrap();
        let r = pw_interval(&g, &fast()).unwrap();
        assert_eq!((r.lower, r.upper), (1.0, 1.0));
    }

    #[test]
    fn two_pentagons() {
        let c5 = generate(&GraphSpec::Cycle(5)).unwrap();
        let expr = GraphExpr::union(c5.clone().into(), c5.into());
        let r = pw_interval_expr(&expr, &fast()).unwrap();
        assert_eq!(r.lower, 1.0);
        assert!(r.upper <= 2.0 / 3f64.sqrt() + 1e-9);
        // the disjoint union is 3-colorable, so the coloring witness wins
        assert_eq!(r.upper, 1.0);
    }

    #[test]
    fn circular_hint_used() {
        // χ = 4 but χ_c = 13/4: the circle beats the unit square
        let g = generate(&GraphSpec::Circulant { p: 13, q: 4 }).unwrap();
        let angles = (0..13).map(|i| 2.0 * PI * i as f64 / 13.0).collect();
        let cfg = BoundsConfig { circular: Some(CircularHint { angles, chi_c: 3.25 }), ..fast() };
        let r = pw_interval(&g, &cfg).unwrap();
        assert_eq!(r.chromatic.value(), Some(4));
        assert!(r.upper <= 1.0 / (PI / 3.25).sin() + 1e-9);
        assert!(r.upper < 2f64.sqrt());
        assert_eq!(r.upper_provenance, vec![Mechanism::Circular]);
    }

    #[test]
    fn circulant_25_4_with_angles() {
        let g = generate(&GraphSpec::Circulant { p: 25, q: 4 }).unwrap();
        let angles = (0..25).map(|i| 2.0 * PI * i as f64 / 25.0).collect();
        let cfg = BoundsConfig { circular: Some(CircularHint { angles, chi_c: 6.25 }), ..fast() };
        let r = pw_interval(&g, &cfg).unwrap();
        // 1/sin(4π/25) = 2.0757496...; the 7-coloring witness of width 2 is narrower
        assert!(r.upper <= 2.075750 + 1e-6);
        assert_eq!(r.upper, 2.0);
    }

    #[test]
    fn join_expression_records_composition() {
        let k2 = Graph::complete(2);
        let expr = GraphExpr::join(k2.clone().into(), k2.into());
        let up = upper_bound_expr(&expr, &fast()).unwrap();
        // the K_4 coloring witness beats the generic join construction
        assert!((up.value - 2f64.sqrt()).abs() < 1e-12);
        let g = compose(ComposeKind::Join, &Graph::complete(2), Some(&Graph::complete(2))).unwrap();
        assert_eq!(g, expr.graph());
    }

    #[test]
    fn json_keys() {
        let r = pw_interval(&Graph::complete(3), &fast()).unwrap();
        let v = r.to_json();
        for k in ["lower", "lower_strict", "upper", "lower_provenance", "upper_provenance"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert_eq!(v["upper_provenance"][0], "coloring");
    }

    #[test]
    fn edgeless_rejected() {
        assert!(matches!(pw_interval(&Graph::empty(3), &fast()), Err(Error::Parameter(_))));
    }
}
