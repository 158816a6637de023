use super::Graph;
use crate::error::{Error, Result};

/// Vertex map from `source` to `target`.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub source: Graph,
    pub target: Graph,
    pub map: Vec<usize>,
}

impl Homomorphism {
    /// A proper coloring viewed as a map into K_k.
    pub fn from_coloring(g: &Graph, colors: &[usize], k: usize) -> Self {
        Homomorphism { source: g.clone(), target: Graph::complete(k), map: colors.to_vec() }
    }

    /// First source edge whose image is not a target edge.
    pub fn broken_edge(&self) -> Result<Option<(usize, usize)>> {
        if self.map.len() != self.source.n() {
            return Err(Error::Parameter(format!(
                "map covers {} vertices, source has {}",
                self.map.len(),
                self.source.n()
            )));
        }
        if let Some((v, &img)) = self.map.iter().enumerate().find(|(_, &img)| img >= self.target.n()) {
            return Err(Error::Parameter(format!(
                "vertex {v} maps to {img}, target has {} vertices",
                self.target.n()
            )));
        }
        Ok(self
            .source
            .edges()
            .iter()
            .copied()
            .find(|&(u, v)| !self.target.has_edge(self.map[u], self.map[v])))
    }
}

/// Whether every source edge maps onto a target edge.
pub fn verify_homomorphism(phi: &Homomorphism) -> Result<bool> {
    Ok(phi.broken_edge()?.is_none())
}
