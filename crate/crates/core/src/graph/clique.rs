//! Maximum clique by branch and bound with a greedy-coloring bound.

use super::{Graph, VertexSet};

/// A maximum clique of `g`, as sorted vertex indices. Deterministic: the
/// search order depends only on the labelled graph.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    // Search on a copy relabelled by decreasing degree (ties: lower index).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let mut s = VertexSet::new(n);
            for w in g.neighbors(v).iter() {
                s.insert(pos[w]);
            }
            s
        })
        .collect();

    let mut search = Search { adj: &adj, best: vec![order[0]].into_iter().map(|v| pos[v]).collect() };
    let mut current = Vec::new();
    search.expand(&mut current, VertexSet::full(n));
    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    clique
}

struct Search<'a> {
    adj: &'a [VertexSet],
    best: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut candidates: VertexSet) {
        let (vertices, bounds) = self.color_bound(&candidates);
        for (&v, &bound) in vertices.iter().zip(&bounds).rev() {
            if current.len() + bound <= self.best.len() {
                return;
            }
            current.push(v);
            let next = candidates.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            candidates.remove(v);
        }
    }

    /// Greedy sequential coloring of the candidates; returns the vertices in
    /// color order with the color number (1-based) each one received.
    fn color_bound(&self, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut vertices = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                vertices.push(v);
                bounds.push(color);
            }
        }
        (vertices, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphSpec};

    fn is_clique(g: &Graph, c: &[usize]) -> bool {
        c.iter().enumerate().all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    /// Exhaustive subset enumeration; independent of the branch and bound.
    fn brute_clique_number(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 25);
        let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w)).collect();
        let mut best = 0;
        for mask in 0u32..(1u32 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let ok = (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| mask & !(1 << v) & !adj[v] == 0);
            if ok {
                best = size;
            }
        }
        best
    }

    #[test]
    fn complete_and_cycle() {
        assert_eq!(max_clique(&Graph::complete(5)).len(), 5);
        assert_eq!(max_clique(&generate(&GraphSpec::Cycle(5)).unwrap()).len(), 2);
        assert!(max_clique(&Graph::empty(0)).is_empty());
        assert_eq!(max_clique(&Graph::empty(3)).len(), 1);
    }

    #[test]
    fn circulant_25_4() {
        let g = generate(&GraphSpec::Circulant { p: 25, q: 4 }).unwrap();
        let c = max_clique(&g);
        assert!(is_clique(&g, &c));
        // frozen from brute_clique_number on this graph (2^25 subsets)
        assert_eq!(c.len(), 6);
    }

    #[test]
    #[ignore = "exhaustive 2^25 enumeration; run to regenerate the frozen value"]
    fn circulant_25_4_oracle() {
        let g = generate(&GraphSpec::Circulant { p: 25, q: 4 }).unwrap();
        assert_eq!(brute_clique_number(&g), 6);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..14);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let c = max_clique(&g);
            assert!(is_clique(&g, &c));
            assert_eq!(c.len(), brute_clique_number(&g));
        }
    }
}
