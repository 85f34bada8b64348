//! Seeded random instances.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Restarts allowed before a generator gives up.
pub const MAX_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("no such instance: {0}")]
    Infeasible(String),
    #[error("gave up after {0} attempts")]
    GaveUp(usize),
}

/// A uniformly random simple `k`-regular graph on `n` vertices, drawn from
/// the pairing model with restarts. Edges are sorted.
pub fn random_regular_graph(n: usize, k: usize, seed: u64) -> Result<Graph, GenerateError> {
    if k >= n || (n * k) % 2 == 1 {
        return Err(GenerateError::Infeasible(format!(
            "{k}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(n * k / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        return Ok(Graph::new(n, edges).expect("pairing without loops or repeats is simple"));
    }
    Err(GenerateError::GaveUp(MAX_ATTEMPTS))
}

/// A random `k`-uniform hypergraph with `m` distinct edges and maximum
/// degree at most `max_degree`. Each edge lists its vertices in the random
/// order they were drawn.
pub fn random_uniform_hypergraph(
    n: usize,
    k: usize,
    m: usize,
    max_degree: usize,
    seed: u64,
) -> Result<Hypergraph, GenerateError> {
    if k == 0 || k > n || m * k > n * max_degree {
        return Err(GenerateError::Infeasible(format!(
            "{m} edges of size {k} on {n} vertices with degree at most {max_degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut degree = vec![0; n];
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let open: Vec<usize> = (0..n).filter(|&v| degree[v] < max_degree).collect();
            if open.len() < k {
                continue 'attempt;
            }
            let edge: Vec<usize> = index::sample(&mut rng, open.len(), k)
                .into_iter()
                .map(|i| open[i])
                .collect();
            let mut key = edge.clone();
            key.sort_unstable();
            if !seen.insert(key) {
                continue 'attempt;
            }
            for &v in &edge {
                degree[v] += 1;
            }
            edges.push(edge);
        }
        return Ok(Hypergraph::new(n, edges).expect("sampled edges are valid"));
    }
    Err(GenerateError::GaveUp(MAX_ATTEMPTS))
}
