//! Hypergraph data model, structural queries and coloring verifiers.
//!
//! Vertices are `0..n` internally; the text formats in [`crate::io`] are
//! 1-based. The order of vertices and the order of edges are the linear
//! orders the coloring algorithm relies on, so nothing here ever re-sorts
//! the input.

mod coloring;
mod permutation;
pub(crate) mod verify;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

pub use coloring::{Color, ListAssignment, ListError, PartialColoring};
pub use permutation::{PermutationError, PermutationFamily};
pub use verify::{
    similar_under, verify, verify_partial, verify_partial_sequences, verify_sequences, Mode,
    VerifyError, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {edge} contains vertex {vertex}, outside 0..{n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edges {first} and {second} are equal as sets")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {edge} has {size} vertices, expected {expected}")]
    NotUniform {
        edge: usize,
        size: usize,
        expected: usize,
    },
    #[error("hypergraph has no edges")]
    NoEdges,
}

/// A hypergraph with ordered vertices `0..n` and ordered edges.
///
/// Each edge keeps the vertex sequence it was given (meaningful only when
/// distinguishing by sequences) together with a sorted copy used for set
/// operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    sorted: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (e, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: e });
            }
            let mut s = edge.clone();
            s.sort_unstable();
            for w in s.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::RepeatedVertex {
                        edge: e,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&last) = s.last() {
                if last >= n {
                    return Err(HypergraphError::VertexOutOfRange {
                        edge: e,
                        vertex: last,
                        n,
                    });
                }
            }
            sorted.push(s);
        }

        let mut seen: HashMap<&[usize], usize> = HashMap::new();
        for (e, s) in sorted.iter().enumerate() {
            if let Some(&first) = seen.get(s.as_slice()) {
                return Err(HypergraphError::DuplicateEdge { first, second: e });
            }
            seen.insert(s, e);
        }

        let mut incidence = vec![Vec::new(); n];
        for (e, s) in sorted.iter().enumerate() {
            for &v in s {
                incidence[v].push(e);
            }
        }

        let neighbors = sorted
            .iter()
            .enumerate()
            .map(|(e, s)| {
                let set: BTreeSet<usize> = s
                    .iter()
                    .flat_map(|&v| incidence[v].iter().copied())
                    .filter(|&f| f != e)
                    .collect();
                set.into_iter().collect()
            })
            .collect();

        Ok(Self {
            n,
            edges,
            sorted,
            incidence,
            neighbors,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The edge as given, in its sequence order.
    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    /// The edge's vertices in increasing order.
    pub fn edge_set(&self, e: usize) -> &[usize] {
        &self.sorted[e]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `E(v)`: the edges containing `v`, in edge order.
    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// `Δ(H)`; zero for a hypergraph without vertices.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges sharing at least one vertex with `e`, in edge order.
    pub fn intersecting(&self, e: usize) -> &[usize] {
        &self.neighbors[e]
    }

    pub fn contains(&self, e: usize, v: usize) -> bool {
        self.sorted[e].binary_search(&v).is_ok()
    }

    /// Returns `k` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Result<usize, HypergraphError> {
        let first = self.sorted.first().ok_or(HypergraphError::NoEdges)?.len();
        for (e, s) in self.sorted.iter().enumerate() {
            if s.len() != first {
                return Err(HypergraphError::NotUniform {
                    edge: e,
                    size: s.len(),
                    expected: first,
                });
            }
        }
        Ok(first)
    }

    /// `I(H)`: the sizes `|P \ Q|` over pairs of edges, restricted to `1..k`.
    pub fn difference_spectrum(&self) -> Result<Vec<usize>, HypergraphError> {
        let k = self.uniformity()?;
        let mut spectrum = BTreeSet::new();
        for p in 0..self.m() {
            for &q in &self.neighbors[p] {
                if q > p {
                    let d = self.difference_size(p, q);
                    if (1..k).contains(&d) {
                        spectrum.insert(d);
                    }
                }
            }
        }
        Ok(spectrum.into_iter().collect())
    }

    /// `|P \ Q|`.
    pub fn difference_size(&self, p: usize, q: usize) -> usize {
        self.sorted[p]
            .iter()
            .filter(|v| !self.contains(q, **v))
            .count()
    }

    /// `P \ Q` in increasing vertex order.
    pub fn difference(&self, p: usize, q: usize) -> Vec<usize> {
        self.sorted[p]
            .iter()
            .copied()
            .filter(|&v| !self.contains(q, v))
            .collect()
    }

    /// `P ∩ Q` in increasing vertex order.
    pub fn intersection(&self, p: usize, q: usize) -> Vec<usize> {
        self.sorted[p]
            .iter()
            .copied()
            .filter(|&v| self.contains(q, v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h1() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn uniformity_of_small_hypergraphs() {
        assert_eq!(h1().uniformity(), Ok(3));
        assert_eq!(
            Hypergraph::new(2, vec![vec![0, 1]]).unwrap().uniformity(),
            Ok(2)
        );
        let mixed = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(
            mixed.uniformity(),
            Err(HypergraphError::NotUniform {
                edge: 1,
                size: 3,
                expected: 2
            })
        );
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(h1().difference_spectrum().unwrap(), vec![1]);
        let disjoint = Hypergraph::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(disjoint.difference_spectrum().unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]]),
            Err(HypergraphError::DuplicateEdge {
                first: 0,
                second: 1
            })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 0]]),
            Err(HypergraphError::RepeatedVertex { edge: 0, vertex: 0 })
        );
        assert!(matches!(
            Hypergraph::new(2, vec![vec![0, 2]]),
            Err(HypergraphError::VertexOutOfRange { .. })
        ));
        assert_eq!(
            Hypergraph::new(2, vec![vec![]]),
            Err(HypergraphError::EmptyEdge { edge: 0 })
        );
    }

    #[test]
    fn incidence_and_degree() {
        let h = h1();
        assert_eq!(h.edges_at(1), &[0, 1]);
        assert_eq!(h.edges_at(3), &[1]);
        assert_eq!(h.max_degree(), 2);
        assert_eq!(h.intersecting(0), &[1]);
        assert_eq!(h.difference(0, 1), vec![0]);
        assert_eq!(h.intersection(0, 1), vec![1, 2]);
    }

    #[test]
    fn edge_sequence_order_is_preserved() {
        let h = Hypergraph::new(3, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(h.edge(0), &[2, 0, 1]);
        assert_eq!(h.edge_set(0), &[0, 1, 2]);
    }
}
