//! Simple graphs and the labeling problems that reduce to hypergraph
//! colorings: an edge labeling distinguishes neighbors exactly when it is a
//! distinguishing coloring of the dual hypergraph, and a total labeling
//! exactly when it is one of the total hypergraph.

pub mod families;
mod geometry;
mod labeling;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub use geometry::{
    configuration_hypergraph, general_position_lines, line_arrangement, ArrangementError,
    Configuration,
};
pub use labeling::{
    distinguishes_edges, distinguishes_total, dual_hypergraph, is_nice, label_edges, label_total,
    total_hypergraph, verify_gap, LabelError, Labeling, LabelingViolation, TotalLabeling,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("edges {first} and {second} join the same vertices")]
    Parallel { first: usize, second: usize },
    #[error("edge {edge} uses vertex {vertex}, outside 0..{n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
}

/// A simple undirected graph on `0..n` with ordered edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashMap::new();
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        edge: e,
                        vertex: x,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: e, vertex: u });
            }
            if let Some(&first) = seen.get(&(u.min(v), u.max(v))) {
                return Err(GraphError::Parallel { first, second: e });
            }
            seen.insert((u.min(v), u.max(v)), e);
            incident[u].push(e);
            incident[v].push(e);
        }
        Ok(Self { n, edges, incident })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `E(v)` in edge order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    /// The endpoint of `e` other than `v`.
    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[v].iter().map(move |&e| self.other(e, v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = (self.n > 0).then(|| self.degree(0))?;
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Connected components as increasing vertex lists, ordered by least
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-coloring by BFS: `true` marks class `A`, the side of the least
    /// vertex of each component. `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u]?;
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        side.into_iter().collect()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut via = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in self.incident(u) {
                    if e == via[u] {
                        continue;
                    }
                    let w = self.other(e, u);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The subgraph induced by `vertices` (kept in the given order), with
    /// the map from new edge indices to old ones.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
                origin.push(e);
            }
        }
        let g = Graph::new(vertices.len(), edges).expect("subgraph of a simple graph is simple");
        (g, origin)
    }
}
