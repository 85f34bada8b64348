use thiserror::Error;

use crate::entropy::{run, DrawSequence, RunError, RunOptions, RunResult};
use crate::hypergraph::{
    verify, Color, Hypergraph, HypergraphError, ListAssignment, Mode, PartialColoring, VerifyError,
};

use super::Graph;

/// Why a labeling fails to tell neighbors apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingViolation {
    #[error("{found} labels given, {expected} expected")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {edge} joins {u} and {v}, which are not distinguished")]
    Collision { edge: usize, u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("graph is not regular (vertex {vertex} has degree {degree}, vertex 0 has {expected})")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Run(#[from] RunError),
    #[error("no labeling found within {iterations} iterations")]
    Incomplete { iterations: u64 },
    #[error("hypergraph verifier rejected the labeling: {0}")]
    HypergraphCheck(VerifyError),
    #[error("graph check rejected the labeling: {0}")]
    GraphCheck(LabelingViolation),
}

/// An edge labeling together with the run that produced it.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub labels: Vec<Color>,
    pub run: RunResult,
}

#[derive(Debug, Clone)]
pub struct TotalLabeling {
    pub vertex_labels: Vec<Color>,
    pub edge_labels: Vec<Color>,
    pub run: RunResult,
}

/// The hypergraph on the edges of `g` with one hyperedge `E(v)` per vertex.
/// Fails when `g` has an isolated vertex (empty hyperedge) or an isolated
/// edge (two equal hyperedges).
pub fn dual_hypergraph(g: &Graph) -> Result<Hypergraph, HypergraphError> {
    let edges = (0..g.n()).map(|v| g.incident(v).to_vec()).collect();
    Hypergraph::new(g.m(), edges)
}

/// The hypergraph on `V ∪ E` (vertices first, edge `e` numbered `n + e`)
/// with one hyperedge `{v} ∪ E(v)` per vertex.
pub fn total_hypergraph(g: &Graph) -> Result<Hypergraph, HypergraphError> {
    let n = g.n();
    let edges = (0..n)
        .map(|v| {
            std::iter::once(v)
                .chain(g.incident(v).iter().map(|&e| n + e))
                .collect()
        })
        .collect();
    Hypergraph::new(n + g.m(), edges)
}

/// No component is a single edge.
pub fn is_nice(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.degree(u) > 1 || g.degree(v) > 1)
}

fn seen_at(g: &Graph, v: usize, own: Option<Color>, labels: &[Color], mode: Mode) -> Vec<Color> {
    let mut seen: Vec<Color> = own
        .into_iter()
        .chain(g.incident(v).iter().map(|&e| labels[e]))
        .collect();
    seen.sort_unstable();
    if mode == Mode::Sets {
        seen.dedup();
    }
    seen
}

fn first_collision(g: &Graph, seen: impl Fn(usize) -> Vec<Color>) -> Result<(), LabelingViolation> {
    for (edge, &(u, v)) in g.edges().iter().enumerate() {
        if seen(u) == seen(v) {
            return Err(LabelingViolation::Collision { edge, u, v });
        }
    }
    Ok(())
}

fn check_len(expected: usize, found: usize) -> Result<(), LabelingViolation> {
    if expected == found {
        Ok(())
    } else {
        Err(LabelingViolation::LengthMismatch { expected, found })
    }
}

/// Whether adjacent vertices see different sets (or multisets) of incident
/// edge labels. Works on the graph directly.
pub fn distinguishes_edges(
    g: &Graph,
    labels: &[Color],
    mode: Mode,
) -> Result<(), LabelingViolation> {
    check_len(g.m(), labels.len())?;
    first_collision(g, |v| seen_at(g, v, None, labels, mode))
}

/// As [`distinguishes_edges`], with each vertex's own label added to what it
/// sees.
pub fn distinguishes_total(
    g: &Graph,
    vertex_labels: &[Color],
    edge_labels: &[Color],
    mode: Mode,
) -> Result<(), LabelingViolation> {
    check_len(g.n(), vertex_labels.len())?;
    check_len(g.m(), edge_labels.len())?;
    first_collision(g, |v| {
        seen_at(g, v, Some(vertex_labels[v]), edge_labels, mode)
    })
}

/// Checks that `f(v)`, the label of the only edge at a degree-one vertex and
/// otherwise the spread max − min of incident labels, is a proper coloring.
pub fn verify_gap(g: &Graph, labels: &[Color]) -> Result<(), LabelingViolation> {
    check_len(g.m(), labels.len())?;
    let f = |v: usize| -> Color {
        let at: Vec<Color> = g.incident(v).iter().map(|&e| labels[e]).collect();
        match at.as_slice() {
            [] => 0,
            [only] => *only,
            _ => at.iter().max().unwrap() - at.iter().min().unwrap(),
        }
    };
    for (edge, &(u, v)) in g.edges().iter().enumerate() {
        if f(u) == f(v) {
            return Err(LabelingViolation::Collision { edge, u, v });
        }
    }
    Ok(())
}

fn require_regular(g: &Graph) -> Result<(), LabelError> {
    if g.n() == 0 {
        return Ok(());
    }
    let expected = g.degree(0);
    match (0..g.n()).find(|&v| g.degree(v) != expected) {
        Some(vertex) => Err(LabelError::NotRegular {
            vertex,
            degree: g.degree(vertex),
            expected,
        }),
        None => Ok(()),
    }
}

fn colored(
    h: &Hypergraph,
    res: RunResult,
    mode: Mode,
) -> Result<(Vec<Color>, RunResult), LabelError> {
    let Some(colors) = res.coloring().to_complete().filter(|_| res.is_complete()) else {
        return Err(LabelError::Incomplete {
            iterations: res.iterations,
        });
    };
    verify(h, &PartialColoring::from_complete(&colors), mode)
        .map_err(LabelError::HypergraphCheck)?;
    Ok((colors, res))
}

/// Labels the edges of a regular graph from per-edge lists by coloring its
/// dual hypergraph. The result is checked on the hypergraph and on the graph.
pub fn label_edges(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
    draws: &DrawSequence,
    options: RunOptions,
) -> Result<Labeling, LabelError> {
    require_regular(g)?;
    let h = dual_hypergraph(g)?;
    let (labels, run) = colored(&h, run(&h, lists, mode, draws, options)?, mode)?;
    distinguishes_edges(g, &labels, mode).map_err(LabelError::GraphCheck)?;
    Ok(Labeling { labels, run })
}

/// Labels vertices and edges of a regular graph from lists given for the
/// vertices first and then the edges, by coloring the total hypergraph.
pub fn label_total(
    g: &Graph,
    lists: &ListAssignment,
    mode: Mode,
    draws: &DrawSequence,
    options: RunOptions,
) -> Result<TotalLabeling, LabelError> {
    require_regular(g)?;
    let h = total_hypergraph(g)?;
    let (mut colors, run) = colored(&h, run(&h, lists, mode, draws, options)?, mode)?;
    let edge_labels = colors.split_off(g.n());
    distinguishes_total(g, &colors, &edge_labels, mode).map_err(LabelError::GraphCheck)?;
    Ok(TotalLabeling {
        vertex_labels: colors,
        edge_labels,
        run,
    })
}
