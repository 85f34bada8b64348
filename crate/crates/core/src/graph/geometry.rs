//! Point-line incidence structures as hypergraphs: points are vertices and
//! every line is the edge of points on it, in order along the line.

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("line {line} has {found} points, expected {expected}")]
    LineSize {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("lines are not in general position: {0}")]
    NotGeneralPosition(String),
    #[error("not a configuration: {0}")]
    NotConfiguration(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

fn build(k: usize, lines: Vec<Vec<usize>>) -> Result<Hypergraph, ArrangementError> {
    if let Some((line, l)) = lines.iter().enumerate().find(|(_, l)| l.len() != k) {
        return Err(ArrangementError::LineSize {
            line,
            expected: k,
            found: l.len(),
        });
    }
    let n = lines.iter().flatten().max().map_or(0, |&p| p + 1);
    Ok(Hypergraph::new(n, lines)?)
}

/// A pair of lines sharing two or more points.
fn double_meet(h: &Hypergraph) -> Option<(usize, usize)> {
    (0..h.m()).find_map(|a| {
        h.intersecting(a)
            .iter()
            .find(|&&b| b > a && h.intersection(a, b).len() > 1)
            .map(|&b| (a, b))
    })
}

/// Builds the hypergraph of lines with `k` points each, given as point
/// indices. Lines may meet in at most one point and no point may lie on
/// three lines.
pub fn line_arrangement(k: usize, lines: Vec<Vec<usize>>) -> Result<Hypergraph, ArrangementError> {
    let h = build(k, lines)?;
    if let Some(p) = (0..h.n()).find(|&p| h.degree(p) > 2) {
        return Err(ArrangementError::NotGeneralPosition(format!(
            "point {p} lies on {} lines",
            h.degree(p)
        )));
    }
    if let Some((a, b)) = double_meet(&h) {
        return Err(ArrangementError::NotGeneralPosition(format!(
            "lines {a} and {b} share more than one point"
        )));
    }
    Ok(h)
}

/// `count` pairwise crossing lines with `k` marked points each, taken from
/// the arrangement `y = i·x + i²`: lines `i < j` cross at `x = −(i + j)`,
/// so no three are concurrent. Crossing points come first in the numbering
/// (pairs in lexicographic order), then `k − count + 1` private points per
/// line to the right of all crossings.
pub fn general_position_lines(count: usize, k: usize) -> Result<Hypergraph, ArrangementError> {
    if count > k + 1 {
        return Err(ArrangementError::NotGeneralPosition(format!(
            "{count} lines need {} crossings per line, more than {k} points",
            count.saturating_sub(1)
        )));
    }
    let crossing = |i: usize, j: usize| {
        let (a, b) = (i.min(j), i.max(j));
        // Pairs (a, b) with a < b in lexicographic order.
        a * count - a * (a + 1) / 2 + (b - a - 1)
    };
    let crossings = count * count.saturating_sub(1) / 2;
    let private = k + 1 - count;
    let lines = (0..count)
        .map(|i| {
            let mut line: Vec<usize> = (0..count)
                .rev()
                .filter(|&j| j != i)
                .map(|j| crossing(i, j))
                .collect();
            line.extend((0..private).map(|t| crossings + i * private + t));
            line
        })
        .collect();
    line_arrangement(k, lines)
}

/// A `(v, b, k, r)`-configuration: `b` lines of `k` points each on `v`
/// points, every point on `r` lines, and two lines meeting at most once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    k: usize,
    r: usize,
    lines: Hypergraph,
}

impl Configuration {
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self, ArrangementError> {
        let bad = |s: String| Err(ArrangementError::NotConfiguration(s));
        let Some(k) = lines.first().map(Vec::len) else {
            return bad("no lines".into());
        };
        let h = build(k, lines)?;
        if h.n() > points {
            return bad(format!(
                "a line uses point {}, only {points} given",
                h.n() - 1
            ));
        }
        let h = Hypergraph::new(points, h.edges().to_vec())?;
        let r = h.degree(0);
        if let Some(p) = (0..points).find(|&p| h.degree(p) != r) {
            return bad(format!(
                "point {p} lies on {} lines, point 0 on {r}",
                h.degree(p)
            ));
        }
        if let Some((a, b)) = double_meet(&h) {
            return bad(format!("lines {a} and {b} share more than one point"));
        }
        Ok(Self { k, r, lines: h })
    }

    /// The configuration of nine points and nine lines named after Pappus.
    pub fn pappus() -> Self {
        // Points a..i are 0..8.
        let lines = [
            "adc", "ghi", "bef", "ahf", "bhc", "age", "bgd", "dif", "eic",
        ]
        .iter()
        .map(|l| l.bytes().map(|c| (c - b'a') as usize).collect())
        .collect();
        Self::new(9, lines).expect("Pappus configuration is valid")
    }

    /// The Fano plane with lines `{i, i+1, i+3} mod 7`.
    pub fn fano() -> Self {
        let lines = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        Self::new(7, lines).expect("Fano plane is valid")
    }

    pub fn points(&self) -> usize {
        self.lines.n()
    }

    pub fn line_count(&self) -> usize {
        self.lines.m()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.lines
    }
}

pub fn configuration_hypergraph(cfg: &Configuration) -> Hypergraph {
    cfg.lines.clone()
}
