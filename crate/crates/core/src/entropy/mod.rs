//! The randomized recoloring algorithm and its invertible history.
//!
//! Each iteration colors the least uncolored vertex `v` with the `c_j`-th
//! color of its list. If this creates a pair of intersecting edges that can
//! no longer be told apart, some vertices are uncolored again and a record
//! is written that, together with the current coloring, determines both the
//! uncolored vertices' former colors and `c_j`. [`decode`] replays the log
//! backwards and recovers every draw, which is what makes the run terminate
//! quickly once lists are long enough.

mod decode;
mod draws;
mod log;
mod stats;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::verify::{pair_violates_partial, similar_sigma};
use crate::hypergraph::{
    similar_under, verify, verify_partial, verify_partial_sequences, verify_sequences, Color,
    Hypergraph, HypergraphError, ListAssignment, ListError, Mode, PartialColoring,
    PermutationFamily,
};

pub use decode::decode;
pub use draws::DrawSequence;
pub use log::{ConflictLog, ConflictRecord, Encoding, TraceError};
pub use stats::{iteration_stats, IterationStats};

/// What counts as two edges being told apart.
#[derive(Debug, Clone, Copy)]
pub enum Variant<'a> {
    Sets,
    Multisets,
    Sequences(&'a PermutationFamily),
}

impl From<Mode> for Variant<'static> {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Sets => Variant::Sets,
            Mode::Multisets => Variant::Multisets,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("{found} lists given for {expected} vertices")]
    ListCount { expected: usize, found: usize },
    #[error("list of vertex {vertex} has {len} colors, the draws need {needed}")]
    ListTooShort {
        vertex: usize,
        len: usize,
        needed: usize,
    },
    #[error("draw range must be at least 1")]
    EmptyRange,
    #[error("draw {index} is {value}, outside 1..={r}")]
    DrawOutOfRange {
        index: usize,
        value: usize,
        r: usize,
    },
    #[error("explicit draws ran out at iteration {iteration}")]
    DrawExhausted { iteration: usize },
    #[error("permutations act on {found} positions, edges have {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invariant violated at iteration {iteration}: {detail}")]
    InvariantViolated { iteration: usize, detail: String },
    #[error("inconsistent log at record {iteration}: {detail}")]
    InconsistentLog { iteration: usize, detail: String },
}

impl From<ListError> for RunError {
    fn from(e: ListError) -> Self {
        match e {
            ListError::TooShort {
                vertex,
                len,
                needed,
            } => RunError::ListTooShort {
                vertex,
                len,
                needed,
            },
            ListError::WrongCount { expected, found } => RunError::ListCount { expected, found },
            other => RunError::InvariantViolated {
                iteration: 0,
                detail: other.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Stop with [`Outcome::Exhausted`] after this many iterations.
    pub max_iters: Option<u64>,
    /// Re-verify the whole partial coloring after every iteration.
    pub audit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Complete(PartialColoring),
    Exhausted(PartialColoring),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunResult {
    pub outcome: Outcome,
    pub log: ConflictLog,
    pub iterations: u64,
}

impl RunResult {
    pub fn is_complete(&self) -> bool {
        matches!(self.outcome, Outcome::Complete(_))
    }

    /// The final (possibly partial) coloring.
    pub fn coloring(&self) -> &PartialColoring {
        match &self.outcome {
            Outcome::Complete(c) | Outcome::Exhausted(c) => c,
        }
    }
}

/// 1-based position of `x` in `items`.
fn rank(items: &[usize], x: usize) -> Option<usize> {
    items.iter().position(|&y| y == x).map(|p| p + 1)
}

/// Structural data shared by the encoder and the decoder.
pub(crate) struct Context<'a> {
    h: &'a Hypergraph,
    variant: Variant<'a>,
    k: usize,
    delta: usize,
    spectrum: Vec<usize>,
}

impl<'a> Context<'a> {
    fn new(h: &'a Hypergraph, variant: Variant<'a>) -> Result<Self, RunError> {
        let (k, spectrum) = match h.uniformity() {
            Ok(k) => (k, h.difference_spectrum()?),
            Err(HypergraphError::NoEdges) => (0, Vec::new()),
            Err(e) => return Err(e.into()),
        };
        if let Variant::Sequences(pi) = variant {
            if h.m() > 0 && pi.arity() != k {
                return Err(RunError::ArityMismatch {
                    expected: k,
                    found: pi.arity(),
                });
            }
        }
        Ok(Self {
            h,
            variant,
            k,
            delta: h.max_degree(),
            spectrum,
        })
    }

    /// `X = {K : |P \ K| = i, v ∉ K}` in edge order.
    fn x_set(&self, p: usize, v: usize, i: usize) -> Vec<usize> {
        self.h
            .intersecting(p)
            .iter()
            .copied()
            .filter(|&e| !self.h.contains(e, v) && self.h.difference_size(p, e) == i)
            .collect()
    }

    /// `E(u) \ {P}`.
    fn others_at(&self, u: usize, p: usize) -> Vec<usize> {
        self.h
            .edges_at(u)
            .iter()
            .copied()
            .filter(|&e| e != p)
            .collect()
    }

    /// `⌊(Δ−1)(k−1)/(k−i)⌋`, the size limit of `X`.
    fn x_limit(&self, i: usize) -> usize {
        (self.delta.saturating_sub(1) * (self.k - 1)) / (self.k - i)
    }

    /// Locating `Q` through `X` costs `Δ·⌊(Δ−1)(k−1)/(k−i)⌋·|I|` choices,
    /// through a shared vertex `Δ(Δ−1)(k−1)`; the cheaper one is used.
    fn encoding_for(&self, i: usize) -> Encoding {
        let via_x = self.x_limit(i) * self.spectrum.len();
        let via_shared = self.delta.saturating_sub(1) * (self.k - 1);
        if via_x <= via_shared {
            Encoding::ViaX
        } else {
            Encoding::ViaSharedVertex
        }
    }

    fn violated(&self, phi: &PartialColoring, a: usize, b: usize) -> bool {
        match self.variant {
            Variant::Sets => pair_violates_partial(self.h, phi, Mode::Sets, a, b),
            Variant::Multisets => pair_violates_partial(self.h, phi, Mode::Multisets, a, b),
            Variant::Sequences(pi) => similar_sigma(self.h, pi, phi, a, b).is_some(),
        }
    }

    /// The least violating pair `(a, b)`, `a < b`, among pairs through `v`.
    fn find_conflict(&self, phi: &PartialColoring, v: usize) -> Option<(usize, usize)> {
        let pairs: BTreeSet<(usize, usize)> = self
            .h
            .edges_at(v)
            .iter()
            .flat_map(|&a| {
                self.h
                    .intersecting(a)
                    .iter()
                    .map(move |&b| (a.min(b), a.max(b)))
            })
            .collect();
        pairs.into_iter().find(|&(a, b)| self.violated(phi, a, b))
    }
}

struct Encoder<'a, 'c> {
    ctx: &'c Context<'a>,
    iteration: usize,
}

impl Encoder<'_, '_> {
    fn broken(&self, detail: impl Into<String>) -> RunError {
        RunError::InvariantViolated {
            iteration: self.iteration,
            detail: detail.into(),
        }
    }

    fn check(&self, ok: bool, detail: &str) -> Result<(), RunError> {
        if ok {
            Ok(())
        } else {
            Err(self.broken(detail))
        }
    }

    fn color(&self, phi: &PartialColoring, u: usize) -> Result<Color, RunError> {
        phi.get(u)
            .ok_or_else(|| self.broken(format!("vertex {u} unexpectedly uncolored")))
    }

    /// `(x_P, X-based x_Q)` for a conflict with `v ∈ P \ Q`.
    fn locate_via_x(
        &self,
        v: usize,
        p: usize,
        q: usize,
        i: usize,
    ) -> Result<(usize, usize), RunError> {
        let h = self.ctx.h;
        let x_p = rank(h.edges_at(v), p).ok_or_else(|| self.broken("P does not contain v"))?;
        let x_q = rank(&self.ctx.x_set(p, v, i), q).ok_or_else(|| self.broken("Q not in X"))?;
        self.check(x_p <= self.ctx.delta, "x_P exceeds Δ")?;
        self.check(
            x_q <= self.ctx.x_limit(i),
            "x_Q exceeds the size limit of X",
        )?;
        Ok((x_p, x_q))
    }

    /// `(x_P, x_Q)` for a conflict with `v ∈ P ∩ Q`.
    fn locate_shared(&self, v: usize, p: usize, q: usize) -> Result<(usize, usize), RunError> {
        let h = self.ctx.h;
        let x_p = rank(h.edges_at(v), p).ok_or_else(|| self.broken("P does not contain v"))?;
        let x_q = rank(&self.ctx.others_at(v, p), q)
            .ok_or_else(|| self.broken("Q does not contain v"))?;
        self.check(x_p <= self.ctx.delta, "x_P exceeds Δ")?;
        self.check(x_q < self.ctx.delta, "x_Q exceeds Δ−1")?;
        Ok((x_p, x_q))
    }

    /// Maps each vertex of `domain` to the least colored vertex of
    /// `targets` carrying the same color.
    fn gamma(
        &self,
        phi: &PartialColoring,
        domain: &[usize],
        targets: &[usize],
    ) -> Result<Vec<(usize, usize)>, RunError> {
        domain
            .iter()
            .map(|&u| {
                let c = self.color(phi, u)?;
                let t = targets
                    .iter()
                    .copied()
                    .find(|&t| phi.get(t) == Some(c))
                    .ok_or_else(|| self.broken(format!("no color reference for vertex {u}")))?;
                Ok((u, t))
            })
            .collect()
    }

    fn resolve(
        &self,
        phi: &mut PartialColoring,
        v: usize,
        (a, b): (usize, usize),
    ) -> Result<ConflictRecord, RunError> {
        let h = self.ctx.h;
        let (in_a, in_b) = (h.contains(a, v), h.contains(b, v));
        let (p, q) = if in_b && !in_a { (b, a) } else { (a, b) };
        let shared = in_a && in_b;
        let (record, uncolor) = match self.ctx.variant {
            Variant::Sets if !shared => {
                let diff = h.difference(p, q);
                let (x_p, x_q) = self.locate_via_x(v, p, q, diff.len())?;
                let gamma = self.gamma(phi, &diff, h.edge_set(q))?;
                (ConflictRecord::SetCase1 { x_p, x_q, gamma }, diff)
            }
            Variant::Sets => {
                let c = self.color(phi, v)?;
                let has =
                    |x: usize, y: usize| h.difference(x, y).iter().any(|&u| phi.get(u) == Some(c));
                let (in_pq, in_qp) = (has(a, b), has(b, a));
                self.check(in_pq != in_qp, "color of v lies on both or neither side")?;
                // Orient so that φ(v) appears on Q \ P.
                let (p, q) = if in_qp { (a, b) } else { (b, a) };
                let diff = h.difference(p, q);
                let w = diff[0];
                let mut domain: Vec<usize> = diff.into_iter().filter(|&u| u != w).collect();
                domain.push(v);
                domain.sort_unstable();
                let (x_p, x_q) = self.locate_shared(v, p, q)?;
                let targets: Vec<usize> =
                    h.edge_set(q).iter().copied().filter(|&t| t != v).collect();
                let gamma = self.gamma(phi, &domain, &targets)?;
                (ConflictRecord::SetCase2 { x_p, x_q, gamma }, domain)
            }
            Variant::Multisets => {
                self.check(!shared, "multiset conflict through a shared vertex")?;
                let by_color = |mut side: Vec<usize>| -> Result<Vec<(Color, usize)>, RunError> {
                    side.iter_mut()
                        .map(|u| Ok((self.color(phi, *u)?, *u)))
                        .collect::<Result<Vec<_>, _>>()
                        .map(|mut s| {
                            s.sort_unstable();
                            s
                        })
                };
                let diff = h.difference(p, q);
                let from = by_color(diff.clone())?;
                let to = by_color(h.difference(q, p))?;
                self.check(
                    from.len() == to.len() && from.iter().zip(&to).all(|(x, y)| x.0 == y.0),
                    "multisets of the differences are not equal",
                )?;
                let mut gamma: Vec<(usize, usize)> =
                    from.iter().zip(&to).map(|(x, y)| (x.1, y.1)).collect();
                gamma.sort_unstable();
                let (x_p, x_q) = self.locate_via_x(v, p, q, diff.len())?;
                (ConflictRecord::Multiset { x_p, x_q, gamma }, diff)
            }
            Variant::Sequences(pi) => {
                let sigma = pi
                    .iter()
                    .position(|s| similar_under(h.edge(p), h.edge(q), s, phi))
                    .ok_or_else(|| self.broken("no permutation witnesses the conflict"))?;
                self.resolve_sequence(v, p, q, sigma, shared, pi)?
            }
        };
        for u in uncolor {
            phi.unset(u);
        }
        Ok(record)
    }

    #[allow(clippy::too_many_arguments)]
    fn resolve_sequence(
        &self,
        v: usize,
        p: usize,
        q: usize,
        sigma: usize,
        shared: bool,
        pi: &PermutationFamily,
    ) -> Result<(ConflictRecord, Vec<usize>), RunError> {
        let h = self.ctx.h;
        let diff = h.difference(p, q);
        if !shared {
            let i = diff.len();
            let record = match self.ctx.encoding_for(i) {
                Encoding::ViaX => {
                    let (x_p, x_q) = self.locate_via_x(v, p, q, i)?;
                    let aux = rank(&self.ctx.spectrum, i)
                        .ok_or_else(|| self.broken("difference size outside the spectrum"))?;
                    ConflictRecord::SeqDisjoint {
                        encoding: Encoding::ViaX,
                        x_p,
                        x_q,
                        aux,
                        sigma: sigma + 1,
                    }
                }
                Encoding::ViaSharedVertex => {
                    let x_p = rank(h.edges_at(v), p)
                        .ok_or_else(|| self.broken("P does not contain v"))?;
                    let v2 = h.intersection(p, q)[0];
                    let rest: Vec<usize> =
                        h.edge_set(p).iter().copied().filter(|&u| u != v).collect();
                    let aux =
                        rank(&rest, v2).ok_or_else(|| self.broken("shared vertex not in P"))?;
                    let x_q = rank(&self.ctx.others_at(v2, p), q)
                        .ok_or_else(|| self.broken("Q does not contain the shared vertex"))?;
                    self.check(x_p <= self.ctx.delta, "x_P exceeds Δ")?;
                    self.check(x_q < self.ctx.delta, "x_Q exceeds Δ−1")?;
                    ConflictRecord::SeqDisjoint {
                        encoding: Encoding::ViaSharedVertex,
                        x_p,
                        x_q,
                        aux,
                        sigma: sigma + 1,
                    }
                }
            };
            return Ok((record, diff));
        }
        let (x_p, x_q) = self.locate_shared(v, p, q)?;
        let v2 =
            shared_source(h, pi.get(sigma), p, q, v).ok_or_else(|| self.broken("v is not on Q"))?;
        self.check(v2 != v, "conflict does not depend on the color of v")?;
        let w = if h.contains(q, v2) { diff[0] } else { v2 };
        let mut domain: Vec<usize> = diff.into_iter().filter(|&u| u != w).collect();
        domain.push(v);
        domain.sort_unstable();
        Ok((
            ConflictRecord::SeqShared {
                x_p,
                x_q,
                sigma: sigma + 1,
            },
            domain,
        ))
    }
}

/// The vertex of `P` that `σ` places at the position `v` occupies in `Q`.
pub(crate) fn shared_source(
    h: &Hypergraph,
    sigma: &[usize],
    p: usize,
    q: usize,
    v: usize,
) -> Option<usize> {
    let j = h.edge(q).iter().position(|&u| u == v)?;
    Some(h.edge(p)[sigma[j]])
}

fn run_variant(
    h: &Hypergraph,
    lists: &ListAssignment,
    variant: Variant<'_>,
    draws: &DrawSequence,
    options: RunOptions,
) -> Result<RunResult, RunError> {
    let ctx = Context::new(h, variant)?;
    if lists.len() != h.n() {
        return Err(RunError::ListCount {
            expected: h.n(),
            found: lists.len(),
        });
    }
    let lists = lists.truncated(draws.range())?;
    let mut phi = PartialColoring::empty(h.n());
    let mut log = ConflictLog::default();
    let mut stream = draws.stream();

    while let Some(v) = phi.first_uncolored() {
        let iteration = log.len() + 1;
        if options.max_iters.is_some_and(|cap| log.len() as u64 >= cap) {
            return Ok(RunResult {
                iterations: log.len() as u64,
                outcome: Outcome::Exhausted(phi),
                log,
            });
        }
        let c = stream.next().ok_or(RunError::DrawExhausted { iteration })?;
        phi.set(v, lists.list(v)[c - 1]);
        let record = match ctx.find_conflict(&phi, v) {
            None => ConflictRecord::Plus,
            Some(pair) => Encoder {
                ctx: &ctx,
                iteration,
            }
            .resolve(&mut phi, v, pair)?,
        };
        log.records.push(record);
        if options.audit {
            let check = match variant {
                Variant::Sets => verify_partial(h, &phi, Mode::Sets),
                Variant::Multisets => verify_partial(h, &phi, Mode::Multisets),
                Variant::Sequences(pi) => verify_partial_sequences(h, pi, &phi),
            };
            if let Err(violation) = check {
                return Err(RunError::InvariantViolated {
                    iteration,
                    detail: violation.to_string(),
                });
            }
        }
    }

    let final_check = match variant {
        Variant::Sets => verify(h, &phi, Mode::Sets),
        Variant::Multisets => verify(h, &phi, Mode::Multisets),
        Variant::Sequences(pi) => verify_sequences(h, pi, &phi),
    };
    if let Err(e) = final_check {
        return Err(RunError::InvariantViolated {
            iteration: log.len(),
            detail: e.to_string(),
        });
    }
    Ok(RunResult {
        iterations: log.len() as u64,
        outcome: Outcome::Complete(phi),
        log,
    })
}

/// Runs the algorithm distinguishing intersecting edges by sets or
/// multisets. Lists are truncated to the draw range `R`.
pub fn run(
    h: &Hypergraph,
    lists: &ListAssignment,
    mode: Mode,
    draws: &DrawSequence,
    options: RunOptions,
) -> Result<RunResult, RunError> {
    run_variant(h, lists, mode.into(), draws, options)
}

/// Runs the algorithm distinguishing intersecting edges by their color
/// sequences up to the permutations in `pi`.
pub fn run_sequences(
    h: &Hypergraph,
    pi: &PermutationFamily,
    lists: &ListAssignment,
    draws: &DrawSequence,
    options: RunOptions,
) -> Result<RunResult, RunError> {
    run_variant(h, lists, Variant::Sequences(pi), draws, options)
}

/// Dispatches on the variant.
pub fn run_with(
    h: &Hypergraph,
    lists: &ListAssignment,
    variant: Variant<'_>,
    draws: &DrawSequence,
    options: RunOptions,
) -> Result<RunResult, RunError> {
    run_variant(h, lists, variant, draws, options)
}
