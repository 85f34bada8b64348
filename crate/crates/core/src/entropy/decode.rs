use std::collections::BTreeSet;

use crate::hypergraph::{Hypergraph, ListAssignment, PartialColoring};

use super::{
    rank, shared_source, ConflictLog, ConflictRecord, Context, Encoding, RunError, Variant,
};

/// How the colors erased in one iteration are read back.
enum Restore {
    /// `v` kept its color; no conflict.
    Plus,
    /// Each erased `u` had the color `γ(u)` has now.
    Gamma(Vec<(usize, usize)>),
    /// Each erased `u` had the color of the vertex facing it in `Q` under
    /// `σ`; in the shared case `v` takes the color of `source`.
    Sequence {
        p: usize,
        q: usize,
        sigma: usize,
        erased: Vec<usize>,
        source: Option<usize>,
    },
}

struct Forward<'a, 'c> {
    ctx: &'c Context<'a>,
    iteration: usize,
}

impl Forward<'_, '_> {
    fn bad(&self, detail: impl Into<String>) -> RunError {
        RunError::InconsistentLog {
            iteration: self.iteration,
            detail: detail.into(),
        }
    }

    fn nth(&self, items: &[usize], x: usize, what: &str) -> Result<usize, RunError> {
        x.checked_sub(1)
            .and_then(|i| items.get(i).copied())
            .ok_or_else(|| self.bad(format!("{what} index {x} out of range")))
    }

    fn via_x(
        &self,
        v: usize,
        x_p: usize,
        x_q: usize,
        i: usize,
    ) -> Result<(usize, usize), RunError> {
        let h = self.ctx.h;
        let p = self.nth(h.edges_at(v), x_p, "x_P")?;
        if i == 0 || i >= self.ctx.k {
            return Err(self.bad(format!("difference size {i} impossible")));
        }
        let q = self.nth(&self.ctx.x_set(p, v, i), x_q, "x_Q")?;
        Ok((p, q))
    }

    fn shared(&self, v: usize, x_p: usize, x_q: usize) -> Result<(usize, usize), RunError> {
        let p = self.nth(self.ctx.h.edges_at(v), x_p, "x_P")?;
        let q = self.nth(&self.ctx.others_at(v, p), x_q, "x_Q")?;
        Ok((p, q))
    }

    /// `P \ (Q ∪ {w}) ∪ {v}` in increasing order.
    fn erased_shared(&self, p: usize, q: usize, w: usize, v: usize) -> Vec<usize> {
        let mut erased: Vec<usize> = self
            .ctx
            .h
            .difference(p, q)
            .into_iter()
            .filter(|&u| u != w)
            .collect();
        erased.push(v);
        erased.sort_unstable();
        erased
    }

    fn check_gamma(
        &self,
        gamma: &[(usize, usize)],
        erased: &[usize],
        allowed: impl Fn(usize) -> bool,
    ) -> Result<(), RunError> {
        let domain: Vec<usize> = gamma.iter().map(|&(u, _)| u).collect();
        if domain != erased {
            return Err(self.bad("mapping domain differs from the erased vertices"));
        }
        if let Some(&(u, t)) = gamma.iter().find(|&&(_, t)| !allowed(t)) {
            return Err(self.bad(format!(
                "vertex {u} refers to {t}, outside the reference edge"
            )));
        }
        Ok(())
    }

    /// Returns the erased vertices and how to restore them.
    fn step(&self, v: usize, record: &ConflictRecord) -> Result<(Vec<usize>, Restore), RunError> {
        let h = self.ctx.h;
        let variant = self.ctx.variant;
        match (record, variant) {
            (ConflictRecord::Plus, _) => Ok((Vec::new(), Restore::Plus)),
            (ConflictRecord::SetCase1 { x_p, x_q, gamma }, Variant::Sets) => {
                let (p, q) = self.via_x(v, *x_p, *x_q, gamma.len())?;
                let erased = h.difference(p, q);
                self.check_gamma(gamma, &erased, |t| h.contains(q, t))?;
                Ok((erased, Restore::Gamma(gamma.clone())))
            }
            (ConflictRecord::SetCase2 { x_p, x_q, gamma }, Variant::Sets) => {
                let (p, q) = self.shared(v, *x_p, *x_q)?;
                let w = h.difference(p, q)[0];
                let erased = self.erased_shared(p, q, w, v);
                self.check_gamma(gamma, &erased, |t| t != v && h.contains(q, t))?;
                Ok((erased, Restore::Gamma(gamma.clone())))
            }
            (ConflictRecord::Multiset { x_p, x_q, gamma }, Variant::Multisets) => {
                let (p, q) = self.via_x(v, *x_p, *x_q, gamma.len())?;
                let erased = h.difference(p, q);
                self.check_gamma(gamma, &erased, |t| h.contains(q, t) && !h.contains(p, t))?;
                let targets: BTreeSet<usize> = gamma.iter().map(|&(_, t)| t).collect();
                if targets.len() != gamma.len() {
                    return Err(self.bad("multiset mapping is not injective"));
                }
                Ok((erased, Restore::Gamma(gamma.clone())))
            }
            (
                ConflictRecord::SeqDisjoint {
                    encoding,
                    x_p,
                    x_q,
                    aux,
                    sigma,
                },
                Variant::Sequences(pi),
            ) => {
                let sigma = self.nth(&(0..pi.size()).collect::<Vec<_>>(), *sigma, "sigma")?;
                let (p, q) = match encoding {
                    Encoding::ViaX => {
                        let i = self.nth(&self.ctx.spectrum, *aux, "spectrum")?;
                        self.via_x(v, *x_p, *x_q, i)?
                    }
                    Encoding::ViaSharedVertex => {
                        let p = self.nth(h.edges_at(v), *x_p, "x_P")?;
                        let rest: Vec<usize> =
                            h.edge_set(p).iter().copied().filter(|&u| u != v).collect();
                        let v2 = self.nth(&rest, *aux, "shared vertex")?;
                        let q = self.nth(&self.ctx.others_at(v2, p), *x_q, "x_Q")?;
                        if h.contains(q, v) {
                            return Err(self.bad("second edge contains the colored vertex"));
                        }
                        (p, q)
                    }
                };
                let erased = h.difference(p, q);
                Ok((
                    erased.clone(),
                    Restore::Sequence {
                        p,
                        q,
                        sigma,
                        erased,
                        source: None,
                    },
                ))
            }
            (ConflictRecord::SeqShared { x_p, x_q, sigma }, Variant::Sequences(pi)) => {
                let sigma = self.nth(&(0..pi.size()).collect::<Vec<_>>(), *sigma, "sigma")?;
                let (p, q) = self.shared(v, *x_p, *x_q)?;
                let v2 = shared_source(h, pi.get(sigma), p, q, v)
                    .ok_or_else(|| self.bad("colored vertex missing from Q"))?;
                if v2 == v {
                    return Err(self.bad("permutation fixes the colored vertex"));
                }
                let w = if h.contains(q, v2) {
                    h.difference(p, q)[0]
                } else {
                    v2
                };
                let erased = self.erased_shared(p, q, w, v);
                Ok((
                    erased.clone(),
                    Restore::Sequence {
                        p,
                        q,
                        sigma,
                        erased,
                        source: Some(v2),
                    },
                ))
            }
            (record, _) => Err(self.bad(format!("record `{record}` does not fit this variant"))),
        }
    }
}

/// Recovers the draws `c_1, …, c_N` consumed by a run from its log and final
/// coloring. Every reconstruction step is checked; a mismatch means the log
/// was not produced by a run on the same instance.
pub fn decode(
    h: &Hypergraph,
    lists: &ListAssignment,
    variant: Variant<'_>,
    log: &ConflictLog,
    final_coloring: &PartialColoring,
) -> Result<Vec<usize>, RunError> {
    let ctx = Context::new(h, variant)?;
    let n = h.n();
    if lists.len() != n || final_coloring.len() != n {
        return Err(RunError::ListCount {
            expected: n,
            found: lists.len().min(final_coloring.len()),
        });
    }

    // Forward: the uncolored sets W_j depend only on W_{j−1} and T(j).
    let mut uncolored: BTreeSet<usize> = (0..n).collect();
    let mut steps = Vec::with_capacity(log.len());
    for (idx, record) in log.records.iter().enumerate() {
        let fw = Forward {
            ctx: &ctx,
            iteration: idx + 1,
        };
        let v = *uncolored
            .first()
            .ok_or_else(|| fw.bad("record after completion"))?;
        let (erased, restore) = fw.step(v, record)?;
        if let Some(&u) = erased.iter().find(|&&u| u != v && uncolored.contains(&u)) {
            return Err(fw.bad(format!("vertex {u} erased while already uncolored")));
        }
        if !matches!(restore, Restore::Plus) && !erased.contains(&v) {
            return Err(fw.bad("conflict record keeps the new color"));
        }
        uncolored.extend(erased);
        if matches!(restore, Restore::Plus) {
            uncolored.remove(&v);
        }
        steps.push((v, restore));
    }
    if let Some(u) = (0..n).find(|&u| final_coloring.is_colored(u) == uncolored.contains(&u)) {
        return Err(RunError::InconsistentLog {
            iteration: log.len(),
            detail: format!("final coloring disagrees with the log at vertex {u}"),
        });
    }

    // Backward: φ_{j−1} and c_j from φ_j and T(j).
    let mut phi = final_coloring.clone();
    let mut draws = vec![0; steps.len()];
    for (idx, (v, restore)) in steps.iter().enumerate().rev() {
        let v = *v;
        let bad = |detail: String| RunError::InconsistentLog {
            iteration: idx + 1,
            detail,
        };
        let read = |phi: &PartialColoring, t: usize| {
            phi.get(t)
                .ok_or_else(|| bad(format!("reference vertex {t} is uncolored")))
        };
        let restored: Vec<(usize, u64)> = match restore {
            Restore::Plus => vec![(v, read(&phi, v)?)],
            Restore::Gamma(gamma) => gamma
                .iter()
                .map(|&(u, t)| Ok((u, read(&phi, t)?)))
                .collect::<Result<_, RunError>>()?,
            Restore::Sequence {
                p,
                q,
                sigma,
                erased,
                source,
            } => {
                let perm = match ctx.variant {
                    Variant::Sequences(pi) => pi.get(*sigma),
                    _ => unreachable!("sequence records are rejected for other variants"),
                };
                let (pe, qe) = (h.edge(*p), h.edge(*q));
                erased
                    .iter()
                    .map(|&u| {
                        if u == v {
                            if let Some(s) = source {
                                return Ok((u, read(&phi, *s)?));
                            }
                        }
                        let j = (0..pe.len())
                            .find(|&j| pe[perm[j]] == u)
                            .ok_or_else(|| bad(format!("vertex {u} not on P")))?;
                        if qe[j] == u {
                            return Err(bad(format!("vertex {u} faces itself")));
                        }
                        Ok((u, read(&phi, qe[j])?))
                    })
                    .collect::<Result<_, RunError>>()?
            }
        };
        for &(u, c) in &restored {
            if u == v {
                let pos = lists
                    .position(v, c)
                    .ok_or_else(|| bad(format!("color {c} is not on the list of vertex {v}")))?;
                draws[idx] = pos + 1;
            } else {
                if phi.is_colored(u) {
                    return Err(bad(format!("vertex {u} should be uncolored")));
                }
                phi.set(u, c);
            }
        }
        phi.unset(v);
        if rank(&restored.iter().map(|&(u, _)| u).collect::<Vec<_>>(), v).is_none() {
            return Err(bad("colored vertex missing from the record".into()));
        }
    }
    if phi.colored_count() != 0 {
        return Err(RunError::InconsistentLog {
            iteration: 0,
            detail: "vertices remain colored before the first iteration".into(),
        });
    }
    Ok(draws)
}
