use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Color, Hypergraph, PartialColoring, PermutationFamily};

/// Whether intersecting edges must differ as color sets or as color multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sets,
    Multisets,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Sets => f.write_str("sets"),
            Mode::Multisets => f.write_str("multisets"),
        }
    }
}

/// A pair of intersecting edges that are not distinguished; `sigma` is the
/// index of the witnessing permutation in sequence mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub p: usize,
    pub q: usize,
    pub sigma: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edges {} and {} are not distinguished",
            self.p + 1,
            self.q + 1
        )?;
        if let Some(s) = self.sigma {
            write!(f, " (permutation {})", s + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {vertex} is uncolored")]
    IncompleteColoring { vertex: usize },
    #[error("coloring covers {found} vertices, hypergraph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("permutations act on {expected} positions but edge {edge} has {found} vertices")]
    ArityMismatch {
        expected: usize,
        edge: usize,
        found: usize,
    },
    #[error("{0}")]
    Violation(Violation),
}

fn check_complete(h: &Hypergraph, phi: &PartialColoring) -> Result<(), VerifyError> {
    if phi.len() != h.n() {
        return Err(VerifyError::LengthMismatch {
            expected: h.n(),
            found: phi.len(),
        });
    }
    match phi.first_uncolored() {
        Some(vertex) => Err(VerifyError::IncompleteColoring { vertex }),
        None => Ok(()),
    }
}

fn edge_colors(h: &Hypergraph, phi: &PartialColoring, e: usize, mode: Mode) -> Vec<Color> {
    let mut colors: Vec<Color> = h.edge_set(e).iter().filter_map(|&v| phi.get(v)).collect();
    colors.sort_unstable();
    if mode == Mode::Sets {
        colors.dedup();
    }
    colors
}

/// Checks that every two distinct intersecting edges receive different color
/// sets (or multisets). Reports the least violating pair in edge order.
pub fn verify(h: &Hypergraph, phi: &PartialColoring, mode: Mode) -> Result<(), VerifyError> {
    check_complete(h, phi)?;
    let colors: Vec<Vec<Color>> = (0..h.m()).map(|e| edge_colors(h, phi, e, mode)).collect();
    for p in 0..h.m() {
        for &q in h.intersecting(p) {
            if q > p && colors[p] == colors[q] {
                return Err(VerifyError::Violation(Violation { p, q, sigma: None }));
            }
        }
    }
    Ok(())
}

/// Whether the pair `(p, q)` breaks the extension condition for a partial
/// coloring. Only pairs whose symmetric difference is fully colored are
/// constrained.
pub(crate) fn pair_violates_partial(
    h: &Hypergraph,
    phi: &PartialColoring,
    mode: Mode,
    p: usize,
    q: usize,
) -> bool {
    let outside = |a: usize, b: usize| h.edge_set(a).iter().filter(move |&&v| !h.contains(b, v));
    if outside(p, q)
        .chain(outside(q, p))
        .any(|&v| !phi.is_colored(v))
    {
        return false;
    }
    match mode {
        Mode::Sets => edge_colors(h, phi, p, Mode::Sets) == edge_colors(h, phi, q, Mode::Sets),
        Mode::Multisets => {
            let mut a: Vec<Color> = outside(p, q).filter_map(|&v| phi.get(v)).collect();
            let mut b: Vec<Color> = outside(q, p).filter_map(|&v| phi.get(v)).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
    }
}

/// Checks that `phi` can still be extended: for every intersecting pair
/// whose symmetric difference is colored, the colors on the colored parts
/// differ as sets (or the multisets on `P \ Q` and `Q \ P` differ).
pub fn verify_partial(h: &Hypergraph, phi: &PartialColoring, mode: Mode) -> Result<(), Violation> {
    for p in 0..h.m() {
        for &q in h.intersecting(p) {
            if q > p && pair_violates_partial(h, phi, mode, p, q) {
                return Err(Violation { p, q, sigma: None });
            }
        }
    }
    Ok(())
}

/// `σ(P)` is `φ`-similar to `Q` when at every position both entries are the
/// same vertex, or both are colored with the same color.
pub fn similar_under(p: &[usize], q: &[usize], sigma: &[usize], phi: &PartialColoring) -> bool {
    if p.len() != q.len() || sigma.len() != q.len() {
        return false;
    }
    sigma.iter().zip(q).all(|(&src, &qv)| {
        let pv = p[src];
        pv == qv
            || match (phi.get(pv), phi.get(qv)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
    })
}

/// Index of the first permutation making `σ(P)` similar to `Q`.
pub(crate) fn similar_sigma(
    h: &Hypergraph,
    pi: &PermutationFamily,
    phi: &PartialColoring,
    p: usize,
    q: usize,
) -> Option<usize> {
    pi.iter()
        .position(|sigma| similar_under(h.edge(p), h.edge(q), sigma, phi))
}

fn check_arity(h: &Hypergraph, pi: &PermutationFamily) -> Result<(), VerifyError> {
    for e in 0..h.m() {
        if h.edge(e).len() != pi.arity() {
            return Err(VerifyError::ArityMismatch {
                expected: pi.arity(),
                edge: e,
                found: h.edge(e).len(),
            });
        }
    }
    Ok(())
}

/// Checks that no two intersecting edges carry `Π`-compatible color
/// sequences.
pub fn verify_sequences(
    h: &Hypergraph,
    pi: &PermutationFamily,
    phi: &PartialColoring,
) -> Result<(), VerifyError> {
    check_arity(h, pi)?;
    check_complete(h, phi)?;
    let seq = |e: usize| -> Vec<Color> { h.edge(e).iter().filter_map(|&v| phi.get(v)).collect() };
    for p in 0..h.m() {
        let ps = seq(p);
        for &q in h.intersecting(p) {
            if q <= p {
                continue;
            }
            let qs = seq(q);
            let hit = pi
                .iter()
                .position(|sigma| sigma.iter().zip(&qs).all(|(&src, c)| ps[src] == *c));
            if let Some(s) = hit {
                return Err(VerifyError::Violation(Violation {
                    p,
                    q,
                    sigma: Some(s),
                }));
            }
        }
    }
    Ok(())
}

/// Checks that no intersecting pair is already `φ`-similar, i.e. that the
/// partial coloring can still be extended to a `Π`-distinguishing one.
pub fn verify_partial_sequences(
    h: &Hypergraph,
    pi: &PermutationFamily,
    phi: &PartialColoring,
) -> Result<(), Violation> {
    for p in 0..h.m() {
        for &q in h.intersecting(p) {
            if q > p {
                if let Some(s) = similar_sigma(h, pi, phi, p, q) {
                    return Err(Violation {
                        p,
                        q,
                        sigma: Some(s),
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Color = 1;
    const B: Color = 2;
    const C: Color = 3;
    const D: Color = 4;

    fn h1() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap()
    }

    fn partial(n: usize, pairs: &[(usize, Color)]) -> PartialColoring {
        let mut phi = PartialColoring::empty(n);
        for &(v, c) in pairs {
            phi.set(v, c);
        }
        phi
    }

    fn violation(p: usize, q: usize) -> VerifyError {
        VerifyError::Violation(Violation { p, q, sigma: None })
    }

    #[test]
    fn complete_verification_examples() {
        let h = h1();
        let same = PartialColoring::from_complete(&[A, B, C, A]);
        assert_eq!(verify(&h, &same, Mode::Sets), Err(violation(0, 1)));
        let distinct = PartialColoring::from_complete(&[A, B, C, D]);
        assert_eq!(verify(&h, &distinct, Mode::Sets), Ok(()));
        let two = PartialColoring::from_complete(&[A, A, B, B]);
        assert_eq!(verify(&h, &two, Mode::Multisets), Ok(()));
        assert_eq!(verify(&h, &two, Mode::Sets), Err(violation(0, 1)));
    }

    #[test]
    fn incomplete_coloring_is_an_error() {
        let h = h1();
        let phi = partial(4, &[(0, A), (1, B), (3, C)]);
        assert_eq!(
            verify(&h, &phi, Mode::Sets),
            Err(VerifyError::IncompleteColoring { vertex: 2 })
        );
    }

    #[test]
    fn partial_verification_examples() {
        let h = h1();
        let aa = partial(4, &[(0, A), (3, A)]);
        assert_eq!(
            verify_partial(&h, &aa, Mode::Sets),
            Err(Violation {
                p: 0,
                q: 1,
                sigma: None
            })
        );
        assert_eq!(
            verify_partial(&h, &aa, Mode::Multisets),
            Err(Violation {
                p: 0,
                q: 1,
                sigma: None
            })
        );
        let ab = partial(4, &[(0, A), (3, B)]);
        assert_eq!(verify_partial(&h, &ab, Mode::Sets), Ok(()));
        // The symmetric difference is not fully colored, so nothing is checked.
        let only_one = partial(4, &[(0, A), (1, A), (2, A)]);
        assert_eq!(verify_partial(&h, &only_one, Mode::Sets), Ok(()));
    }

    #[test]
    fn sequence_verification_examples() {
        let h = h1();
        let id = PermutationFamily::identity(3);
        let phi = PartialColoring::from_complete(&[A, B, C, A]);
        assert_eq!(verify_sequences(&h, &id, &phi), Ok(()));
        for x in [A, B, C, D] {
            let phi = PartialColoring::from_complete(&[A, B, C, x]);
            assert_eq!(verify_sequences(&h, &id, &phi), Ok(()));
        }
        // Edges (1,2,3) and (2,4,3) read a,a,a and a,a,a positionwise.
        let g = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 3, 2]]).unwrap();
        let mono = PartialColoring::from_complete(&[A, A, A, A]);
        assert_eq!(
            verify_sequences(&g, &id, &mono),
            Err(VerifyError::Violation(Violation {
                p: 0,
                q: 1,
                sigma: Some(0)
            }))
        );
        let wrong = PermutationFamily::identity(2);
        assert!(matches!(
            verify_sequences(&h, &wrong, &phi),
            Err(VerifyError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn similarity_examples() {
        let id: Vec<usize> = (0..3).collect();
        let empty = PartialColoring::empty(6);
        assert!(similar_under(&[0, 1, 2], &[0, 1, 2], &id, &empty));
        // P = (0, 1, 2), Q = (3, 1, 4): position 1 shares a vertex, the
        // other positions need matching colors.
        let mut phi = partial(6, &[(0, A), (3, A), (2, B)]);
        assert!(!similar_under(&[0, 1, 2], &[3, 1, 4], &id, &phi));
        phi.set(4, B);
        assert!(similar_under(&[0, 1, 2], &[3, 1, 4], &id, &phi));
        phi.set(4, C);
        assert!(!similar_under(&[0, 1, 2], &[3, 1, 4], &id, &phi));
    }

    #[test]
    fn similarity_under_reversal() {
        // σ(P) = (2, 1, 0) compared with Q = (5, 1, 4).
        let rev = [2, 1, 0];
        let phi = partial(6, &[(2, A), (5, A), (0, B), (4, B)]);
        assert!(similar_under(&[0, 1, 2], &[5, 1, 4], &rev, &phi));
        assert!(!similar_under(&[0, 1, 2], &[5, 1, 4], &[0, 1, 2], &phi));
    }
}
