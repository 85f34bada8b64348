//! Exhaustive reference searches, written independently of the algorithm
//! and the verifiers they are used to check.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::entropy::Variant;
use crate::graph::{is_nice, Graph};
use crate::hypergraph::{Color, Hypergraph, ListAssignment, Mode};

/// Largest number of list-respecting colorings [`brute_force_coloring`]
/// will consider.
pub const MAX_SEARCH_SPACE: u128 = 10_000_000;

/// Largest edge count [`brute_force_gndi`] accepts.
pub const MAX_GNDI_EDGES: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space of {size} colorings exceeds {max}")]
    SearchSpaceTooLarge { size: u128, max: u128 },
    #[error("graph has {m} edges, at most {max} supported")]
    TooLarge { m: usize, max: usize },
    #[error("graph has an isolated edge, so no labeling distinguishes its ends")]
    NotNice,
    #[error("{found} lists given for {expected} vertices")]
    ListCount { expected: usize, found: usize },
    #[error("permutations act on {found} positions, edge {edge} has {expected}")]
    ArityMismatch {
        edge: usize,
        expected: usize,
        found: usize,
    },
}

/// Whether two edges are told apart under `variant`.
fn distinct(p: &[usize], q: &[usize], colors: &[Color], variant: Variant<'_>) -> bool {
    let collect = |e: &[usize]| -> Vec<Color> { e.iter().map(|&v| colors[v]).collect() };
    match variant {
        Variant::Sets => {
            let a: BTreeSet<Color> = collect(p).into_iter().collect();
            let b: BTreeSet<Color> = collect(q).into_iter().collect();
            a != b
        }
        Variant::Multisets => {
            let (mut a, mut b) = (collect(p), collect(q));
            a.sort_unstable();
            b.sort_unstable();
            a != b
        }
        Variant::Sequences(pi) => {
            let (a, b) = (collect(p), collect(q));
            !pi.iter()
                .any(|sigma| sigma.iter().zip(&b).all(|(&src, c)| a[src] == *c))
        }
    }
}

/// The lexicographically least list coloring (vertex 0 first, each vertex
/// trying its list in order) in which every two intersecting edges are told
/// apart, or `None`.
pub fn brute_force_coloring(
    h: &Hypergraph,
    lists: &ListAssignment,
    variant: Variant<'_>,
) -> Result<Option<Vec<Color>>, OracleError> {
    if lists.len() != h.n() {
        return Err(OracleError::ListCount {
            expected: h.n(),
            found: lists.len(),
        });
    }
    if let Variant::Sequences(pi) = variant {
        if let Some(edge) = (0..h.m()).find(|&e| h.edge(e).len() != pi.arity()) {
            return Err(OracleError::ArityMismatch {
                edge,
                expected: h.edge(edge).len(),
                found: pi.arity(),
            });
        }
    }
    let size = lists.product_size();
    if size > MAX_SEARCH_SPACE {
        return Err(OracleError::SearchSpaceTooLarge {
            size,
            max: MAX_SEARCH_SPACE,
        });
    }
    // Pairs are checked as soon as their last vertex is colored.
    let mut closing: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h.n()];
    for p in 0..h.m() {
        for q in p + 1..h.m() {
            let (a, b) = (h.edge(p), h.edge(q));
            if a.iter().any(|v| b.contains(v)) {
                let last = a
                    .iter()
                    .chain(b)
                    .copied()
                    .max()
                    .expect("edges are nonempty");
                closing[last].push((p, q));
            }
        }
    }
    let mut colors = vec![0; h.n()];
    fn go(
        v: usize,
        h: &Hypergraph,
        lists: &ListAssignment,
        variant: Variant<'_>,
        closing: &[Vec<(usize, usize)>],
        colors: &mut Vec<Color>,
    ) -> bool {
        if v == colors.len() {
            return true;
        }
        for &c in lists.list(v) {
            colors[v] = c;
            let ok = closing[v]
                .iter()
                .all(|&(p, q)| distinct(h.edge(p), h.edge(q), colors, variant));
            if ok && go(v + 1, h, lists, variant, closing, colors) {
                return true;
            }
        }
        false
    }
    Ok(go(0, h, lists, variant, &closing, &mut colors).then_some(colors))
}

/// Calls `visit` on every edge labeling with labels `1..=t` under which
/// adjacent vertices see different label sets (or multisets), in
/// lexicographic order, until `visit` returns `false`.
pub fn for_each_labeling(g: &Graph, t: Color, mode: Mode, mut visit: impl FnMut(&[Color]) -> bool) {
    // Vertex v's view is complete once its last incident edge is labeled.
    let last: Vec<Option<usize>> = (0..g.n())
        .map(|v| g.incident(v).iter().copied().max())
        .collect();
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); g.m()];
    for (v, l) in last.iter().enumerate() {
        if let Some(e) = l {
            closing[*e].push(v);
        }
    }
    let view = |v: usize, labels: &[Color]| -> Vec<Color> {
        let mut s: Vec<Color> = g.incident(v).iter().map(|&e| labels[e]).collect();
        s.sort_unstable();
        if mode == Mode::Sets {
            s.dedup();
        }
        s
    };
    let mut labels = vec![0; g.m()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        e: usize,
        g: &Graph,
        t: Color,
        last: &[Option<usize>],
        closing: &[Vec<usize>],
        view: &dyn Fn(usize, &[Color]) -> Vec<Color>,
        labels: &mut Vec<Color>,
        visit: &mut dyn FnMut(&[Color]) -> bool,
    ) -> bool {
        if e == labels.len() {
            return visit(labels);
        }
        for c in 1..=t {
            labels[e] = c;
            let ok = closing[e].iter().all(|&v| {
                let mine = view(v, labels);
                g.neighbors(v)
                    .filter(|&w| last[w].is_some_and(|l| l <= e))
                    .all(|w| view(w, labels) != mine)
            });
            if ok && !go(e + 1, g, t, last, closing, view, labels, visit) {
                return false;
            }
        }
        true
    }
    go(0, g, t, &last, &closing, &view, &mut labels, &mut visit);
}

/// All labelings visited by [`for_each_labeling`].
pub fn all_labelings(g: &Graph, t: Color, mode: Mode) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    for_each_labeling(g, t, mode, |l| {
        out.push(l.to_vec());
        true
    });
    out
}

/// The least labeling with labels `1..=t`, if any.
pub fn first_labeling(g: &Graph, t: Color, mode: Mode) -> Option<Vec<Color>> {
    let mut found = None;
    for_each_labeling(g, t, mode, |l| {
        found = Some(l.to_vec());
        false
    });
    found
}

/// The least `t` such that some edge labeling with labels `1..=t` tells
/// adjacent vertices apart by their incident label sets.
pub fn brute_force_gndi(g: &Graph) -> Result<usize, OracleError> {
    if g.m() > MAX_GNDI_EDGES {
        return Err(OracleError::TooLarge {
            m: g.m(),
            max: MAX_GNDI_EDGES,
        });
    }
    if !is_nice(g) {
        return Err(OracleError::NotNice);
    }
    if g.m() == 0 {
        return Ok(0);
    }
    // Labels beyond the number of edges never help.
    Ok((1..=g.m())
        .find(|&t| first_labeling(g, t as Color, Mode::Sets).is_some())
        .expect("distinct labels on all edges distinguish a nice graph"))
}

/// Vertex labels, then edge labels.
pub type TotalLabels = (Vec<Color>, Vec<Color>);

/// The least total labeling with labels `1..=t` (vertex labels, then edge
/// labels) under which adjacent vertices see different sets or multisets
/// of their own and incident edge labels.
pub fn brute_force_total(
    g: &Graph,
    t: Color,
    mode: Mode,
) -> Result<Option<TotalLabels>, OracleError> {
    let size = (t as u128).saturating_pow((g.n() + g.m()) as u32);
    if size > MAX_SEARCH_SPACE {
        return Err(OracleError::SearchSpaceTooLarge {
            size,
            max: MAX_SEARCH_SPACE,
        });
    }
    let n = g.n();
    let view = |v: usize, all: &[Color]| -> Vec<Color> {
        let mut s: Vec<Color> = std::iter::once(all[v])
            .chain(g.incident(v).iter().map(|&e| all[n + e]))
            .collect();
        s.sort_unstable();
        if mode == Mode::Sets {
            s.dedup();
        }
        s
    };
    let total = n + g.m();
    let mut all = vec![1; total];
    for index in 0..size {
        let mut rest = index;
        for slot in all.iter_mut().rev() {
            *slot = (rest % t as u128) as Color + 1;
            rest /= t as u128;
        }
        if g.edges()
            .iter()
            .all(|&(u, v)| view(u, &all) != view(v, &all))
        {
            let edges = all.split_off(n);
            return Ok(Some((all, edges)));
        }
    }
    Ok(None)
}

/// Every connected bipartite graph on exactly `n` vertices, one per
/// isomorphism class. Class `A` is `0..a` with `a ≤ n − a`, edges are listed
/// row by row.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Graph::new(1, Vec::new()).expect("single vertex")];
    }
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        let col_perms = permutations(b);
        let mut seen = BTreeSet::new();
        // Row r of the biadjacency matrix is a b-bit mask.
        for code in 0u64..1 << (a * b) {
            let rows: Vec<u64> = (0..a).map(|r| (code >> (r * b)) & ((1 << b) - 1)).collect();
            if rows.contains(&0) || !connected(&rows, b) {
                continue;
            }
            if seen.insert(canonical(&rows, a, b, &col_perms)) {
                let edges = rows
                    .iter()
                    .enumerate()
                    .flat_map(|(r, &m)| {
                        (0..b)
                            .filter(move |c| m >> c & 1 == 1)
                            .map(move |c| (r, a + c))
                    })
                    .collect();
                out.push(Graph::new(n, edges).expect("bipartite graphs are simple"));
            }
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

fn connected(rows: &[u64], b: usize) -> bool {
    let mut rows_in = 1u64;
    let mut cols_in = rows[0];
    loop {
        let grown: u64 = (0..rows.len())
            .filter(|&r| rows[r] & cols_in != 0)
            .map(|r| 1 << r)
            .sum();
        let cols: u64 = (0..rows.len())
            .filter(|&r| grown >> r & 1 == 1)
            .fold(0, |acc, r| acc | rows[r]);
        if grown == rows_in && cols == cols_in {
            return grown.count_ones() as usize == rows.len() && cols == (1 << b) - 1;
        }
        rows_in = grown;
        cols_in = cols;
    }
}

/// Least sorted row list over column permutations, and over swapping the
/// classes when they have equal size.
fn canonical(rows: &[u64], a: usize, b: usize, col_perms: &[Vec<usize>]) -> Vec<u64> {
    let permuted = |rows: &[u64]| -> Vec<u64> {
        col_perms
            .iter()
            .map(|p| {
                let mut r: Vec<u64> = rows
                    .iter()
                    .map(|&m| (0..b).filter(|&c| m >> c & 1 == 1).map(|c| 1 << p[c]).sum())
                    .collect();
                r.sort_unstable();
                r
            })
            .min()
            .expect("at least one permutation")
    };
    let best = permuted(rows);
    if a != b {
        return best;
    }
    let transposed: Vec<u64> = (0..b)
        .map(|c| {
            (0..a)
                .filter(|&r| rows[r] >> c & 1 == 1)
                .map(|r| 1 << r)
                .sum()
        })
        .collect();
    best.min(permuted(&transposed))
}
