//! Standard graphs and two small labeled examples.

use crate::hypergraph::Color;

use super::Graph;

fn graph(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("family graphs are simple")
}

pub fn path(n: usize) -> Graph {
    graph(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Edges `(i, i+1)` and finally `(n−1, 0)`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs three vertices");
    graph(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> Graph {
    graph(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
    )
}

/// Class `0..a` against class `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    graph(
        a + b,
        (0..a)
            .flat_map(|i| (a..a + b).map(move |j| (i, j)))
            .collect(),
    )
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// The 3-cube on bit strings `0..8`.
pub fn cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|v| [1, 2, 4].into_iter().map(move |b| (v, v ^ b)))
        .filter(|&(u, v)| u < v)
        .collect();
    graph(8, edges)
}

/// Outer 5-cycle `0..5`, spokes to `5..10`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
    graph(10, edges)
}

/// `h` placed after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + g.n(), v + g.n())));
    graph(g.n() + h.n(), edges)
}

/// A cubic graph on eight vertices with a labeling from `{1, 2, 3}` whose
/// incident label sets differ across every edge.
pub fn sample_cubic_labeling() -> (Graph, Vec<Color>) {
    // Vertices A, B, C, D, E, F, G, K are 0..8.
    let labeled = [
        ((1, 2), 1), // BC
        ((2, 3), 2), // CD
        ((4, 5), 2), // EF
        ((5, 6), 2), // FG
        ((1, 4), 3), // BE
        ((2, 5), 2), // CF
        ((3, 6), 3), // DG
        ((1, 0), 1), // BA
        ((0, 4), 1), // AE
        ((7, 3), 2), // KD
        ((7, 6), 1), // KG
        ((0, 7), 1), // AK
    ];
    let (edges, labels) = labeled.into_iter().unzip();
    (graph(8, edges), labels)
}

/// A cubic graph on six vertices with a set-distinguishing labeling; its
/// dual hypergraph has nine vertices, one per edge.
pub fn sample_dual_labeling() -> (Graph, Vec<Color>) {
    // Vertices a..f are 0..6.
    let labeled = [
        ((2, 1), 1), // cb
        ((2, 4), 1), // ce
        ((4, 5), 2), // ef
        ((1, 5), 2), // bf
        ((2, 0), 2), // ca
        ((1, 0), 3), // ba
        ((4, 3), 3), // ed
        ((5, 3), 1), // fd
        ((0, 3), 3), // ad
    ];
    let (edges, labels) = labeled.into_iter().unzip();
    (graph(6, edges), labels)
}
