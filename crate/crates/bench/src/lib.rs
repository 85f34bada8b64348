//! Shared fixtures for the benchmarks.

use ied_core::generate::random_regular_graph;
use ied_core::graph::dual_hypergraph;
use ied_core::{bound_ieds, Hypergraph, ListAssignment};

/// The dual of a random 4-regular graph on `n / 2` vertices, so `n`
/// hypergraph vertices, with uniform lists at the guaranteed size.
pub fn dual_instance(n: usize, seed: u64) -> (Hypergraph, ListAssignment, usize) {
    let g = random_regular_graph(n / 2, 4, seed).expect("4-regular graphs exist for n ≥ 10");
    let h = dual_hypergraph(&g).expect("regular graphs have duals");
    let spectrum = h.difference_spectrum().expect("uniform");
    let r = bound_ieds(4, 2, &spectrum).expect("defined") as usize;
    let lists = ListAssignment::uniform(h.n(), r);
    (h, lists, r)
}
