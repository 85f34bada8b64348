//! Instances and checks shared by the integration suites.
#![allow(dead_code)]

use ied_core::entropy::run_with;
use ied_core::generate::{random_regular_graph, random_uniform_hypergraph};
use ied_core::graph::{dual_hypergraph, total_hypergraph};
use ied_core::hypergraph::{verify, verify_sequences};
use ied_core::{
    bound_iedm, bound_ieds, bound_sequences, decode, DrawSequence, Hypergraph, ListAssignment,
    Mode, PermutationFamily, RunError, RunOptions, RunResult, Variant,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: String,
    pub h: Hypergraph,
}

impl Instance {
    fn new(name: impl Into<String>, h: Hypergraph) -> Self {
        Self {
            name: name.into(),
            h,
        }
    }
}

/// Uniform hypergraphs with `k ∈ {3, 4, 5}`, at most 60 vertices and maximum
/// degree at most 4: random ones, and duals and totals of random regular
/// graphs.
pub fn soundness_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for (k, n, m, seed) in [
        (3, 30, 30, 1),
        (4, 40, 30, 2),
        (5, 60, 36, 3),
        (3, 24, 28, 4),
    ] {
        let h = random_uniform_hypergraph(n, k, m, 4, seed).expect("feasible");
        out.push(Instance::new(format!("random k={k} n={n}"), h));
    }
    for (k, n, seed) in [(3, 20, 5), (4, 15, 6), (5, 12, 7)] {
        let g = random_regular_graph(n, k, seed).expect("feasible");
        out.push(Instance::new(
            format!("dual of {k}-regular n={n}"),
            dual_hypergraph(&g).expect("regular graphs have duals"),
        ));
    }
    for (k, n, seed) in [(2, 20, 8), (3, 16, 9), (4, 12, 10)] {
        let g = random_regular_graph(n, k, seed).expect("feasible");
        out.push(Instance::new(
            format!("total of {k}-regular n={n}"),
            total_hypergraph(&g).expect("total hypergraphs exist"),
        ));
    }
    out
}

fn shape(h: &Hypergraph) -> (usize, usize, Vec<usize>) {
    let k = h.uniformity().expect("uniform");
    (
        k,
        h.max_degree().max(2),
        h.difference_spectrum().expect("uniform"),
    )
}

/// The list size that guarantees a coloring of `h`, if the bound applies.
pub fn try_guaranteed_bound(h: &Hypergraph, mode: Mode) -> Option<usize> {
    let (k, delta, spectrum) = shape(h);
    let r = match mode {
        Mode::Sets => bound_ieds(k, delta, &spectrum),
        Mode::Multisets => bound_iedm(k, delta, &spectrum),
    };
    r.ok().map(|r| r as usize)
}

pub fn guaranteed_bound(h: &Hypergraph, mode: Mode) -> usize {
    try_guaranteed_bound(h, mode).expect("bound is defined")
}

pub fn sequence_bound(h: &Hypergraph, pi: &PermutationFamily) -> usize {
    let (k, delta, spectrum) = shape(h);
    bound_sequences(k, delta, &spectrum, pi.size()).expect("bound is defined") as usize
}

/// `r` distinct colors per vertex from `1..=2r`, shuffled.
pub fn random_lists(n: usize, r: usize, seed: u64) -> ListAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..n)
        .map(|_| {
            let mut palette: Vec<u64> = (1..=2 * r as u64).collect();
            palette.shuffle(&mut rng);
            palette.truncate(r);
            palette
        })
        .collect();
    ListAssignment::new(lists).expect("distinct nonempty lists")
}

/// Why a checked run failed.
#[derive(Debug)]
pub enum Failure {
    /// The run itself errored, including audit failures.
    Run(RunError),
    Incomplete(u64),
    Verify(String),
    Decode(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Run(e) => write!(f, "run: {e}"),
            Failure::Incomplete(cap) => write!(f, "no coloring within {cap} iterations"),
            Failure::Verify(e) => write!(f, "verifier: {e}"),
            Failure::Decode(e) => write!(f, "decode: {e}"),
        }
    }
}

/// Runs with an audit after every iteration, checks the final coloring with
/// the matching verifier, and decodes the log back into the draws.
pub fn checked_run(
    h: &Hypergraph,
    lists: &ListAssignment,
    variant: Variant<'_>,
    draws: &DrawSequence,
    max_iters: u64,
) -> Result<RunResult, Failure> {
    let options = RunOptions {
        max_iters: Some(max_iters),
        audit: true,
    };
    let res = run_with(h, lists, variant, draws, options).map_err(Failure::Run)?;
    if !res.is_complete() {
        return Err(Failure::Incomplete(max_iters));
    }
    let phi = res.coloring();
    let verdict = match variant {
        Variant::Sets => verify(h, phi, Mode::Sets),
        Variant::Multisets => verify(h, phi, Mode::Multisets),
        Variant::Sequences(pi) => verify_sequences(h, pi, phi),
    };
    verdict.map_err(|e| Failure::Verify(e.to_string()))?;
    let decoded =
        decode(h, lists, variant, &res.log, phi).map_err(|e| Failure::Decode(e.to_string()))?;
    let consumed = draws
        .prefix(res.iterations as usize)
        .ok_or_else(|| Failure::Decode("draws shorter than the run".into()))?;
    if decoded != consumed {
        return Err(Failure::Decode(format!(
            "decoded draws differ from consumed draws after {} iterations",
            res.iterations
        )));
    }
    Ok(res)
}
