//! List colorings of uniform hypergraphs in which intersecting edges receive
//! different sets, multisets or permutation-inequivalent sequences of colors.
//!
//! The crate bundles
//! * the hypergraph model and verifiers ([`hypergraph`]),
//! * exact list-size bounds that guarantee a coloring exists ([`bounds`]),
//! * the randomized recoloring algorithm with a logged, invertible history
//!   ([`entropy`]),
//! * graph labelings distinguishing neighbors, built on dual and total
//!   hypergraphs ([`graph`]),
//! * two-label labelings of bipartite graphs through positive not-all-equal
//!   SAT ([`gndi`]),
//! * brute-force reference searches ([`oracle`]),
//! * text formats ([`io`]) and random instance generators ([`generate`]).

pub mod bounds;
pub mod entropy;
pub mod generate;
pub mod gndi;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod oracle;

pub use bounds::{bound_iedm, bound_ieds, bound_sequences, BoundError};
pub use entropy::{
    decode, run, run_sequences, ConflictLog, ConflictRecord, DrawSequence, Outcome, RunError,
    RunOptions, RunResult, Variant,
};
pub use graph::Graph;
pub use hypergraph::{
    Color, Hypergraph, HypergraphError, ListAssignment, Mode, PartialColoring, PermutationFamily,
};
