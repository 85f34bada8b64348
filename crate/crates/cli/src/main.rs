//! `ied-color`: batch front end for list colorings distinguishing
//! intersecting edges, graph labelings and the two-label search.
//!
//! Exit status is 0 on success, 1 when no coloring was found within the cap,
//! a formula is unsatisfiable or a check found a violation, and 2 on usage or
//! input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ied-color", version, about)]
struct Cli {
    /// Emit JSON instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Sets,
    Multisets,
    Sequences,
}

/// Options shared by every command that runs the recoloring algorithm.
#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Hypergraph file (`H n m`, `E …`, optional `L v c…` lists).
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "sets")]
    pub mode: ModeArg,
    /// Draw range; lists are truncated to this length. Defaults to the
    /// guaranteed bound for the hypergraph.
    #[arg(long)]
    pub lists: Option<usize>,
    /// Permutation family file for sequence mode; the identity by default.
    #[arg(long)]
    pub pi: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_iters: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a list-size bound.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        /// Difference spectrum, comma separated.
        #[arg(long = "i", value_delimiter = ',', required = true)]
        spectrum: Vec<usize>,
        #[arg(long, value_enum, default_value = "sets")]
        mode: ModeArg,
        /// Size of the permutation family in sequence mode.
        #[arg(long, default_value_t = 1)]
        pi_size: usize,
    },
    /// Color a hypergraph from its lists.
    Color(RunArgs),
    /// Check a coloring file against a hypergraph.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "sets")]
        mode: ModeArg,
        #[arg(long)]
        pi: Option<PathBuf>,
    },
    /// Run, then rebuild the consumed draws from the log.
    DecodeCheck(RunArgs),
    /// The dual hypergraph of a graph.
    Dual {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// The total hypergraph of a graph.
    Total {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Least number of edge labels distinguishing neighbors of a nice
    /// bipartite graph.
    Gndi {
        #[arg(long = "in")]
        input: PathBuf,
        /// Edges (1-based, comma separated) that must carry label 1.
        #[arg(long, value_delimiter = ',')]
        forced: Vec<usize>,
    },
    /// Split a hypergraph's vertices so no edge is monochromatic.
    PropertyB {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build the reduction graph of a formula.
    Gadget {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        girth: usize,
    },
    /// Iteration counts over independent seeded runs.
    Bench {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Exhaustive search for the least coloring.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "sets")]
        mode: ModeArg,
        #[arg(long)]
        lists: Option<usize>,
        #[arg(long)]
        pi: Option<PathBuf>,
    },
}

/// What a command found, mapped onto the exit status.
pub enum Found {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = commands::Output { json: cli.json };
    let result = match cli.command {
        Command::Bounds {
            k,
            delta,
            spectrum,
            mode,
            pi_size,
        } => commands::bounds(&out, k, delta, &spectrum, mode, pi_size),
        Command::Color(args) => commands::color(&out, &args),
        Command::Verify {
            input,
            coloring,
            mode,
            pi,
        } => commands::verify(&out, &input, &coloring, mode, pi.as_deref()),
        Command::DecodeCheck(args) => commands::decode_check(&out, &args),
        Command::Dual { input } => commands::dual(&out, &input, false),
        Command::Total { input } => commands::dual(&out, &input, true),
        Command::Gndi { input, forced } => commands::gndi(&out, &input, &forced),
        Command::PropertyB { input } => commands::property_b(&out, &input),
        Command::Gadget { input, girth } => commands::gadget(&out, &input, girth),
        Command::Bench { run, trials } => commands::bench(&out, &run, trials),
        Command::Oracle {
            input,
            mode,
            lists,
            pi,
        } => commands::oracle(&out, &input, mode, lists, pi.as_deref()),
    };
    match result {
        Ok(Found::Yes) => ExitCode::SUCCESS,
        Ok(Found::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
