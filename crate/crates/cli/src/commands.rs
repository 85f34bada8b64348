use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use ied_core::entropy::{iteration_stats, run_with};
use ied_core::gndi::{hardness_gadget, two_labeling};
use ied_core::graph::{dual_hypergraph, total_hypergraph};
use ied_core::hypergraph::{verify as verify_sets, verify_sequences, VerifyError};
use ied_core::io::{
    parse_coloring, parse_formula, parse_graph, parse_hypergraph, parse_permutations,
    write_coloring, write_edge_labeling, write_graph, write_hypergraph, HypergraphFile,
};
use ied_core::oracle::brute_force_coloring;
use ied_core::{
    bound_iedm, bound_ieds, bound_sequences, decode, Color, DrawSequence, Graph, Hypergraph,
    ListAssignment, Mode, PartialColoring, PermutationFamily, RunOptions, Variant,
};
use serde::Serialize;
use serde_json::json;

use crate::{Found, ModeArg, RunArgs};

/// Caps the worker threads of `bench`.
const THREADS_VAR: &str = "IED_COLOR_THREADS";

pub struct Output {
    pub json: bool,
}

impl Output {
    fn emit(&self, text: &str, value: impl Serialize) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string(&value)?);
        } else {
            print!("{text}");
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_hypergraph(path: &Path) -> Result<HypergraphFile> {
    parse_hypergraph(&read(path)?).with_context(|| path.display().to_string())
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| path.display().to_string())
}

fn load_pi(path: Option<&Path>, h: &Hypergraph) -> Result<PermutationFamily> {
    match path {
        Some(p) => parse_permutations(&read(p)?).with_context(|| p.display().to_string()),
        None => Ok(PermutationFamily::identity(uniformity(h)?)),
    }
}

fn uniformity(h: &Hypergraph) -> Result<usize> {
    h.uniformity().context("the hypergraph must be uniform")
}

/// The bound for `h` in `mode`. Degrees below 2 are raised to 2, where the
/// bound is defined; it only grows with the degree.
fn hypergraph_bound(
    h: &Hypergraph,
    mode: ModeArg,
    pi: Option<&PermutationFamily>,
) -> Result<usize> {
    let k = uniformity(h)?;
    let delta = h.max_degree().max(2);
    let spectrum = h.difference_spectrum()?;
    let r = match mode {
        ModeArg::Sets => bound_ieds(k, delta, &spectrum),
        ModeArg::Multisets => bound_iedm(k, delta, &spectrum),
        ModeArg::Sequences => bound_sequences(k, delta, &spectrum, pi.map_or(1, |p| p.size())),
    }
    .with_context(|| "no bound for this hypergraph; pass --lists")?;
    usize::try_from(r).context("bound exceeds the address space")
}

fn variant(mode: ModeArg, pi: Option<&PermutationFamily>) -> Variant<'_> {
    match mode {
        ModeArg::Sets => Variant::Sets,
        ModeArg::Multisets => Variant::Multisets,
        ModeArg::Sequences => Variant::Sequences(pi.expect("sequence mode loads a family")),
    }
}

fn mode_name(mode: ModeArg) -> &'static str {
    match mode {
        ModeArg::Sets => "sets",
        ModeArg::Multisets => "multisets",
        ModeArg::Sequences => "sequences",
    }
}

/// Everything a run needs, resolved from the flags and the input file.
struct Instance {
    h: Hypergraph,
    lists: ListAssignment,
    pi: Option<PermutationFamily>,
    r: usize,
}

impl Instance {
    fn load(input: &Path, mode: ModeArg, lists: Option<usize>, pi: Option<&Path>) -> Result<Self> {
        let file = load_hypergraph(input)?;
        let h = file.hypergraph;
        let pi = match mode {
            ModeArg::Sequences => Some(load_pi(pi, &h)?),
            _ => None,
        };
        let r = match lists {
            Some(0) => bail!("--lists must be at least 1"),
            Some(r) => r,
            None => hypergraph_bound(&h, mode, pi.as_ref())?,
        };
        let lists = match file.lists {
            Some(l) => l,
            None => ListAssignment::uniform(h.n(), r),
        };
        Ok(Self { h, lists, pi, r })
    }

    fn variant(&self, mode: ModeArg) -> Variant<'_> {
        variant(mode, self.pi.as_ref())
    }
}

pub fn bounds(
    out: &Output,
    k: usize,
    delta: usize,
    spectrum: &[usize],
    mode: ModeArg,
    pi_size: usize,
) -> Result<Found> {
    let r = match mode {
        ModeArg::Sets => bound_ieds(k, delta, spectrum),
        ModeArg::Multisets => bound_iedm(k, delta, spectrum),
        ModeArg::Sequences => bound_sequences(k, delta, spectrum, pi_size),
    }?;
    let value = json!({
        "mode": mode_name(mode),
        "k": k,
        "delta": delta,
        "spectrum": spectrum,
        "pi_size": (mode == ModeArg::Sequences).then_some(pi_size),
        "r": r,
    });
    out.emit(&format!("R={r}\n"), value)?;
    Ok(Found::Yes)
}

pub fn color(out: &Output, args: &RunArgs) -> Result<Found> {
    let inst = Instance::load(&args.input, args.mode, args.lists, args.pi.as_deref())?;
    let draws = DrawSequence::seeded(args.seed, inst.r)?;
    let options = RunOptions {
        max_iters: args.max_iters,
        audit: false,
    };
    let res = run_with(
        &inst.h,
        &inst.lists,
        inst.variant(args.mode),
        &draws,
        options,
    )?;
    let phi = res.coloring();
    let value = json!({
        "complete": res.is_complete(),
        "iterations": res.iterations,
        "seed": args.seed,
        "range": inst.r,
        "coloring": phi.as_slice(),
    });
    if let Some(colors) = phi.to_complete() {
        out.emit(&write_coloring(&colors, res.iterations, args.seed), value)?;
        return Ok(Found::Yes);
    }
    let mut text = String::new();
    for (v, c) in phi.as_slice().iter().enumerate() {
        if let Some(c) = c {
            let _ = writeln!(text, "{} {c}", v + 1);
        }
    }
    let _ = writeln!(
        text,
        "# no coloring within {} iterations, seed {}",
        res.iterations, args.seed
    );
    out.emit(&text, value)?;
    Ok(Found::No)
}

pub fn verify(
    out: &Output,
    input: &Path,
    coloring: &Path,
    mode: ModeArg,
    pi: Option<&Path>,
) -> Result<Found> {
    let file = load_hypergraph(input)?;
    let h = &file.hypergraph;
    let colors =
        parse_coloring(&read(coloring)?, h.n()).with_context(|| coloring.display().to_string())?;
    if let Some(lists) = &file.lists {
        if let Some(v) = (0..h.n()).find(|&v| !lists.list(v).contains(&colors[v])) {
            let msg = format!("vertex {} has color {} outside its list", v + 1, colors[v]);
            out.emit(
                &format!("violation: {msg}\n"),
                json!({"ok": false, "violation": msg}),
            )?;
            return Ok(Found::No);
        }
    }
    let phi = PartialColoring::from_complete(&colors);
    let verdict = match mode {
        ModeArg::Sets => verify_sets(h, &phi, Mode::Sets),
        ModeArg::Multisets => verify_sets(h, &phi, Mode::Multisets),
        ModeArg::Sequences => verify_sequences(h, &load_pi(pi, h)?, &phi),
    };
    match verdict {
        Ok(()) => {
            out.emit("ok\n", json!({"ok": true}))?;
            Ok(Found::Yes)
        }
        Err(VerifyError::Violation(v)) => {
            let value = json!({
                "ok": false,
                "violation": {"p": v.p + 1, "q": v.q + 1, "sigma": v.sigma.map(|s| s + 1)},
            });
            out.emit(&format!("violation: {v}\n"), value)?;
            Ok(Found::No)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn decode_check(out: &Output, args: &RunArgs) -> Result<Found> {
    let inst = Instance::load(&args.input, args.mode, args.lists, args.pi.as_deref())?;
    let draws = DrawSequence::seeded(args.seed, inst.r)?;
    let options = RunOptions {
        max_iters: args.max_iters,
        audit: true,
    };
    let variant = inst.variant(args.mode);
    let res = run_with(&inst.h, &inst.lists, variant, &draws, options)?;
    let decoded = decode(&inst.h, &inst.lists, variant, &res.log, res.coloring())?;
    let consumed = draws
        .prefix(res.iterations as usize)
        .ok_or_else(|| anyhow!("draws end before the run"))?;
    let t = res.iterations;
    let mismatch = decoded
        .iter()
        .zip(&consumed)
        .position(|(a, b)| a != b)
        .or((decoded.len() != consumed.len()).then_some(decoded.len().min(consumed.len())));
    let value = json!({
        "ok": mismatch.is_none(),
        "iterations": t,
        "complete": res.is_complete(),
        "conflicts": res.log.conflicts(),
        "first_mismatch": mismatch.map(|i| i + 1),
    });
    let cap = if res.is_complete() {
        ""
    } else {
        " (cap reached)"
    };
    match mismatch {
        None => {
            out.emit(&format!("round-trip OK, {t} iterations{cap}\n"), value)?;
            Ok(Found::Yes)
        }
        Some(i) => {
            let text = format!("round-trip MISMATCH at draw {} of {t}\n", i + 1);
            out.emit(&text, value)?;
            Ok(Found::No)
        }
    }
}

fn hypergraph_json(h: &Hypergraph) -> serde_json::Value {
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|v| v + 1).collect())
        .collect();
    json!({"n": h.n(), "edges": edges})
}

pub fn dual(out: &Output, input: &Path, total: bool) -> Result<Found> {
    let g = load_graph(input)?;
    let h = if total {
        total_hypergraph(&g)?
    } else {
        dual_hypergraph(&g)?
    };
    out.emit(&write_hypergraph(&h, None), hypergraph_json(&h))?;
    Ok(Found::Yes)
}

pub fn gndi(out: &Output, input: &Path, forced: &[usize]) -> Result<Found> {
    let g = load_graph(input)?;
    let forced = forced
        .iter()
        .map(|&e| match e {
            0 => bail!("--forced edges are numbered from 1"),
            e => Ok(e - 1),
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = two_labeling(&g, &forced)?;
    let value = json!({"gndi": if labels.is_some() { 2 } else { 3 }, "labels": labels});
    let text = match &labels {
        Some(l) => format!("gndi 2\n{}", write_edge_labeling(l)),
        None => "gndi 3\n".to_string(),
    };
    out.emit(&text, value)?;
    Ok(Found::Yes)
}

pub fn property_b(out: &Output, input: &Path) -> Result<Found> {
    let h = load_hypergraph(input)?.hypergraph;
    match ied_core::gndi::property_b(&h) {
        Some(split) => {
            let classes: Vec<u8> = split.iter().map(|&s| if s { 1 } else { 2 }).collect();
            let mut text = String::new();
            for (v, c) in classes.iter().enumerate() {
                let _ = writeln!(text, "{} {c}", v + 1);
            }
            out.emit(&text, json!({"split": classes}))?;
            Ok(Found::Yes)
        }
        None => {
            out.emit("none\n", json!({"split": null}))?;
            Ok(Found::No)
        }
    }
}

pub fn gadget(out: &Output, input: &Path, girth: usize) -> Result<Found> {
    let phi = parse_formula(&read(input)?).with_context(|| input.display().to_string())?;
    let gadget = hardness_gadget(&phi, girth)?;
    let g = &gadget.graph;
    let one_based = |vs: &[usize]| -> Vec<usize> { vs.iter().map(|v| v + 1).collect() };
    let text = format!("# spacing {}\n{}", gadget.spacing, write_graph(g));
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    let value = json!({
        "n": g.n(),
        "edges": edges,
        "spacing": gadget.spacing,
        "clause_vertices": one_based(&gadget.clause_vertices),
        "connectors": gadget.connectors.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
    });
    out.emit(&text, value)?;
    Ok(Found::Yes)
}

fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_VAR) {
        Ok(s) => {
            let t: usize = s
                .trim()
                .parse()
                .with_context(|| format!("{THREADS_VAR}={s} is not a thread count"))?;
            Ok(Some(t.max(1)))
        }
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(e).context(THREADS_VAR),
    }
}

pub fn bench(out: &Output, args: &RunArgs, trials: usize) -> Result<Found> {
    let inst = Instance::load(&args.input, args.mode, args.lists, args.pi.as_deref())?;
    let options = RunOptions {
        max_iters: args.max_iters,
        audit: false,
    };
    let stats = iteration_stats(
        &inst.h,
        &inst.lists,
        inst.variant(args.mode),
        inst.r,
        trials,
        args.seed,
        options,
        thread_cap()?,
    )?;
    let n = inst.h.n();
    let reference = n as f64 * inst.r as f64 * (inst.r as f64).ln();
    let mut text = String::new();
    for (t, (seed, count)) in stats.seeds.iter().zip(&stats.counts).enumerate() {
        let _ = writeln!(text, "trial {} seed {seed} iterations {count}", t + 1);
    }
    let _ = writeln!(text, "mean {:.3}", stats.mean);
    let _ = writeln!(text, "max {}", stats.max);
    let _ = writeln!(text, "exhausted {}", stats.exhausted);
    let _ = writeln!(text, "n {n} R {} n*R*ln(R) {reference:.3}", inst.r);
    let value = json!({
        "n": n,
        "range": inst.r,
        "reference": reference,
        "stats": stats,
    });
    out.emit(&text, value)?;
    Ok(if stats.exhausted == 0 {
        Found::Yes
    } else {
        Found::No
    })
}

pub fn oracle(
    out: &Output,
    input: &Path,
    mode: ModeArg,
    lists: Option<usize>,
    pi: Option<&Path>,
) -> Result<Found> {
    let inst = Instance::load(input, mode, lists, pi)?;
    let lists = inst.lists.truncated(inst.r)?;
    match brute_force_coloring(&inst.h, &lists, inst.variant(mode))? {
        Some(colors) => {
            let mut text = String::new();
            for (v, c) in colors.iter().enumerate() {
                let _ = writeln!(text, "{} {c}", v + 1);
            }
            out.emit(&text, json!({"coloring": colors}))?;
            Ok(Found::Yes)
        }
        None => {
            out.emit("none\n", json!({"coloring": Option::<Vec<Color>>::None}))?;
            Ok(Found::No)
        }
    }
}
