//! Line-oriented text formats. Vertices, edges, variables and permutation
//! images are 1-based in files and 0-based in memory. Blank lines and lines
//! starting with `#` are ignored.
//!
//! ```text
//! H <n> <m>            G <n> <m>        P <k> <count>     F <vars> <clauses>
//! E <v1> … <vk>        E <u> <v>        <i1> … <ik>       C <v1> …
//! L <v> <c1> <c2> …
//! ```
//!
//! Colorings are written as `<v> <color>` lines followed by
//! `# iterations <t> seed <s>`.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::gndi::NaeFormula;
use crate::graph::Graph;
use crate::hypergraph::{Color, Hypergraph, ListAssignment, PermutationFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Content lines with their 1-based line numbers, split into tokens.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn number<T: FromStr>(line: usize, token: &str) -> Result<T, ParseError> {
    token
        .parse()
        .or_else(|_| err(line, format!("expected a number, found `{token}`")))
}

/// A 1-based index in `1..=max`, returned 0-based.
fn index(line: usize, token: &str, max: usize, what: &str) -> Result<usize, ParseError> {
    let i: usize = number(line, token)?;
    if i == 0 || i > max {
        return err(line, format!("{what} {i} outside 1..={max}"));
    }
    Ok(i - 1)
}

struct Header<'a> {
    line: usize,
    counts: (usize, usize),
    body: Vec<(usize, Vec<&'a str>)>,
}

fn header<'a>(text: &'a str, tag: &str, usage: &str) -> Result<Header<'a>, ParseError> {
    let mut it = lines(text);
    let Some((line, head)) = it.next() else {
        return err(1, format!("empty input, expected `{usage}`"));
    };
    if head.len() != 3 || head[0] != tag {
        return err(line, format!("expected `{usage}`"));
    }
    let counts = (number(line, head[1])?, number(line, head[2])?);
    Ok(Header {
        line,
        counts,
        body: it.collect(),
    })
}

fn count_check(h: &Header<'_>, found: usize, what: &str) -> Result<(), ParseError> {
    if found != h.counts.1 {
        return err(
            h.line,
            format!("header announces {} {what}, found {found}", h.counts.1),
        );
    }
    Ok(())
}

/// A hypergraph file, with lists when the file gives one for every vertex.
#[derive(Debug, Clone)]
pub struct HypergraphFile {
    pub hypergraph: Hypergraph,
    pub lists: Option<ListAssignment>,
}

pub fn parse_hypergraph(text: &str) -> Result<HypergraphFile, ParseError> {
    let hd = header(text, "H", "H <n> <m>")?;
    let n = hd.counts.0;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; n];
    let mut first_list_line = None;
    for (line, t) in &hd.body {
        match t[0] {
            "E" => {
                let e = t[1..]
                    .iter()
                    .map(|tok| index(*line, tok, n, "vertex"))
                    .collect::<Result<Vec<_>, _>>()?;
                edges.push(e);
                edge_lines.push(*line);
            }
            "L" => {
                if t.len() < 3 {
                    return err(*line, "expected `L <v> <c1> …`");
                }
                let v = index(*line, t[1], n, "vertex")?;
                if lists[v].is_some() {
                    return err(*line, format!("second list for vertex {}", v + 1));
                }
                let colors = t[2..]
                    .iter()
                    .map(|tok| number(*line, tok))
                    .collect::<Result<Vec<Color>, _>>()?;
                lists[v] = Some(colors);
                first_list_line.get_or_insert(*line);
            }
            other => return err(*line, format!("unknown record `{other}`, expected E or L")),
        }
    }
    count_check(&hd, edges.len(), "edges")?;
    let hypergraph = Hypergraph::new(n, edges).or_else(|e| {
        let line = edge_error_line(&e).map_or(hd.line, |i| edge_lines[i]);
        err(line, e.to_string())
    })?;
    let lists = match first_list_line {
        None => None,
        Some(line) => {
            if let Some(v) = lists.iter().position(Option::is_none) {
                return err(line, format!("vertex {} has no list", v + 1));
            }
            let lists = lists.into_iter().map(Option::unwrap).collect();
            Some(ListAssignment::new(lists).or_else(|e| err(line, e.to_string()))?)
        }
    };
    Ok(HypergraphFile { hypergraph, lists })
}

fn edge_error_line(e: &crate::hypergraph::HypergraphError) -> Option<usize> {
    use crate::hypergraph::HypergraphError::*;
    match *e {
        VertexOutOfRange { edge, .. } | RepeatedVertex { edge, .. } | EmptyEdge { edge } => {
            Some(edge)
        }
        DuplicateEdge { second, .. } => Some(second),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let hd = header(text, "G", "G <n> <m>")?;
    let n = hd.counts.0;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, t) in &hd.body {
        if t[0] != "E" || t.len() != 3 {
            return err(*line, "expected `E <u> <v>`");
        }
        edges.push((
            index(*line, t[1], n, "vertex")?,
            index(*line, t[2], n, "vertex")?,
        ));
        edge_lines.push(*line);
    }
    count_check(&hd, edges.len(), "edges")?;
    Graph::new(n, edges).or_else(|e| {
        use crate::graph::GraphError::*;
        let i = match e {
            Loop { edge, .. } | VertexOutOfRange { edge, .. } => edge,
            Parallel { second, .. } => second,
        };
        err(edge_lines[i], e.to_string())
    })
}

pub fn parse_permutations(text: &str) -> Result<PermutationFamily, ParseError> {
    let hd = header(text, "P", "P <k> <count>")?;
    let k = hd.counts.0;
    let mut perms = Vec::new();
    for (line, t) in &hd.body {
        if t.len() != k {
            return err(*line, format!("expected {k} images, found {}", t.len()));
        }
        perms.push(
            t.iter()
                .map(|tok| index(*line, tok, k, "image"))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    count_check(&hd, perms.len(), "permutations")?;
    PermutationFamily::new(k, perms).or_else(|e| err(hd.line, e.to_string()))
}

pub fn parse_formula(text: &str) -> Result<NaeFormula, ParseError> {
    let hd = header(text, "F", "F <vars> <clauses>")?;
    let vars = hd.counts.0;
    let mut clauses = Vec::new();
    for (line, t) in &hd.body {
        if t[0] != "C" {
            return err(*line, "expected `C <v1> …`");
        }
        let c = t[1..]
            .iter()
            .map(|tok| index(*line, tok, vars, "variable"))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(dup) = c.iter().enumerate().find(|(i, v)| c[..*i].contains(v)) {
            return err(*line, format!("variable {} repeated", dup.1 + 1));
        }
        clauses.push(c);
    }
    count_check(&hd, clauses.len(), "clauses")?;
    NaeFormula::new(vars, clauses).or_else(|e| err(hd.line, e.to_string()))
}

/// Reads `<v> <color>` lines covering every vertex `1..=n` exactly once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<Color>, ParseError> {
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for (line, t) in lines(text) {
        if t.len() != 2 {
            return err(line, "expected `<v> <color>`");
        }
        let v = index(line, t[0], n, "vertex")?;
        if colors[v].replace(number(line, t[1])?).is_some() {
            return err(line, format!("vertex {} colored twice", v + 1));
        }
    }
    match colors.iter().position(Option::is_none) {
        Some(v) => err(
            text.lines().count().max(1),
            format!("vertex {} has no color", v + 1),
        ),
        None => Ok(colors.into_iter().map(Option::unwrap).collect()),
    }
}

pub fn write_hypergraph(h: &Hypergraph, lists: Option<&ListAssignment>) -> String {
    let mut out = format!("H {} {}\n", h.n(), h.m());
    for e in h.edges() {
        out.push('E');
        for v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    if let Some(lists) = lists {
        for (v, l) in lists.lists().iter().enumerate() {
            let _ = write!(out, "L {}", v + 1);
            for c in l {
                let _ = write!(out, " {c}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("G {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "E {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_formula(phi: &NaeFormula) -> String {
    let mut out = format!("F {} {}\n", phi.vars(), phi.clauses().len());
    for c in phi.clauses() {
        out.push('C');
        for v in c {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

pub fn write_permutations(pi: &PermutationFamily) -> String {
    let mut out = format!("P {} {}\n", pi.arity(), pi.size());
    for sigma in pi.iter() {
        let images: Vec<String> = sigma.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "{}", images.join(" "));
    }
    out
}

/// `<v> <color>` lines and the iteration/seed trailer.
pub fn write_coloring(colors: &[Color], iterations: u64, seed: u64) -> String {
    let mut out = String::new();
    for (v, c) in colors.iter().enumerate() {
        let _ = writeln!(out, "{} {c}", v + 1);
    }
    let _ = writeln!(out, "# iterations {iterations} seed {seed}");
    out
}

/// `<edge> <label>` lines.
pub fn write_edge_labeling(labels: &[Color]) -> String {
    let mut out = String::new();
    for (e, c) in labels.iter().enumerate() {
        let _ = writeln!(out, "{} {c}", e + 1);
    }
    out
}

/// Edge lines as in [`write_edge_labeling`], then `<v> <label>` lines for
/// the vertices after a `# vertices` marker.
pub fn write_total_labeling(vertex_labels: &[Color], edge_labels: &[Color]) -> String {
    let mut out = String::from("# edges\n");
    out.push_str(&write_edge_labeling(edge_labels));
    out.push_str("# vertices\n");
    for (v, c) in vertex_labels.iter().enumerate() {
        let _ = writeln!(out, "{} {c}", v + 1);
    }
    out
}
