//! Two-label edge labelings of bipartite graphs that distinguish neighbors
//! by sets, through positive not-all-equal satisfiability.
//!
//! In a connected bipartite graph with such a labeling, one class sees both
//! labels at every vertex and the other class is monochromatic at every
//! vertex. Reading the monochromatic class as variables and the other class
//! as clauses turns the labeling into a truth assignment under which no
//! clause is constant, and back.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{distinguishes_edges, is_nice, Graph};
use crate::hypergraph::{Color, Hypergraph, Mode};

/// Formulas up to this many variables are solved by enumeration, larger
/// ones by backtracking.
pub const EXHAUSTIVE_VARS: usize = 20;

/// Largest graph accepted by [`gndi_bipartite`].
pub const MAX_GNDI_VERTICES: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GndiError {
    #[error("clause {clause} uses variable {var}, outside 0..{vars}")]
    VariableOutOfRange {
        clause: usize,
        var: usize,
        vars: usize,
    },
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has an isolated edge")]
    NotNice,
    #[error("graph has no edges")]
    TooSmall,
    #[error("graph has {n} vertices, at most {max} supported")]
    TooLarge { n: usize, max: usize },
    #[error("forced edge {edge} does not exist")]
    UnknownEdge { edge: usize },
    #[error("clause {clause} has {size} variables, the gadget needs 2 or 3")]
    BadClauseSize { clause: usize, size: usize },
    #[error("girth target {0} is below 4")]
    BadGirth(usize),
    #[error("labeling is invalid: {0}")]
    LabelingInvalid(String),
    #[error("vertex {vertex} of the variable class sees both labels")]
    ClassMismatch { vertex: usize },
}

/// A positive not-all-equal formula: a clause is satisfied unless all its
/// variables have the same value. Variables are `0..vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeFormula {
    vars: usize,
    clauses: Vec<Vec<usize>>,
}

impl NaeFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<usize>>) -> Result<Self, GndiError> {
        for (clause, c) in clauses.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &var in c {
                if var >= vars {
                    return Err(GndiError::VariableOutOfRange { clause, var, vars });
                }
                if !seen.insert(var) {
                    return Err(GndiError::RepeatedVariable { clause, var });
                }
            }
        }
        Ok(Self { vars, clauses })
    }

    /// One clause per line of the Fano plane, which admits no satisfying
    /// assignment.
    pub fn fano() -> Self {
        Self::from_hypergraph(crate::graph::Configuration::fano().hypergraph())
    }

    /// The clause system of a hypergraph's edges.
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let clauses = (0..h.m()).map(|e| h.edge(e).to_vec()).collect();
        Self {
            vars: h.n(),
            clauses,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }

    /// Occurrences of `var` over all clauses.
    pub fn occurrences(&self, var: usize) -> usize {
        self.clauses.iter().filter(|c| c.contains(&var)).count()
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|&v| assignment[v]) && c.iter().any(|&v| !assignment[v]))
    }

    /// Variables `0..vars`, then clause `c` as vertex `vars + c`.
    pub fn incidence_graph(&self) -> Graph {
        let edges = self
            .clauses
            .iter()
            .enumerate()
            .flat_map(|(c, vs)| vs.iter().map(move |&v| (v, self.vars + c)))
            .collect();
        Graph::new(self.vars + self.clauses.len(), edges).expect("incidence graphs are simple")
    }
}

/// The lexicographically least satisfying assignment (false before true,
/// variable 0 first) with every variable in `forced_true` set, if any.
pub fn nae_satisfiable(phi: &NaeFormula, forced_true: &[usize]) -> Option<Vec<bool>> {
    if forced_true.iter().any(|&v| v >= phi.vars) {
        return None;
    }
    if phi.vars <= EXHAUSTIVE_VARS {
        enumerate(phi, forced_true)
    } else {
        backtrack(phi, forced_true)
    }
}

fn enumerate(phi: &NaeFormula, forced_true: &[usize]) -> Option<Vec<bool>> {
    let n = phi.vars;
    // Variable i is bit n−1−i, so counting upwards walks assignments in
    // lexicographic order.
    let bit = |v: usize| 1u32 << (n - 1 - v);
    let masks: Vec<u32> = phi
        .clauses
        .iter()
        .map(|c| c.iter().map(|&v| bit(v)).sum())
        .collect();
    let forced: u32 = forced_true.iter().map(|&v| bit(v)).fold(0, |a, b| a | b);
    (0..1u32 << n)
        .filter(|a| a & forced == forced)
        .find(|&a| masks.iter().all(|&c| a & c != 0 && a & c != c))
        .map(|a| (0..n).map(|v| a & bit(v) != 0).collect())
}

fn backtrack(phi: &NaeFormula, forced_true: &[usize]) -> Option<Vec<bool>> {
    let n = phi.vars;
    // Each clause is checked once its largest variable is assigned.
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in phi.clauses.iter().enumerate() {
        match c.iter().max() {
            Some(&last) => closing[last].push(i),
            None => return None,
        }
    }
    let mut forced = vec![false; n];
    for &v in forced_true {
        forced[v] = true;
    }
    let mut assignment = vec![false; n];
    fn go(
        v: usize,
        phi: &NaeFormula,
        closing: &[Vec<usize>],
        forced: &[bool],
        a: &mut Vec<bool>,
    ) -> bool {
        if v == a.len() {
            return true;
        }
        let choices: &[bool] = if forced[v] { &[true] } else { &[false, true] };
        for &value in choices {
            a[v] = value;
            let ok = closing[v].iter().all(|&c| {
                let vals = &phi.clauses[c];
                vals.iter().any(|&u| a[u]) && vals.iter().any(|&u| !a[u])
            });
            if ok && go(v + 1, phi, closing, forced, a) {
                return true;
            }
        }
        false
    }
    go(0, phi, &closing, &forced, &mut assignment).then_some(assignment)
}

/// A 2-coloring of the vertices leaving no edge monochromatic.
pub fn property_b(h: &Hypergraph) -> Option<Vec<bool>> {
    nae_satisfiable(&NaeFormula::from_hypergraph(h), &[])
}

/// A bipartition class; `A` holds the least vertex of each component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    A,
    B,
}

/// A formula read off a bipartite graph, with the vertex behind every
/// variable and every clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedFormula {
    pub formula: NaeFormula,
    pub var_vertex: Vec<usize>,
    pub clause_vertex: Vec<usize>,
}

fn in_class(side: &[bool], v: usize, class: Class) -> bool {
    side[v] == (class == Class::A)
}

/// One variable per vertex of `class` and one clause per vertex of the other
/// class listing its neighbors' variables, both in vertex order.
pub fn derived_formula(g: &Graph, class: Class) -> Result<DerivedFormula, GndiError> {
    let side = g.bipartition().ok_or(GndiError::NotBipartite)?;
    let var_vertex: Vec<usize> = (0..g.n()).filter(|&v| in_class(&side, v, class)).collect();
    let clause_vertex: Vec<usize> = (0..g.n()).filter(|&v| !in_class(&side, v, class)).collect();
    let mut var_of = vec![usize::MAX; g.n()];
    for (i, &v) in var_vertex.iter().enumerate() {
        var_of[v] = i;
    }
    let clauses = clause_vertex
        .iter()
        .map(|&u| {
            let mut c: Vec<usize> = g.neighbors(u).map(|w| var_of[w]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let formula = NaeFormula::new(var_vertex.len(), clauses)?;
    Ok(DerivedFormula {
        formula,
        var_vertex,
        clause_vertex,
    })
}

fn label_of(value: bool) -> Color {
    if value {
        1
    } else {
        2
    }
}

/// Every edge takes label 1 when the variable of its endpoint in `class` is
/// true and 2 otherwise. The result is checked to distinguish neighbors.
pub fn labeling_from_assignment(
    g: &Graph,
    class: Class,
    assignment: &[bool],
) -> Result<Vec<Color>, GndiError> {
    let d = derived_formula(g, class)?;
    if assignment.len() != d.var_vertex.len() {
        return Err(GndiError::LabelingInvalid(format!(
            "{} values for {} variables",
            assignment.len(),
            d.var_vertex.len()
        )));
    }
    let mut value = vec![false; g.n()];
    for (i, &v) in d.var_vertex.iter().enumerate() {
        value[v] = assignment[i];
    }
    let side = g.bipartition().ok_or(GndiError::NotBipartite)?;
    let labels: Vec<Color> = g
        .edges()
        .iter()
        .map(|&(u, w)| label_of(value[if in_class(&side, u, class) { u } else { w }]))
        .collect();
    distinguishes_edges(g, &labels, Mode::Sets)
        .map_err(|e| GndiError::LabelingInvalid(e.to_string()))?;
    Ok(labels)
}

/// The inverse: a vertex of `class` is true when all its edges carry 1.
pub fn assignment_from_labeling(
    g: &Graph,
    class: Class,
    labels: &[Color],
) -> Result<Vec<bool>, GndiError> {
    check_two_labeling(g, labels)?;
    let d = derived_formula(g, class)?;
    d.var_vertex
        .iter()
        .map(|&v| {
            let seen: BTreeSet<Color> = g.incident(v).iter().map(|&e| labels[e]).collect();
            match seen.iter().copied().collect::<Vec<_>>().as_slice() {
                [1] => Ok(true),
                [2] => Ok(false),
                _ => Err(GndiError::ClassMismatch { vertex: v }),
            }
        })
        .collect()
}

fn check_two_labeling(g: &Graph, labels: &[Color]) -> Result<(), GndiError> {
    if let Some(e) = labels.iter().position(|&c| c != 1 && c != 2) {
        return Err(GndiError::LabelingInvalid(format!(
            "edge {e} has label {}",
            labels[e]
        )));
    }
    distinguishes_edges(g, labels, Mode::Sets)
        .map_err(|e| GndiError::LabelingInvalid(e.to_string()))
}

/// The classes of a bipartite graph and the split a valid two-labeling
/// induces: `y` sees both labels, `x1` and `x2` see only 1 or only 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteDecomposition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub y: Vec<usize>,
    pub x: Vec<usize>,
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
}

/// Splits the vertices by what they see under a valid two-labeling and
/// checks the structure this forces: the graph is bipartite, every edge
/// joins `x` to `y`, leaves lie in `x`, and a degree-two vertex of `y` has
/// one neighbor in each of `x1` and `x2`.
pub fn decompose(g: &Graph, labels: &[Color]) -> Result<BipartiteDecomposition, GndiError> {
    check_two_labeling(g, labels)?;
    let side = g.bipartition().ok_or(GndiError::NotBipartite)?;
    let seen = |v: usize| -> BTreeSet<Color> { g.incident(v).iter().map(|&e| labels[e]).collect() };
    let pick = |f: &dyn Fn(&BTreeSet<Color>) -> bool| -> Vec<usize> {
        (0..g.n())
            .filter(|&v| g.degree(v) > 0 && f(&seen(v)))
            .collect()
    };
    let y = pick(&|s| s.len() == 2);
    let x1 = pick(&|s| s.iter().eq([1].iter()));
    let x2 = pick(&|s| s.iter().eq([2].iter()));
    let mut x: Vec<usize> = x1.iter().chain(&x2).copied().collect();
    x.sort_unstable();
    let fail = |s: String| Err(GndiError::LabelingInvalid(s));
    let in_y = |v: usize| y.binary_search(&v).is_ok();
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| in_y(u) == in_y(v)) {
        return fail(format!("edge {u}–{v} does not join X and Y"));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1 && in_y(v)) {
        return fail(format!("leaf {v} sees both labels"));
    }
    for &v in y.iter().filter(|&&v| g.degree(v) == 2) {
        let mut in_x1 = g.neighbors(v).map(|w| x1.binary_search(&w).is_ok());
        if in_x1.next() == in_x1.next() {
            return fail(format!("both neighbors of {v} lie on the same side of X"));
        }
    }
    let a = (0..g.n()).filter(|&v| side[v]).collect();
    let b = (0..g.n()).filter(|&v| !side[v]).collect();
    Ok(BipartiteDecomposition { a, b, y, x, x1, x2 })
}

/// A valid labeling with labels 1 and 2 carrying 1 on every edge of
/// `forced_ones`, searched per component through the formulas derived from
/// either class. `None` means three labels are needed.
pub fn two_labeling(g: &Graph, forced_ones: &[usize]) -> Result<Option<Vec<Color>>, GndiError> {
    if g.m() == 0 {
        return Err(GndiError::TooSmall);
    }
    if g.n() > MAX_GNDI_VERTICES {
        return Err(GndiError::TooLarge {
            n: g.n(),
            max: MAX_GNDI_VERTICES,
        });
    }
    if let Some(&edge) = forced_ones.iter().find(|&&e| e >= g.m()) {
        return Err(GndiError::UnknownEdge { edge });
    }
    g.bipartition().ok_or(GndiError::NotBipartite)?;
    if !is_nice(g) {
        return Err(GndiError::NotNice);
    }
    let mut labels = vec![0; g.m()];
    for comp in g.components().into_iter().filter(|c| c.len() > 1) {
        let (sub, origin) = g.induced(&comp);
        let mut local = vec![usize::MAX; g.m()];
        for (i, &e) in origin.iter().enumerate() {
            local[e] = i;
        }
        let forced: Vec<usize> = forced_ones
            .iter()
            .map(|&e| local[e])
            .filter(|&e| e != usize::MAX)
            .collect();
        let Some(sub_labels) = component_labeling(&sub, &forced)? else {
            return Ok(None);
        };
        for (i, &e) in origin.iter().enumerate() {
            labels[e] = sub_labels[i];
        }
    }
    Ok(Some(labels))
}

fn component_labeling(g: &Graph, forced_ones: &[usize]) -> Result<Option<Vec<Color>>, GndiError> {
    let side = g.bipartition().ok_or(GndiError::NotBipartite)?;
    for class in [Class::A, Class::B] {
        let d = derived_formula(g, class)?;
        let mut var_of = vec![usize::MAX; g.n()];
        for (i, &v) in d.var_vertex.iter().enumerate() {
            var_of[v] = i;
        }
        // A forced edge fixes the variable of its endpoint in this class.
        let forced: Vec<usize> = forced_ones
            .iter()
            .map(|&e| {
                let (u, w) = g.edge(e);
                var_of[if in_class(&side, u, class) { u } else { w }]
            })
            .collect();
        if let Some(a) = nae_satisfiable(&d.formula, &forced) {
            return labeling_from_assignment(g, class, &a).map(Some);
        }
    }
    Ok(None)
}

/// The least number of labels, 2 or 3, for a nice bipartite graph when the
/// edges in `forced_ones` must carry label 1 in a two-labeling.
pub fn gndi_bipartite(g: &Graph, forced_ones: &[usize]) -> Result<usize, GndiError> {
    Ok(if two_labeling(g, forced_ones)?.is_some() {
        2
    } else {
        3
    })
}

/// A graph whose two-labelings mirror the satisfying assignments of a
/// formula with clauses of size 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    /// Spacing of the connectors along each variable path.
    pub spacing: usize,
    /// The path of each variable, from its first connector to its leaf.
    pub paths: Vec<Vec<usize>>,
    /// Connector vertices of each variable, one per occurrence.
    pub connectors: Vec<Vec<usize>>,
    pub clause_vertices: Vec<usize>,
}

/// Builds the reduction graph: a path of `spacing·d(v) + 1` vertices per
/// variable with a connector every `spacing` vertices, and one vertex per
/// clause joined to the connector of each of its occurrences. `spacing` is
/// the least multiple of 4 above `girth / 2`, so the graph is bipartite
/// and subcubic with girth at least `girth`.
pub fn hardness_gadget(phi: &NaeFormula, girth: usize) -> Result<Gadget, GndiError> {
    if girth < 4 {
        return Err(GndiError::BadGirth(girth));
    }
    if let Some((clause, c)) = phi
        .clauses
        .iter()
        .enumerate()
        .find(|(_, c)| !(2..=3).contains(&c.len()))
    {
        return Err(GndiError::BadClauseSize {
            clause,
            size: c.len(),
        });
    }
    let spacing = 4 * (girth / 8 + 1);
    let mut next = 0;
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    let mut connectors = Vec::new();
    for v in 0..phi.vars {
        let d = phi.occurrences(v);
        let path: Vec<usize> = (next..next + spacing * d + 1).collect();
        next += path.len();
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        connectors.push((0..d).map(|i| path[i * spacing]).collect::<Vec<_>>());
        paths.push(path);
    }
    let clause_vertices: Vec<usize> = (next..next + phi.clauses.len()).collect();
    let mut used = vec![0; phi.vars];
    for (c, vars) in phi.clauses.iter().enumerate() {
        for &v in vars {
            edges.push((connectors[v][used[v]], clause_vertices[c]));
            used[v] += 1;
        }
    }
    let graph = Graph::new(next + phi.clauses.len(), edges).expect("gadget is simple");
    Ok(Gadget {
        graph,
        spacing,
        paths,
        connectors,
        clause_vertices,
    })
}

/// The point-line incidence graph of the Fano plane: points `0..7`, then
/// line `l` as vertex `7 + l`.
pub fn fano_incidence() -> Graph {
    NaeFormula::fano().incidence_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn formula(vars: usize, clauses: &[&[usize]]) -> NaeFormula {
        NaeFormula::new(vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_formulas() {
        let phi = formula(3, &[&[0, 1, 2]]);
        assert_eq!(nae_satisfiable(&phi, &[]), Some(vec![false, false, true]));
        assert_eq!(nae_satisfiable(&phi, &[0]), Some(vec![true, false, false]));
        assert_eq!(nae_satisfiable(&formula(2, &[&[0, 1]]), &[0, 1]), None);
        assert_eq!(nae_satisfiable(&formula(1, &[&[0]]), &[]), None);
        assert_eq!(nae_satisfiable(&NaeFormula::fano(), &[]), None);
        assert!(NaeFormula::new(2, vec![vec![0, 2]]).is_err());
        assert!(NaeFormula::new(2, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn backtracking_matches_enumeration() {
        let mut state = 12345u64;
        let mut next = |m: usize| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize % m
        };
        for _ in 0..200 {
            let vars = 3 + next(8);
            let clauses: Vec<Vec<usize>> = (0..1 + next(12))
                .map(|_| {
                    let mut c: Vec<usize> = (0..vars).filter(|_| next(3) == 0).collect();
                    if c.len() < 2 {
                        c = vec![0, vars - 1];
                    }
                    c
                })
                .collect();
            let phi = NaeFormula::new(vars, clauses).unwrap();
            let forced: Vec<usize> = (0..vars).filter(|_| next(6) == 0).collect();
            let a = enumerate(&phi, &forced);
            assert_eq!(a, backtrack(&phi, &forced));
            if let Some(a) = a {
                assert!(phi.satisfied_by(&a));
            }
        }
    }

    #[test]
    fn property_b_examples() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert!(property_b(&h).is_some());
        let fano = crate::graph::Configuration::fano();
        assert_eq!(property_b(fano.hypergraph()), None);
    }

    #[test]
    fn derived_formulas() {
        let d = derived_formula(&complete_bipartite(3, 3), Class::A).unwrap();
        assert_eq!(d.formula.vars(), 3);
        assert_eq!(
            d.formula.clauses(),
            &[vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]]
        );
        // P3 with the middle vertex in class B.
        let d = derived_formula(&path(3), Class::A).unwrap();
        assert_eq!(
            (d.formula.vars(), d.formula.clauses()),
            (2, &[vec![0, 1]][..])
        );
        assert_eq!(
            derived_formula(&complete(3), Class::A),
            Err(GndiError::NotBipartite)
        );
    }

    #[test]
    fn incidence_graph_reconstructs_the_graph() {
        let g = cube();
        for class in [Class::A, Class::B] {
            let d = derived_formula(&g, class).unwrap();
            let inc = d.formula.incidence_graph();
            let vertex = |x: usize| {
                if x < d.var_vertex.len() {
                    d.var_vertex[x]
                } else {
                    d.clause_vertex[x - d.var_vertex.len()]
                }
            };
            let mapped: BTreeSet<(usize, usize)> = inc
                .edges()
                .iter()
                .map(|&(a, b)| (vertex(a).min(vertex(b)), vertex(a).max(vertex(b))))
                .collect();
            let original: BTreeSet<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(a, b)| (a.min(b), a.max(b)))
                .collect();
            assert_eq!(mapped, original);
        }
    }

    #[test]
    fn assignments_and_labelings() {
        let g = complete_bipartite(3, 3);
        let labels = labeling_from_assignment(&g, Class::A, &[true, false, false]).unwrap();
        for (e, &(u, _)) in g.edges().iter().enumerate() {
            assert_eq!(labels[e], if u == 0 { 1 } else { 2 });
        }
        assert_eq!(
            assignment_from_labeling(&g, Class::A, &labels).unwrap(),
            vec![true, false, false]
        );
        assert!(matches!(
            assignment_from_labeling(&g, Class::B, &labels),
            Err(GndiError::ClassMismatch { vertex: 3 })
        ));
        assert!(labeling_from_assignment(&g, Class::A, &[true, true, true]).is_err());
    }

    #[test]
    fn gndi_examples() {
        assert_eq!(gndi_bipartite(&path(4), &[]), Ok(3));
        assert_eq!(gndi_bipartite(&cycle(4), &[]), Ok(2));
        assert_eq!(gndi_bipartite(&complete_bipartite(3, 3), &[]), Ok(2));
        assert_eq!(gndi_bipartite(&path(3), &[]), Ok(2));
        let fano = fano_incidence();
        assert_eq!(
            (fano.n(), fano.m(), fano.regular_degree()),
            (14, 21, Some(3))
        );
        assert_eq!(gndi_bipartite(&fano, &[]), Ok(3));
        assert_eq!(gndi_bipartite(&path(2), &[]), Err(GndiError::NotNice));
        assert_eq!(gndi_bipartite(&cycle(5), &[]), Err(GndiError::NotBipartite));
    }

    #[test]
    fn forced_edges() {
        // On P3 both labelings use different labels on the two edges.
        assert_eq!(gndi_bipartite(&path(3), &[0]), Ok(2));
        assert_eq!(gndi_bipartite(&path(3), &[0, 1]), Ok(3));
        let l = two_labeling(&cycle(8), &[0, 3]).unwrap().unwrap();
        assert_eq!((l[0], l[3]), (1, 1));
        assert_eq!(
            two_labeling(&path(3), &[7]),
            Err(GndiError::UnknownEdge { edge: 7 })
        );
    }

    #[test]
    fn decompositions() {
        let g = cycle(4);
        let d = decompose(&g, &[1, 1, 2, 2]).unwrap();
        assert_eq!(d.y, vec![0, 2]);
        assert_eq!((d.x1.clone(), d.x2.clone()), (vec![1], vec![3]));
        let d = decompose(&star(3), &[1, 2, 1]).unwrap();
        assert_eq!(d.y, vec![0]);
        assert_eq!((d.x1, d.x2), (vec![1, 3], vec![2]));
        assert!(decompose(&g, &[1, 1, 1, 1]).is_err());
        assert!(decompose(&g, &[1, 1, 3, 3]).is_err());
    }

    #[test]
    fn gadget_for_one_binary_clause() {
        let gad = hardness_gadget(&formula(2, &[&[0, 1]]), 4).unwrap();
        assert_eq!(gad.spacing, 4);
        assert_eq!(gad.graph.n(), 11);
        assert_eq!(gndi_bipartite(&gad.graph, &[]), Ok(2));
    }

    #[test]
    fn gadget_structure() {
        let phi = formula(4, &[&[0, 1, 2], &[1, 2, 3], &[0, 3], &[0, 1, 3]]);
        for g in [4, 6, 8, 9] {
            let gad = hardness_gadget(&phi, g).unwrap();
            assert_eq!(gad.spacing % 4, 0);
            assert!(2 * gad.spacing > g);
            assert!(gad.graph.max_degree() <= 3);
            assert!(gad.graph.bipartition().is_some());
            assert!(gad.graph.girth().is_none_or(|c| c >= g));
        }
        assert_eq!(
            hardness_gadget(&formula(2, &[&[0]]), 4),
            Err(GndiError::BadClauseSize { clause: 0, size: 1 })
        );
        assert_eq!(hardness_gadget(&phi, 3), Err(GndiError::BadGirth(3)));
    }
}
