mod common;

use common::random_lists;
use ied_core::generate::{random_regular_graph, random_uniform_hypergraph};
use ied_core::gndi::{
    assignment_from_labeling, decompose, derived_formula, gndi_bipartite, hardness_gadget,
    labeling_from_assignment, nae_satisfiable, property_b, two_labeling, Class, NaeFormula,
};
use ied_core::graph::families::{cube, cycle, path, petersen};
use ied_core::graph::{
    distinguishes_edges, distinguishes_total, dual_hypergraph, is_nice, label_edges, label_total,
    total_hypergraph, verify_gap,
};
use ied_core::oracle::{
    all_labelings, brute_force_gndi, brute_force_total, connected_bipartite_graphs,
    for_each_labeling,
};
use ied_core::{bound_iedm, bound_ieds, DrawSequence, Graph, Mode, RunOptions};
use proptest::prelude::*;

#[test]
fn dual_hypergraph_mirrors_the_graph() {
    for (k, n, seed) in [(3, 12, 1), (4, 15, 2), (5, 10, 3)] {
        let g = random_regular_graph(n, k, seed).unwrap();
        let h = dual_hypergraph(&g).unwrap();
        assert_eq!((h.n(), h.m()), (g.m(), g.n()));
        assert_eq!(h.uniformity().unwrap(), k);
        assert_eq!(h.max_degree(), 2);
        for e in 0..g.m() {
            let (u, v) = g.edge(e);
            let mut at: Vec<usize> = h.edges_at(e).to_vec();
            at.sort_unstable();
            assert_eq!(at, vec![u.min(v), u.max(v)]);
        }
        // Adjacent vertices share exactly their common edge.
        for &(u, v) in g.edges() {
            assert_eq!(h.intersection(u, v).len(), 1);
        }
    }
}

#[test]
fn total_hypergraph_mirrors_the_graph() {
    let g = petersen();
    let h = total_hypergraph(&g).unwrap();
    assert_eq!((h.n(), h.m()), (g.n() + g.m(), g.n()));
    assert_eq!(h.uniformity().unwrap(), 4);
    for v in 0..g.n() {
        assert_eq!(h.degree(v), 1);
    }
    for e in 0..g.m() {
        assert_eq!(h.degree(g.n() + e), 2);
    }
}

#[test]
fn edge_labelings_pass_both_checks() {
    for (k, n, seed) in [(3, 20, 4), (4, 16, 5)] {
        let g = random_regular_graph(n, k, seed).unwrap();
        for mode in [Mode::Sets, Mode::Multisets] {
            let spectrum = dual_hypergraph(&g).unwrap().difference_spectrum().unwrap();
            let r = match mode {
                Mode::Sets => bound_ieds(k, 2, &spectrum),
                Mode::Multisets => bound_iedm(k, 2, &spectrum),
            }
            .unwrap() as usize;
            for s in 0..5 {
                let lists = random_lists(g.m(), r, s);
                let draws = DrawSequence::seeded(s, r).unwrap();
                let options = RunOptions {
                    max_iters: Some(1_000_000),
                    audit: true,
                };
                let lab = label_edges(&g, &lists, mode, &draws, options).unwrap();
                distinguishes_edges(&g, &lab.labels, mode).unwrap();
                for (e, &c) in lab.labels.iter().enumerate() {
                    assert!(lists.list(e).contains(&c));
                }
            }
        }
    }
}

#[test]
fn total_labelings_pass_both_checks() {
    let g = cube();
    let h = total_hypergraph(&g).unwrap();
    let r = bound_ieds(4, 2, &h.difference_spectrum().unwrap()).unwrap() as usize;
    for s in 0..5 {
        let lists = random_lists(g.n() + g.m(), r, s);
        let draws = DrawSequence::seeded(s, r).unwrap();
        let lab = label_total(&g, &lists, Mode::Sets, &draws, RunOptions::default()).unwrap();
        distinguishes_total(&g, &lab.vertex_labels, &lab.edge_labels, Mode::Sets).unwrap();
    }
}

#[test]
fn two_label_total_labelings_need_bipartite_graphs() {
    // A total labeling with labels 1 and 2 in which neighbors see different
    // sets exists for these connected graphs only when they are bipartite.
    let cases: Vec<(Graph, bool)> = vec![
        (path(4), true),
        (cycle(4), true),
        (cycle(6), true),
        (cycle(3), false),
        (cycle(5), false),
        (cycle(7), false),
    ];
    for (g, bipartite) in cases {
        assert_eq!(g.bipartition().is_some(), bipartite);
        let found = brute_force_total(&g, 2, Mode::Sets).unwrap();
        if !bipartite {
            assert!(found.is_none(), "odd cycle on {} vertices", g.n());
        }
        if let Some((vl, el)) = found {
            distinguishes_total(&g, &vl, &el, Mode::Sets).unwrap();
        }
    }
}

#[test]
fn gap_and_two_labeling_agree_on_small_bipartite_graphs() {
    for n in 3..=6 {
        for g in connected_bipartite_graphs(n) {
            if g.min_degree() < 2 {
                continue;
            }
            for labels in all_labelings(&g, 2, Mode::Sets) {
                verify_gap(&g, &labels).unwrap();
            }
        }
    }
}

#[test]
fn two_labelings_have_the_forced_structure() {
    for n in 3..=7 {
        for g in connected_bipartite_graphs(n) {
            if !is_nice(&g) {
                continue;
            }
            for labels in all_labelings(&g, 2, Mode::Sets) {
                let d = decompose(&g, &labels).unwrap();
                // In a connected graph one whole class sees a single label.
                assert!(d.x == d.a || d.x == d.b);
                assert_eq!(d.x.len(), d.x1.len() + d.x2.len());
            }
        }
    }
}

#[test]
fn assignments_and_labelings_correspond() {
    for n in 3..=7 {
        for g in connected_bipartite_graphs(n) {
            if !is_nice(&g) {
                continue;
            }
            for class in [Class::A, Class::B] {
                let d = derived_formula(&g, class).unwrap();
                let sat = nae_satisfiable(&d.formula, &[]);
                if let Some(a) = &sat {
                    let labels = labeling_from_assignment(&g, class, a).unwrap();
                    assert_eq!(&assignment_from_labeling(&g, class, &labels).unwrap(), a);
                }
            }
            let either = [Class::A, Class::B]
                .iter()
                .any(|&c| nae_satisfiable(&derived_formula(&g, c).unwrap().formula, &[]).is_some());
            assert_eq!(either, two_labeling(&g, &[]).unwrap().is_some());
        }
    }
}

fn small_formulas() -> Vec<NaeFormula> {
    vec![
        NaeFormula::new(2, vec![vec![0, 1]]).unwrap(),
        NaeFormula::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap(),
        NaeFormula::new(3, vec![vec![0, 1, 2]]).unwrap(),
        NaeFormula::new(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]]).unwrap(),
        NaeFormula::new(3, vec![vec![0, 1, 2], vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap(),
    ]
}

#[test]
fn gadget_labelings_follow_assignments() {
    for phi in small_formulas() {
        let gadget = hardness_gadget(&phi, 4).unwrap();
        let g = &gadget.graph;
        assert!(g.bipartition().is_some());
        assert!(g.max_degree() <= 3);
        assert!(g.girth().is_none_or(|c| c >= 4));
        let sat = nae_satisfiable(&phi, &[]).is_some();
        let mut any = false;
        for_each_labeling(g, 2, Mode::Sets, |labels| {
            any = true;
            // Each path is rigid: its connectors all see one label, and that
            // label gives a satisfying assignment.
            let assignment: Vec<bool> = (0..phi.vars())
                .map(|v| {
                    if gadget.connectors[v].is_empty() {
                        return true;
                    }
                    let first = labels[g.incident(gadget.connectors[v][0])[0]];
                    for &c in &gadget.connectors[v] {
                        for &e in g.incident(c) {
                            assert_eq!(labels[e], first, "connector edges of variable {v}");
                        }
                    }
                    first == 1
                })
                .collect();
            assert!(phi.satisfied_by(&assignment));
            true
        });
        assert_eq!(any, sat);
        assert_eq!(gndi_bipartite(g, &[]).unwrap() == 2, sat);
    }
}

#[test]
fn fano_subformulas_give_satisfiable_gadgets() {
    let fano = NaeFormula::fano();
    let clauses = fano.clauses().to_vec();
    for skip in 0..clauses.len() {
        let rest: Vec<Vec<usize>> = clauses
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, c)| c.clone())
            .collect();
        let phi = NaeFormula::new(7, rest).unwrap();
        assert!(nae_satisfiable(&phi, &[]).is_some());
        let gadget = hardness_gadget(&phi, 6).unwrap();
        assert!(gadget.graph.girth().is_none_or(|c| c >= 6));
        assert_eq!(gndi_bipartite(&gadget.graph, &[]).unwrap(), 2);
    }
    let gadget = hardness_gadget(&fano, 4).unwrap();
    assert_eq!(gndi_bipartite(&gadget.graph, &[]).unwrap(), 3);
}

#[test]
fn four_regular_four_uniform_hypergraphs_have_property_b() {
    for seed in 0..20 {
        let h = random_uniform_hypergraph(16, 4, 16, 4, seed).unwrap();
        if (0..h.n()).all(|v| h.degree(v) == 4) {
            let split = property_b(&h).expect("two-colorable");
            for e in h.edges() {
                assert!(e.iter().any(|&v| split[v]) && e.iter().any(|&v| !split[v]));
            }
        }
    }
}

#[test]
fn gndi_matches_the_oracle_on_random_bipartite_graphs() {
    for seed in 0..30u64 {
        let g = random_regular_graph(8, 3, seed).unwrap();
        if g.bipartition().is_none() {
            continue;
        }
        assert_eq!(
            gndi_bipartite(&g, &[]).unwrap(),
            brute_force_gndi(&g).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn property_b_is_nae_satisfiability(
        n in 4usize..=10,
        k in 2usize..=4,
        m in 1usize..=10,
        seed in any::<u64>(),
    ) {
        let choices = (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        prop_assume!(k <= n && m * k <= n * 4 && 2 * m <= choices);
        let h = random_uniform_hypergraph(n, k, m, 4, seed).unwrap();
        let phi = NaeFormula::from_hypergraph(&h);
        let by_search = nae_satisfiable(&phi, &[]);
        let split = property_b(&h);
        prop_assert_eq!(by_search.is_some(), split.is_some());
        if let Some(s) = split {
            prop_assert!(phi.satisfied_by(&s));
        }
    }
}
