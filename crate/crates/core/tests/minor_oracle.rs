mod common;

use geomgraph::graph::{contract_edge, named};
use geomgraph::minor::{has_minor, verify_minor_model};
use geomgraph::Graph;
use proptest::prelude::*;

use common::{brute_force_minor, graphs_up_to_isomorphism, random_graph};

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| graphs_up_to_isomorphism(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

#[test]
fn agrees_with_brute_force_on_all_small_graphs() {
    let patterns = [
        ("K4", named::complete(4)),
        ("K5", named::complete(5)),
        ("K33", named::complete_bipartite(3, 3)),
        ("C4", named::cycle(4)),
    ];
    for n in 1..=6 {
        for g in graphs_up_to_isomorphism(n) {
            for (name, h) in &patterns {
                let got = has_minor(&g, h).unwrap();
                assert_eq!(
                    got.is_some(),
                    brute_force_minor(&g, h),
                    "{name} in {:?}",
                    g.edges().collect::<Vec<_>>()
                );
                if let Some(model) = got {
                    assert!(verify_minor_model(&g, &model).unwrap().valid);
                }
            }
        }
    }
}

#[test]
fn disconnected_patterns_against_brute_force() {
    let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let tri_plus_point = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
    for seed in 0..40 {
        let g = random_graph(6, 35, seed);
        for h in [&two_edges, &tri_plus_point] {
            assert_eq!(has_minor(&g, h).unwrap().is_some(), brute_force_minor(&g, h), "seed {seed}");
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adding_an_edge_keeps_minors(g in arb_graph(8), u in 0usize..8, v in 0usize..8) {
        let (u, v) = (u % g.n(), v % g.n());
        prop_assume!(u != v && !g.has_edge(u, v));
        let bigger = g.with_edge(u, v).unwrap();
        for t in 3..=5 {
            let h = named::complete(t);
            if has_minor(&g, &h).unwrap().is_some() {
                prop_assert!(has_minor(&bigger, &h).unwrap().is_some());
            }
        }
    }

    #[test]
    fn minors_of_contractions_are_minors(g in arb_graph(8), pick in any::<usize>()) {
        prop_assume!(g.m() > 0);
        let e = g.edges().nth(pick % g.m()).unwrap();
        let c = contract_edge(&g, e).unwrap().graph;
        for h in [named::complete(4), named::complete_bipartite(2, 3)] {
            if has_minor(&c, &h).unwrap().is_some() {
                prop_assert!(has_minor(&g, &h).unwrap().is_some());
            }
        }
    }

    #[test]
    fn too_few_edges_means_no_clique(g in arb_graph(8), t in 3usize..6) {
        if g.m() < t * (t - 1) / 2 {
            prop_assert!(has_minor(&g, &named::complete(t)).unwrap().is_none());
        }
    }
}
