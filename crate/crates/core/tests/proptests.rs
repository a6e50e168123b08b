use proptest::prelude::*;

use cisgraph::io::{parse_graph, write_graph, Format};
use cisgraph::line::{line_graph, line_graph_weighted, line_root, WeightedGraph};
use cisgraph::matching::{is_absorbing, is_perfect_internal, maximal_matchings, recognize_rim};
use cisgraph::oracle::{alpha, find_settler, is_cis, maximal_cliques, maximal_stable_sets, omega};
use cisgraph::random::{gnp, random_claw_free, random_connected, random_triangle_free, rng};
use cisgraph::recognition::{classify_claw_free_cis, recognize_claw_free_cis, Refutation, Verdict};
use cisgraph::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0..1.0).prop_map(|(n, seed, p)| gnp(n, p, &mut rng(seed)))
}

fn component_multiset(g: &Graph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = g
        .components()
        .iter()
        .map(|c| {
            let sub = g.induced_subgraph(&c.to_vec()).unwrap();
            (sub.n(), sub.edge_count())
        })
        .collect();
    out.sort_unstable();
    out
}

fn is_maximal_clique(g: &Graph, set: &[usize]) -> bool {
    let s = g.set_of(set);
    g.is_clique(&s) && (0..g.n()).all(|v| s.contains(v) || set.iter().any(|&u| !g.has_edge(u, v)))
}

fn is_induced_claw(g: &Graph, vs: &[usize]) -> bool {
    vs.len() == 4
        && vs.iter().any(|&c| {
            let leaves: Vec<usize> = vs.iter().copied().filter(|&v| v != c).collect();
            leaves.iter().all(|&l| g.has_edge(c, l)) && g.is_stable(&g.set_of(&leaves))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn disjoint_union_is_associative(a in graph(5), b in graph(5), c in graph(5)) {
        let left = a.disjoint_union(&b).disjoint_union(&c);
        let right = a.disjoint_union(&b.disjoint_union(&c));
        prop_assert_eq!(component_multiset(&left), component_multiset(&right));
        prop_assert_eq!(left.n(), a.n() + b.n() + c.n());
    }

    #[test]
    fn substituting_single_vertices_is_the_identity(g in graph(10)) {
        let parts = vec![Graph::empty(1); g.n()];
        prop_assert_eq!(g.substitute(&parts).unwrap(), g);
    }

    #[test]
    fn substitution_preserves_cis(g in graph(5), sizes in prop::collection::vec(1usize..3, 5), cliques in any::<u8>()) {
        let parts: Vec<Graph> = (0..g.n())
            .map(|v| if cliques >> v & 1 == 1 { Graph::complete(sizes[v]) } else { Graph::empty(sizes[v]) })
            .collect();
        let h = g.substitute(&parts).unwrap();
        prop_assert_eq!(h.n(), sizes[..g.n()].iter().sum::<usize>());
        if is_cis(&g).unwrap() {
            prop_assert!(is_cis(&h).unwrap());
        }
    }

    #[test]
    fn corona_counts(g in graph(10)) {
        let c = g.corona();
        prop_assert_eq!(c.n(), 2 * g.n());
        prop_assert_eq!(c.edge_count(), g.edge_count() + g.n());
    }

    #[test]
    fn twin_reduction(g in graph(10)) {
        let red = g.true_twin_reduction();
        prop_assert!(red.graph.is_true_twin_free());
        prop_assert_eq!(red.graph.true_twin_reduction().graph, red.graph.clone());
        for u in 0..g.n() {
            for v in 0..g.n() {
                let (cu, cv) = (red.class_of[u], red.class_of[v]);
                if cu != cv {
                    prop_assert_eq!(g.has_edge(u, v), red.graph.has_edge(cu, cv));
                } else if u != v {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph(40)) {
        for format in [Format::Graph6, Format::EdgeList] {
            prop_assert_eq!(parse_graph(&write_graph(&g, format), format).unwrap(), g.clone());
        }
    }

    #[test]
    fn stable_sets_are_cliques_of_the_complement(g in graph(9)) {
        prop_assert_eq!(maximal_stable_sets(&g).unwrap(), maximal_cliques(&g.complement()).unwrap());
        prop_assert_eq!(alpha(&g), omega(&g.complement()));
        prop_assert_eq!(is_cis(&g).unwrap(), is_cis(&g.complement()).unwrap());
    }

    #[test]
    fn clique_enumeration_is_sound(g in graph(14)) {
        let cliques = maximal_cliques(&g).unwrap();
        for c in cliques.iter() {
            prop_assert!(g.is_clique(c));
            let mut extend = g.vertex_set();
            for v in c {
                extend.intersect_with(g.neighbors(v));
            }
            prop_assert!(extend.is_empty());
        }
        prop_assert_eq!(omega(&g), cliques.max_size());
        let mut sorted = cliques.to_vecs();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, cliques.to_vecs());
    }

    #[test]
    fn perfect_internal_maximal_matchings_absorb(g in graph(8)) {
        let triangle_free = g.is_triangle_free();
        for m in maximal_matchings(&g).unwrap() {
            let pim = is_perfect_internal(&g, &m).unwrap();
            let absorbing = is_absorbing(&g, &m).unwrap();
            if pim && g.edge_count() > 0 {
                prop_assert!(absorbing);
            }
            if triangle_free {
                prop_assert_eq!(pim, absorbing);
            }
        }
    }

    #[test]
    fn leaf_extensions_are_rim(seed in any::<u64>(), n in 1usize..6, extra in prop::collection::vec(0usize..3, 6)) {
        let core = random_connected(n, 0.5, &mut rng(seed));
        let sizes: Vec<usize> = (0..n).map(|v| 1 + extra[v]).collect();
        let g = core.leaf_extension(&sizes).unwrap();
        let form = recognize_rim(&g).unwrap();
        prop_assert!(form.is_rim());
        prop_assert!(form.verify(&g));
    }

    #[test]
    fn unit_weights_give_the_plain_line_graph(g in graph(9)) {
        prop_assume!(g.edge_count() > 0);
        prop_assert_eq!(line_graph_weighted(&WeightedGraph::unit(g.clone())).unwrap(), line_graph(&g).unwrap().0);
    }

    #[test]
    fn line_roots_certify(seed in any::<u64>(), n in 2usize..10) {
        let h = random_connected(n, 0.3, &mut rng(seed));
        let (l, _) = line_graph(&h).unwrap();
        let cert = line_root(&l).unwrap();
        prop_assert!(cert.verify(&l));
        prop_assert_eq!(cert.root().edge_count(), h.edge_count());
    }

    #[test]
    fn line_graphs_of_triangle_free_coronas_are_cis(seed in any::<u64>(), n in 1usize..7) {
        let core = random_triangle_free(n, 0.6, &mut rng(seed));
        let (l, _) = line_graph(&core.corona()).unwrap();
        prop_assert_eq!(classify_claw_free_cis(&l), Verdict::Cis);
        prop_assert!(is_cis(&l).unwrap());
    }

    #[test]
    fn recognizer_agrees_with_oracle(g in graph(9)) {
        let report = recognize_claw_free_cis(&g);
        prop_assert_eq!(report.verdict, classify_claw_free_cis(&g));
        match report.verdict {
            Verdict::NotClawFree => prop_assert!(report.refutation.is_some()),
            Verdict::Cis => {
                prop_assert!(is_cis(&g).unwrap());
                prop_assert!(report.components.iter().all(|c| c.form.is_some()));
            }
            Verdict::NotCis => {
                prop_assert!(!is_cis(&g).unwrap());
                prop_assert!(report.refutation.is_some());
            }
        }
    }

    #[test]
    fn refutations_hold_on_the_input(seed in any::<u64>(), n in 4usize..10, claw_free in any::<bool>()) {
        let g = if claw_free { random_claw_free(n, &mut rng(seed)) } else { gnp(n, 0.5, &mut rng(seed)) };
        let report = recognize_claw_free_cis(&g);
        match report.refutation {
            Some(Refutation::Claw { vertices }) => prop_assert!(is_induced_claw(&g, &vertices)),
            Some(Refutation::UnsettledComb { witness, .. }) => {
                prop_assert!(witness.verify(&g));
                prop_assert_eq!(find_settler(&g, &witness), None);
            }
            Some(Refutation::DisjointPair { clique, stable_set, .. }) => {
                prop_assert!(is_maximal_clique(&g, &clique));
                prop_assert!(is_maximal_clique(&g.complement(), &stable_set));
                prop_assert!(clique.iter().all(|v| !stable_set.contains(v)));
            }
            _ => {}
        }
    }
}
