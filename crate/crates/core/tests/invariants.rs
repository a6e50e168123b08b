//! Exhaustive invariant scans over small labeled graphs.

use cisgraph::bitset::VertexSet;
use cisgraph::counterexample::{
    build_counterexample, exact_alpha_omega, glue_triangles, CounterexampleRecipe, ORACLE_VERTEX_CAP,
};
use cisgraph::enumerate::{graph_from_index, labeled_count, labeled_graphs};
use cisgraph::line::{contains_induced, is_domino, line_graph_weighted, triangle_free_multigraph_root, Pattern};
use cisgraph::oracle::{
    alpha, find_unsettled, is_cis, is_cis_bruteforce, is_simplicial_clique, is_strong_clique, maximal_cliques,
    maximal_stable_sets, omega, CombKind,
};
use cisgraph::random::{random_claw_free, random_connected, random_triangle_free, random_weights, rng};
use cisgraph::recognition::check_alpha_omega;
use cisgraph::{Error, Graph};

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| labeled_graphs(n).unwrap())
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u32..(1 << n)).map(move |mask| {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        VertexSet::from_slice(n, &members)
    })
}

// Maximal cliques by filtering the whole subset lattice.
fn cliques_by_subsets(g: &Graph) -> Vec<Vec<usize>> {
    let cliques: Vec<VertexSet> = subsets(g.n()).filter(|s| g.is_clique(s)).collect();
    let mut out: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|c| !cliques.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .map(VertexSet::to_vec)
        .collect();
    out.sort();
    out
}

#[test]
fn clique_enumeration_is_complete_up_to_six_vertices() {
    for g in all_graphs(6) {
        let got = maximal_cliques(&g).unwrap();
        assert_eq!(got.to_vecs(), cliques_by_subsets(&g), "{g:?}");
        assert_eq!(maximal_stable_sets(&g).unwrap(), maximal_cliques(&g.complement()).unwrap());
        assert_eq!(omega(&g), got.max_size());
        assert_eq!(alpha(&g), maximal_stable_sets(&g).unwrap().max_size());
    }
}

#[test]
fn strong_and_simplicial_cliques() {
    for g in all_graphs(6) {
        let maximal = maximal_cliques(&g).unwrap();
        for c in subsets(g.n()).filter(|s| g.is_clique(s)) {
            let strong = is_strong_clique(&g, &c).unwrap();
            if strong {
                assert!(maximal.sets.contains(&c), "strong clique {c:?} not maximal in {g:?}");
            }
            if is_simplicial_clique(&g, &c) {
                assert!(strong, "simplicial clique {c:?} not strong in {g:?}");
            }
        }
    }
}

#[test]
fn cis_is_closed_under_complement_and_twin_reduction() {
    for g in all_graphs(6) {
        let cis = is_cis(&g).unwrap();
        assert_eq!(cis, is_cis(&g.complement()).unwrap(), "{g:?}");
        let by_parts = g.components().iter().all(|comp| {
            let sub = g.induced_subgraph(&comp.to_vec()).unwrap();
            is_cis(&sub.true_twin_reduction().graph).unwrap()
        });
        assert_eq!(cis, by_parts, "{g:?}");
    }
}

#[test]
fn cis_graphs_have_no_unsettled_small_combs() {
    for g in all_graphs(6).filter(|g| is_cis(g).unwrap()) {
        assert_eq!(find_unsettled(&g, 3, CombKind::Comb).unwrap(), None);
        assert_eq!(find_unsettled(&g, 3, CombKind::Anticomb).unwrap(), None);
    }
}

#[test]
fn dominoes_are_claw_gem_w4_free() {
    for n in 1..=7 {
        for g in labeled_graphs(n).unwrap().filter(Graph::is_connected) {
            let free = [Pattern::Claw, Pattern::Gem, Pattern::W4].iter().all(|&p| contains_induced(&g, p).is_none());
            assert_eq!(is_domino(&g).unwrap(), free, "{g:?}");
        }
    }
}

#[test]
fn weighted_line_graphs_of_triangle_free_graphs_are_dominoes() {
    let mut r = rng(41);
    for i in 0..400 {
        let mut h = random_triangle_free(2 + i % 6, 0.7, &mut r);
        if h.edge_count() == 0 {
            h.add_edge(0, 1);
        }
        let g = line_graph_weighted(&random_weights(h, 3, &mut r)).unwrap();
        assert!(is_domino(&g).unwrap(), "{g:?}");
        assert!(triangle_free_multigraph_root(&g).is_some(), "{g:?}");
    }
}

#[test]
fn connected_co_connected_claw_free_cis_graphs_have_triangle_free_roots() {
    let mut r = rng(43);
    let scan = all_graphs(6).chain((0..20_000).map(|i| random_claw_free(7 + i % 3, &mut r)));
    let mut seen = 0;
    for g in scan {
        if !g.is_connected() || !g.complement().is_connected() || contains_induced(&g, Pattern::Claw).is_some() {
            continue;
        }
        if !is_cis(&g).unwrap() {
            continue;
        }
        seen += 1;
        assert!(triangle_free_multigraph_root(&g).is_some(), "{g:?}");
    }
    assert!(seen > 100);
}

#[test]
fn weighted_line_graphs_that_are_cis_satisfy_the_bound() {
    let mut r = rng(47);
    let mut cis = 0;
    for i in 0..3_000 {
        let h = random_connected(2 + i % 6, 0.3, &mut r);
        if !h.is_triangle_free() {
            continue;
        }
        let g = line_graph_weighted(&random_weights(h, 3, &mut r)).unwrap();
        if is_cis(&g).unwrap() {
            cis += 1;
            assert!(check_alpha_omega(&g).bound_holds, "{g:?}");
        }
    }
    assert!(cis > 100);
}

// Smallest labeled index over all relabelings.
fn canonical_index(g: &Graph) -> u64 {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = g.n();
    permutations(n)
        .iter()
        .map(|perm| {
            let h = g.relabel(perm).unwrap();
            let mut idx = 0u64;
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if h.has_edge(i, j) {
                        idx |= 1 << k;
                    }
                    k += 1;
                }
            }
            idx
        })
        .min()
        .unwrap()
}

#[test]
fn counterexample_accounting_matches_the_oracle() {
    let mut bases = Vec::new();
    for n in 2..=6 {
        let mut seen = std::collections::BTreeSet::new();
        for idx in 0..labeled_count(n) {
            let h = graph_from_index(n, idx);
            if h.is_triangle_free() && h.isolated_vertices().is_empty() && seen.insert(canonical_index(&h)) {
                bases.push(h);
            }
        }
    }
    // Triangle-free graphs without isolated vertices on 2..=6 vertices.
    assert_eq!(bases.len(), 1 + 1 + 4 + 7 + 24);
    let mut verified = 0;
    for h in &bases {
        let glued = glue_triangles(h).unwrap();
        assert!(maximal_cliques(&glued).unwrap().iter().all(|c| is_simplicial_clique(&glued, c)));
        for p in 1..=3 {
            let r = CounterexampleRecipe::new(h.clone(), p).unwrap();
            let g = build_counterexample(&r).unwrap();
            assert_eq!(g.n(), p * p * h.n() + h.edge_count());
            assert_eq!(exact_alpha_omega(&r).unwrap(), (alpha(&g), omega(&g)), "{h:?} p={p}");
            if g.n() <= ORACLE_VERTEX_CAP {
                match is_cis_bruteforce(&g) {
                    Ok(outcome) => {
                        assert!(outcome.cis, "{h:?} p={p}");
                        verified += 1;
                    }
                    Err(Error::CapExceeded { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(verified >= 2 * bases.len());
}
