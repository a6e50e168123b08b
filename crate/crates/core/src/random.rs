//! Seeded random graph generators used by sample scans and tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::line::{line_graph, line_graph_weighted, WeightedGraph};

pub type GraphRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random spanning tree (random attachment) plus `G(n, p)` edges.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = gnp(n, p, rng);
    let order = random_permutation(n, rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]);
    }
    g
}

/// A connected graph on `n` vertices with exactly `m` edges, for
/// `n - 1 ≤ m ≤ n(n-1)/2`.
pub fn random_connected_with_edges<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    assert!(m + 1 >= n && m <= n * (n - 1) / 2, "edge count {m} impossible for a connected graph on {n} vertices");
    let mut g = random_connected(n, 0.0, rng);
    let mut missing: Vec<(usize, usize)> = g.complement().edges();
    missing.shuffle(rng);
    for &(u, v) in missing.iter().take(m - g.edge_count()) {
        g.add_edge(u, v);
    }
    g
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

pub fn shuffle_labels<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    g.relabel(&random_permutation(g.n(), rng)).expect("a shuffle is a permutation")
}

/// Triangle-free process: edges are offered in random order and kept when
/// they close no triangle. `density` is the probability of offering each
/// pair at all.
pub fn random_triangle_free<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if rng.gen_bool(density) && g.neighbors(u).is_disjoint(g.neighbors(v)) {
            g.add_edge(u, v);
        }
    }
    g
}

/// Joins every isolated vertex to the lowest-index vertex it can reach
/// without closing a triangle. Returns `false` when some vertex cannot be
/// repaired (only possible for `n = 1`).
pub fn repair_isolated(g: &mut Graph) -> bool {
    for v in 0..g.n() {
        if g.degree(v) > 0 {
            continue;
        }
        let Some(u) = (0..g.n()).find(|&u| u != v) else {
            return false;
        };
        // v is isolated, so no triangle can form through the new edge.
        g.add_edge(v, u);
    }
    true
}

/// A connected graph from one of the three RIM families: `K_{2m}`,
/// `K_{m,m}` or a leaf extension of a random connected core, with labels
/// shuffled. Orders stay within `max_order`.
pub fn random_rim<R: Rng>(max_order: usize, rng: &mut R) -> Graph {
    assert!(max_order >= 2);
    let g = match rng.gen_range(0..3) {
        0 => Graph::complete(2 * rng.gen_range(1..=max_order / 2)),
        1 => {
            let m = rng.gen_range(1..=max_order / 2);
            let mut g = Graph::empty(2 * m);
            for a in 0..m {
                for b in m..2 * m {
                    g.add_edge(a, b);
                }
            }
            g
        }
        _ => {
            let core_n = rng.gen_range(1..=(max_order / 2).max(1));
            let core = random_connected(core_n, rng.gen_range(0.0..1.0), rng);
            let spare = max_order - 2 * core_n;
            let mut sizes = vec![1usize; core_n];
            for _ in 0..rng.gen_range(0..=spare) {
                sizes[rng.gen_range(0..core_n)] += 1;
            }
            core.leaf_extension(&sizes).expect("sizes are positive")
        }
    };
    shuffle_labels(&g, rng)
}

/// Uniform weights in `1..=max_weight` on the edges of `base`.
pub fn random_weights<R: Rng>(base: Graph, max_weight: usize, rng: &mut R) -> WeightedGraph {
    let weights = (0..base.edge_count()).map(|_| rng.gen_range(1..=max_weight)).collect();
    WeightedGraph::new(base, weights).expect("weights are positive")
}

/// A claw-free graph on exactly `n` vertices, drawn from a mixture of
/// generators so that both CIS and non-CIS graphs appear often: dense
/// `G(n, p)` rejection, weighted line graphs of small multigraphs,
/// complements of triangle-free graphs, and twin blow-ups of the claw-free
/// CIS families.
pub fn random_claw_free<R: Rng>(n: usize, rng: &mut R) -> Graph {
    loop {
        let g = match rng.gen_range(0..4) {
            0 => gnp(n, rng.gen_range(0.55..0.95), rng),
            1 => random_weighted_line_graph(n, rng),
            2 => {
                let h = random_triangle_free(n, rng.gen_range(0.2..1.0), rng);
                h.complement()
            }
            _ => random_cis_family_member(n, rng),
        };
        if g.n() == n && crate::line::contains_induced(&g, crate::line::Pattern::Claw).is_none() {
            return shuffle_labels(&g, rng);
        }
    }
}

fn random_weighted_line_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let base_n = rng.gen_range(2..=n.max(2) + 1);
    let mut base = random_connected(base_n, rng.gen_range(0.0..0.6), rng);
    while base.edge_count() > n {
        let edges = base.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        base.remove_edge(u, v);
    }
    let m = base.edge_count();
    if m == 0 {
        return Graph::complete(n);
    }
    let mut weights = vec![1usize; m];
    for _ in 0..n - m {
        weights[rng.gen_range(0..m)] += 1;
    }
    // Dropping edges may have left isolated vertices; they vanish in L(H).
    line_graph_weighted(&WeightedGraph::new(base, weights).expect("weights are positive")).expect("base has edges")
}

/// A disjoint union of twin blow-ups of the three claw-free CIS forms,
/// with total order `n`. Tiny random perturbations are added half the time.
fn random_cis_family_member<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut left = n;
    let mut parts = Vec::new();
    while left > 0 {
        let size = rng.gen_range(1..=left);
        let reduced = match rng.gen_range(0..3) {
            0 => {
                let p = rng.gen_range(0..=size / 2);
                let q = if 2 * p < size { 1 } else { 0 };
                let mut g = Graph::complete((2 * p + q).max(1));
                for i in 0..p {
                    g.remove_edge(2 * i, 2 * i + 1);
                }
                g
            }
            1 => {
                let m = rng.gen_range(1..=3);
                let k = crate::named::NamedGraph::CompleteBipartite(m, m).build().expect("m ≥ 1");
                line_graph(&k).expect("has edges").0
            }
            _ => {
                let core_n = rng.gen_range(1..=4);
                let core = random_triangle_free(core_n, 0.7, rng);
                line_graph(&core.corona()).expect("corona has edges").0
            }
        };
        if reduced.n() > size {
            continue;
        }
        let mut sizes = vec![1usize; reduced.n()];
        for _ in 0..size - reduced.n() {
            let i = rng.gen_range(0..sizes.len());
            sizes[i] += 1;
        }
        let blown: Vec<Graph> = sizes.iter().map(|&s| Graph::complete(s)).collect();
        parts.push(reduced.substitute(&blown).expect("one part per vertex"));
        left -= size;
    }
    let mut g = parts.pop().expect("n ≥ 1");
    while let Some(p) = parts.pop() {
        g = g.disjoint_union(&p);
    }
    if rng.gen_bool(0.5) && n >= 2 {
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        if g.has_edge(u, v) {
            g.remove_edge(u, v);
        } else {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gnp(9, 0.4, &mut rng(7)), gnp(9, 0.4, &mut rng(7)));
        assert_eq!(random_claw_free(8, &mut rng(3)), random_claw_free(8, &mut rng(3)));
    }

    #[test]
    fn generator_contracts() {
        let mut r = rng(11);
        for _ in 0..200 {
            let n = r.gen_range(1..10);
            assert!(random_connected(n, 0.2, &mut r).is_connected());
            assert!(random_triangle_free(n, 0.8, &mut r).is_triangle_free());
            let g = random_claw_free(n, &mut r);
            assert_eq!(g.n(), n);
            assert!(crate::line::contains_induced(&g, crate::line::Pattern::Claw).is_none());
            let rim = random_rim(10, &mut r);
            assert!(rim.n() <= 10 && rim.is_connected());
            assert!(crate::matching::recognize_rim(&rim).unwrap().is_rim());
        }
        let mut r = rng(5);
        for m in 4..=12 {
            let g = random_connected_with_edges(9, m.max(8), &mut r);
            assert_eq!(g.edge_count(), m.max(8));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn repair_removes_isolated_vertices() {
        let mut g = Graph::empty(4);
        g.add_edge(2, 3);
        assert!(repair_isolated(&mut g));
        assert!(g.isolated_vertices().is_empty());
        assert!(g.is_triangle_free());
        assert!(!repair_isolated(&mut Graph::empty(1)));
    }
}
