//! Line graphs of graphs and weighted graphs, root reconstruction, and the
//! forbidden-subgraph tests used around them.

mod patterns;
mod root;

pub use patterns::{contains_bull_subgraph, contains_induced, is_cis_line, is_domino, is_domino_capped, Pattern};
pub use root::{line_root, triangle_free_multigraph_root};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with positive integer edge multiplicities, i.e. a loopless
/// multigraph. `weights[i]` belongs to `base.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    base: Graph,
    edges: Vec<(usize, usize)>,
    weights: Vec<usize>,
}

impl WeightedGraph {
    pub fn new(base: Graph, weights: Vec<usize>) -> Result<Self> {
        let edges = base.edges();
        if weights.len() != edges.len() {
            return Err(Error::InvalidParameter(format!(
                "{} weights given for {} edges",
                weights.len(),
                edges.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidParameter("edge weights must be positive".into()));
        }
        Ok(WeightedGraph { base, edges, weights })
    }

    pub fn unit(base: Graph) -> Self {
        let m = base.edge_count();
        WeightedGraph::new(base, vec![1; m]).expect("unit weights are valid")
    }

    /// Builds from `(u, v, w)` triples; unlisted edges get weight 1.
    pub fn from_weighted_edges(base: Graph, listed: &[(usize, usize, usize)]) -> Result<Self> {
        let edges = base.edges();
        let mut weights = vec![1; edges.len()];
        for &(u, v, w) in listed {
            let key = (u.min(v), u.max(v));
            let i = edges
                .binary_search(&key)
                .map_err(|_| Error::InvalidParameter(format!("{key:?} is not an edge")))?;
            weights[i] = w;
        }
        WeightedGraph::new(base, weights)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.weights[i])
    }

    /// `w(E(H))`.
    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    /// `d_w(v)`: total weight of edges at `v`.
    pub fn weighted_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .zip(&self.weights)
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, w)| w)
            .sum()
    }

    /// `Δ_w(H)`.
    pub fn max_weighted_degree(&self) -> usize {
        (0..self.base.n()).map(|v| self.weighted_degree(v)).max().unwrap_or(0)
    }
}

/// Witness that a graph `G` is the line graph of `root`: root edge
/// `root_edges[i]` corresponds to vertex `vertex_of_edge[i]` of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub root_order: usize,
    pub root_edges: Vec<(usize, usize)>,
    pub vertex_of_edge: Vec<usize>,
}

impl RootCertificate {
    pub fn root(&self) -> Graph {
        Graph::from_edges(self.root_order, &self.root_edges).expect("certificate edges are valid")
    }

    /// Root edge assigned to each vertex of `G`.
    pub fn edge_of_vertex(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.vertex_of_edge.len()];
        for (e, &v) in self.root_edges.iter().zip(&self.vertex_of_edge) {
            out[v] = *e;
        }
        out
    }

    /// Checks that the map is a bijection `E(root) → V(G)` under which two
    /// root edges meet iff their images are adjacent.
    pub fn verify(&self, g: &Graph) -> bool {
        let m = self.root_edges.len();
        if m != g.n() || self.vertex_of_edge.len() != m || self.root_order == 0 {
            return false;
        }
        let mut seen_v = vec![false; m];
        let mut keys: Vec<(usize, usize)> = Vec::with_capacity(m);
        for (&(a, b), &v) in self.root_edges.iter().zip(&self.vertex_of_edge) {
            if a == b || a >= self.root_order || b >= self.root_order || v >= m || seen_v[v] {
                return false;
            }
            seen_v[v] = true;
            keys.push((a.min(b), a.max(b)));
        }
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != m {
            return false;
        }
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = keys[i];
                let (c, d) = keys[j];
                let meet = a == c || a == d || b == c || b == d;
                if meet != g.has_edge(self.vertex_of_edge[i], self.vertex_of_edge[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// `L(H)` with vertices numbered by `H.edges()` order.
pub fn line_graph(h: &Graph) -> Result<(Graph, RootCertificate)> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(Error::Precondition("line graph of an edgeless graph is null".into()));
    }
    let m = edges.len();
    let mut l = Graph::empty(m);
    for i in 0..m {
        for j in (i + 1)..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    let cert = RootCertificate { root_order: h.n(), root_edges: edges, vertex_of_edge: (0..m).collect() };
    Ok((l, cert))
}

/// `L(H, w)`: each line-graph vertex replaced by a clique of its edge's
/// weight. Copies of edge `i` form a contiguous block in edge order.
pub fn line_graph_weighted(h: &WeightedGraph) -> Result<Graph> {
    let (l, _) = line_graph(&h.base)?;
    let parts: Vec<Graph> = h.weights.iter().map(|&w| Graph::complete(w)).collect();
    l.substitute(&parts)
}
