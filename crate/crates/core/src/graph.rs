//! Simple undirected graphs on dense vertex ids and the structural operators
//! built on them.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A finite, simple, undirected, non-null graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex. The relation is kept
/// symmetric and irreflexive by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n == 0`; use [`Graph::from_edges`] for validated input.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "graphs are non-null");
        Graph { adj: vec![VertexSet::new(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NullGraph);
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor sets, symmetrizing and
    /// dropping self-loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::NullGraph);
        }
        let mut g = Graph::empty(n);
        for (u, row) in adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidParameter("adjacency row universe mismatch".into()));
            }
            for v in row {
                if v != u {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set_of(&self, vertices: &[usize]) -> VertexSet {
        VertexSet::from_slice(self.n(), vertices)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_stable(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.is_disjoint(&self.adj[v]))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let common = self.adj[u].intersection(&self.adj[v]);
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
        None
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = Graph::empty(shift + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeat(&self, copies: usize) -> Result<Graph> {
        if copies == 0 {
            return Err(Error::NullGraph);
        }
        let mut g = self.clone();
        for _ in 1..copies {
            g = g.disjoint_union(self);
        }
        Ok(g)
    }

    /// Connected components, each as a vertex set, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut unseen = VertexSet::full(n);
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::new(n);
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new(n);
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            unseen.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertex sets of the components of the complement.
    pub fn co_components(&self) -> Vec<VertexSet> {
        self.complement().components()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::NullGraph);
        }
        let k = vertices.len();
        let mut seen = VertexSet::new(self.n());
        for &v in vertices {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
            if seen.contains(v) {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            seen.insert(v);
        }
        let mut g = Graph::empty(k);
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        let mut check = VertexSet::new(n);
        for &p in perm {
            if p >= n || check.contains(p) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            check.insert(p);
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Replaces every vertex `v` by a copy of `parts[v]`.
    ///
    /// Copies are laid out in vertex order, so the copy of `v` occupies a
    /// contiguous block starting at `Σ_{u<v} |parts[u]|`. Vertices in copies
    /// of adjacent vertices are fully joined.
    pub fn substitute(&self, parts: &[Graph]) -> Result<Graph> {
        if parts.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "substitution needs {} parts, got {}",
                self.n(),
                parts.len()
            )));
        }
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        offsets.push(0);
        for p in parts {
            offsets.push(offsets.last().unwrap() + p.n());
        }
        let total = *offsets.last().unwrap();
        let mut g = Graph::empty(total);
        for (v, part) in parts.iter().enumerate() {
            for (a, b) in part.edges() {
                g.add_edge(offsets[v] + a, offsets[v] + b);
            }
        }
        for (u, v) in self.edges() {
            for a in offsets[u]..offsets[u + 1] {
                for b in offsets[v]..offsets[v + 1] {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Attaches `sizes[v]` new pairwise non-adjacent leaves to every vertex `v`.
    /// New leaves are numbered after the original vertices, grouped by host.
    pub fn leaf_extension(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.n() {
            return Err(Error::InvalidParameter("one leaf count per vertex required".into()));
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidParameter(format!("vertex {v} needs at least one leaf")));
        }
        let total = self.n() + sizes.iter().sum::<usize>();
        let mut g = Graph::empty(total);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let mut next = self.n();
        for (host, &count) in sizes.iter().enumerate() {
            for _ in 0..count {
                g.add_edge(host, next);
                next += 1;
            }
        }
        Ok(g)
    }

    /// Corona `G ∘ K_1`: one pendant leaf per vertex; leaf of `v` is `n + v`.
    pub fn corona(&self) -> Graph {
        self.leaf_extension(&vec![1; self.n()]).expect("unit sizes are valid")
    }

    /// Contracts each true-twin class (`N[x] = N[y]`) to a single vertex.
    pub fn true_twin_reduction(&self) -> TwinReduction {
        let n = self.n();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<VertexSet, usize> = HashMap::new();
        for (v, slot) in class_of.iter_mut().enumerate() {
            let key = self.closed_neighborhood(v);
            let id = *index.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(v);
            *slot = id;
        }
        let k = classes.len();
        let mut graph = Graph::empty(k);
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(classes[i][0], classes[j][0]) {
                    graph.add_edge(i, j);
                }
            }
        }
        TwinReduction { graph, class_of, classes }
    }

    pub fn is_true_twin_free(&self) -> bool {
        self.true_twin_reduction().graph.n() == self.n()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Result of [`Graph::true_twin_reduction`]. Class ids are ordered by their
/// least member.
#[derive(Clone, Debug)]
pub struct TwinReduction {
    pub graph: Graph,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;

    fn named(ng: NamedGraph) -> Graph {
        ng.build().unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let c4 = named(NamedGraph::Cycle(4));
        let co = c4.complement();
        assert_eq!(co.edges(), vec![(0, 2), (1, 3)]);
        let c5 = named(NamedGraph::Cycle(5));
        // 0-2-4-1-3-0 relabels the complement back onto C5.
        let back = c5.complement().relabel(&[0, 2, 4, 1, 3]).unwrap();
        assert_eq!(back, c5);
    }

    #[test]
    fn union_examples() {
        let k1 = Graph::empty(1);
        let u = k1.disjoint_union(&k1);
        assert_eq!((u.n(), u.edge_count()), (2, 0));
        let two_k2 = Graph::complete(2).repeat(2).unwrap();
        assert_eq!((two_k2.n(), two_k2.edge_count()), (4, 2));
        let c4k1 = named(NamedGraph::Cycle(4)).disjoint_union(&k1);
        assert_eq!((c4k1.n(), c4k1.edge_count(), c4k1.components().len()), (5, 4, 2));
    }

    #[test]
    fn component_examples() {
        let two_k2 = Graph::complete(2).repeat(2).unwrap();
        let comps = two_k2.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        let co = named(NamedGraph::Cycle(4)).co_components();
        assert_eq!(co.iter().map(VertexSet::to_vec).collect::<Vec<_>>(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(named(NamedGraph::Bull).components().len(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let bull = named(NamedGraph::Bull);
        let p4 = bull.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p4, named(NamedGraph::Path(4)));
        assert_eq!(Graph::complete(5).induced_subgraph(&[4, 1, 2]).unwrap(), Graph::complete(3));
        let c5 = named(NamedGraph::Cycle(5));
        assert_eq!(c5.induced_subgraph(&[1, 2, 3]).unwrap(), named(NamedGraph::Path(3)));
        assert_eq!(c5.induced_subgraph(&[]), Err(Error::NullGraph));
    }

    #[test]
    fn substitute_examples() {
        let c5 = named(NamedGraph::Cycle(5));
        let ones = vec![Graph::empty(1); 5];
        assert_eq!(c5.substitute(&ones).unwrap(), c5);
        let k2 = Graph::complete(2);
        assert_eq!(k2.substitute(&[k2.clone(), k2.clone()]).unwrap(), Graph::complete(4));
        assert!(c5.substitute(&ones[..4]).is_err());
    }

    #[test]
    fn corona_and_leaf_extension() {
        assert_eq!(Graph::empty(1).corona(), Graph::complete(2));
        let p4 = Graph::complete(2).corona();
        // 2-0-1-3 is the path.
        assert_eq!(p4.relabel(&[1, 2, 0, 3]).unwrap(), named(NamedGraph::Path(4)));
        let star = Graph::empty(1).leaf_extension(&[2]).unwrap();
        assert_eq!(star, named(NamedGraph::CompleteBipartite(1, 2)));
        assert!(Graph::complete(2).leaf_extension(&[1, 0]).is_err());
    }

    #[test]
    fn twin_reduction_examples() {
        let r = Graph::complete(5).true_twin_reduction();
        assert_eq!(r.graph.n(), 1);
        let c4 = named(NamedGraph::Cycle(4));
        assert_eq!(c4.true_twin_reduction().graph, c4);
        // K4 minus the edge 0-1: vertices 2 and 3 are true twins.
        let mut d = Graph::complete(4);
        d.remove_edge(0, 1);
        let r = d.true_twin_reduction();
        assert_eq!(r.classes, vec![vec![0], vec![1], vec![2, 3]]);
        assert_eq!(r.graph.edges(), vec![(0, 2), (1, 2)]);
    }
}
