//! Root-graph reconstruction via Krausz partitions.
//!
//! For a component with an edge `vu`, the Krausz cell holding both `v` and
//! `u` is the closed common neighborhood `N[v] ∩ N[u]`, possibly minus one
//! vertex (the edge closing a triangle in the root). Each such candidate
//! seeds a forced propagation: once a vertex lies in one cell, its
//! uncovered edges must form its second cell. Every produced root is
//! checked against its certificate before it is returned.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::RootCertificate;

/// A simple graph `H` with `L(H) = G`, or `None`. Components are handled
/// independently and their roots laid side by side. Among valid roots a
/// triangle-free one is preferred, so `K_3` yields the star `K_{1,3}`.
pub fn line_root(g: &Graph) -> Option<RootCertificate> {
    let mut cert = RootCertificate { root_order: 0, root_edges: Vec::new(), vertex_of_edge: Vec::new() };
    for comp in g.components() {
        let part = component_root(g, &comp)?;
        let shift = cert.root_order;
        cert.root_order += part.root_order;
        cert.root_edges.extend(part.root_edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        cert.vertex_of_edge.extend(&part.vertex_of_edge);
    }
    debug_assert!(cert.verify(g));
    Some(cert)
}

/// Root of the true-twin reduction of each component, when every one is
/// triangle-free; together with the class sizes this is a triangle-free
/// multigraph root of `g`.
pub fn triangle_free_multigraph_root(g: &Graph) -> Option<Vec<(RootCertificate, Vec<usize>)>> {
    let mut out = Vec::new();
    for comp in g.components() {
        let verts = comp.to_vec();
        let sub = g.induced_subgraph(&verts).expect("components are non-empty");
        let red = sub.true_twin_reduction();
        let cert = line_root(&red.graph)?;
        if !cert.root().is_triangle_free() {
            return None;
        }
        let sizes = red.classes.iter().map(Vec::len).collect();
        out.push((cert, sizes));
    }
    Some(out)
}

fn component_root(g: &Graph, comp: &VertexSet) -> Option<RootCertificate> {
    let v = comp.first().expect("components are non-empty");
    let Some(u) = g.neighbors(v).first() else {
        return Some(RootCertificate { root_order: 2, root_edges: vec![(0, 1)], vertex_of_edge: vec![v] });
    };
    let common = g.closed_neighborhood(v).intersection(&g.closed_neighborhood(u));
    let mut seeds = vec![common.clone()];
    for t in common.iter().filter(|&t| t != v && t != u) {
        let mut s = common.clone();
        s.remove(t);
        seeds.push(s);
    }
    let mut fallback = None;
    for seed in seeds.into_iter().filter(|s| g.is_clique(s)) {
        let Some(cells) = propagate(g, comp, seed) else { continue };
        let cert = build_root(comp, &cells);
        if !cert.verify_on(g) {
            continue;
        }
        if cert.root().is_triangle_free() {
            return Some(cert);
        }
        fallback.get_or_insert(cert);
    }
    fallback
}

fn propagate(g: &Graph, comp: &VertexSet, seed: VertexSet) -> Option<Vec<VertexSet>> {
    let n = g.n();
    let mut remaining: Vec<VertexSet> = (0..n)
        .map(|x| if comp.contains(x) { g.neighbors(x).clone() } else { VertexSet::new(n) })
        .collect();
    let mut count = vec![0u8; n];
    let mut cells: Vec<VertexSet> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    let mut add_cell = |cell: VertexSet, remaining: &mut Vec<VertexSet>, stack: &mut Vec<usize>| -> bool {
        for x in &cell {
            let mut others = cell.clone();
            others.remove(x);
            if !others.is_subset(&remaining[x]) {
                return false;
            }
        }
        for x in &cell {
            remaining[x].difference_with(&cell);
            count[x] += 1;
            if count[x] > 2 {
                return false;
            }
            stack.push(x);
        }
        cells.push(cell);
        true
    };

    if !add_cell(seed, &mut remaining, &mut stack) {
        return None;
    }
    while let Some(x) = stack.pop() {
        if remaining[x].is_empty() {
            continue;
        }
        let mut cell = remaining[x].clone();
        cell.insert(x);
        if !add_cell(cell, &mut remaining, &mut stack) {
            return None;
        }
    }
    if comp.iter().any(|x| !remaining[x].is_empty()) {
        return None;
    }
    Some(cells)
}

// Cells become root vertices; a vertex in a single cell gets a private
// pendant root vertex.
fn build_root(comp: &VertexSet, cells: &[VertexSet]) -> RootCertificate {
    let mut order = cells.len();
    let mut root_edges = Vec::new();
    let mut vertex_of_edge = Vec::new();
    for x in comp {
        let homes: Vec<usize> = cells.iter().enumerate().filter(|(_, c)| c.contains(x)).map(|(i, _)| i).collect();
        let edge = match homes.as_slice() {
            [a, b] => (*a, *b),
            [a] => {
                order += 1;
                (*a, order - 1)
            }
            _ => unreachable!("propagation bounds cell membership"),
        };
        root_edges.push(edge);
        vertex_of_edge.push(x);
    }
    RootCertificate { root_order: order, root_edges, vertex_of_edge }
}

impl RootCertificate {
    // Verification against a component: images may be any vertex ids of `g`.
    fn verify_on(&self, g: &Graph) -> bool {
        let m = self.root_edges.len();
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = self.root_edges[i];
                let (c, d) = self.root_edges[j];
                if (a, b) == (c, d) || (a, b) == (d, c) {
                    return false;
                }
                let meet = a == c || a == d || b == c || b == d;
                if meet != g.has_edge(self.vertex_of_edge[i], self.vertex_of_edge[j]) {
                    return false;
                }
            }
        }
        true
    }
}
