//! Matchings, maximal-matching enumeration, and recognition of randomly
//! matchable and randomly internally matchable graphs.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default limit on the number of maximal matchings visited per graph.
pub const DEFAULT_MATCHING_CAP: usize = 1_000_000;

/// A set of pairwise disjoint edges, stored as sorted `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn saturated(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for &(u, v) in &self.edges {
            s.insert(u);
            s.insert(v);
        }
        s
    }

    /// Edges of `g`, pairwise disjoint.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.n());
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen.insert(u);
            seen.insert(v);
        }
        true
    }

    /// No edge of `g` has both endpoints unsaturated.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        let free = self.saturated(g.n()).complement();
        free.iter().all(|v| g.neighbors(v).is_disjoint(&free))
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.is_valid(g) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{:?} is not a matching of the graph", self.edges)))
        }
    }
}

struct MatchingSearch<'a, F> {
    g: &'a Graph,
    cap: usize,
    visited: usize,
    saturated: VertexSet,
    excluded: VertexSet,
    edges: Vec<(usize, usize)>,
    f: F,
}

impl<F: FnMut(&Matching) -> ControlFlow<()>> MatchingSearch<'_, F> {
    // Branches on the lowest free vertex that still has a free neighbor:
    // match it to each free neighbor, or commit to leaving it unmatched.
    fn run(&mut self) -> Result<ControlFlow<()>> {
        let mut free = self.saturated.union(&self.excluded).complement();
        let pick = free.iter().find(|&v| !self.g.neighbors(v).is_disjoint(&free));
        let Some(v) = pick else {
            let unsat = self.saturated.complement();
            if unsat.iter().all(|u| self.g.neighbors(u).is_disjoint(&unsat)) {
                if self.visited == self.cap {
                    return Err(Error::CapExceeded { cap: self.cap, found: self.visited });
                }
                self.visited += 1;
                return Ok((self.f)(&Matching::new(self.edges.iter().copied())));
            }
            return Ok(ControlFlow::Continue(()));
        };
        free.remove(v);
        let partners = self.g.neighbors(v).intersection(&free);
        self.saturated.insert(v);
        for u in &partners {
            self.saturated.insert(u);
            self.edges.push((v, u));
            let flow = self.run()?;
            self.edges.pop();
            self.saturated.remove(u);
            if flow.is_break() {
                self.saturated.remove(v);
                return Ok(flow);
            }
        }
        self.saturated.remove(v);
        if self.g.neighbors(v).is_disjoint(&self.excluded) {
            self.excluded.insert(v);
            let flow = self.run()?;
            self.excluded.remove(v);
            return Ok(flow);
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Visits every maximal matching exactly once until `f` breaks.
pub fn for_each_maximal_matching<F>(g: &Graph, cap: usize, f: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let n = g.n();
    let mut search = MatchingSearch {
        g,
        cap,
        visited: 0,
        saturated: VertexSet::new(n),
        excluded: VertexSet::new(n),
        edges: Vec::new(),
        f,
    };
    search.run()
}

pub fn maximal_matchings(g: &Graph) -> Result<Vec<Matching>> {
    maximal_matchings_capped(g, DEFAULT_MATCHING_CAP)
}

pub fn maximal_matchings_capped(g: &Graph, cap: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    let _ = for_each_maximal_matching(g, cap, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Matching number, as the largest maximal matching.
pub fn nu(g: &Graph) -> Result<usize> {
    let mut best = 0;
    let _ = for_each_maximal_matching(g, DEFAULT_MATCHING_CAP, |m| {
        best = best.max(m.len());
        ControlFlow::Continue(())
    })?;
    Ok(best)
}

/// Vertices of degree at least two.
pub fn internal_vertices(g: &Graph) -> VertexSet {
    let mut s = VertexSet::new(g.n());
    for v in (0..g.n()).filter(|&v| g.degree(v) >= 2) {
        s.insert(v);
    }
    s
}

pub fn is_perfect_internal(g: &Graph, m: &Matching) -> Result<bool> {
    m.check(g)?;
    Ok(internal_vertices(g).is_subset(&m.saturated(g.n())))
}

/// Every unsaturated vertex has its whole neighborhood inside one edge of
/// `m`. An isolated vertex sees no edge of `m` and passes.
pub fn is_absorbing(g: &Graph, m: &Matching) -> Result<bool> {
    m.check(g)?;
    if !m.is_maximal(g) {
        return Err(Error::Precondition("absorption is defined for maximal matchings".into()));
    }
    let sat = m.saturated(g.n());
    Ok((0..g.n()).filter(|&v| !sat.contains(v)).all(|v| {
        let nv = g.neighbors(v);
        nv.is_empty()
            || m.edges().iter().any(|&(a, b)| nv.iter().all(|x| x == a || x == b))
    }))
}

/// The first maximal matching that fails `pred`, if any.
pub fn find_maximal_matching<P>(g: &Graph, cap: usize, mut pred: P) -> Result<Option<Matching>>
where
    P: FnMut(&Matching) -> bool,
{
    let mut found = None;
    let _ = for_each_maximal_matching(g, cap, |m| {
        if pred(m) {
            found = Some(m.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Every maximal matching is perfect.
pub fn is_randomly_matchable_bruteforce(g: &Graph) -> Result<bool> {
    let n = g.n();
    Ok(find_maximal_matching(g, DEFAULT_MATCHING_CAP, |m| 2 * m.len() != n)?.is_none())
}

/// Every maximal matching is a perfect internal matching.
pub fn is_rim_bruteforce(g: &Graph) -> Result<bool> {
    let internal = internal_vertices(g);
    let n = g.n();
    Ok(find_maximal_matching(g, DEFAULT_MATCHING_CAP, |m| !internal.is_subset(&m.saturated(n)))?.is_none())
}

/// Structural classification of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum RimForm {
    /// The single-vertex graph, vacuously randomly internally matchable.
    #[serde(rename = "trivial")]
    Trivial,
    /// Complete graph on `2n` vertices.
    #[serde(rename = "K2n")]
    CompleteEven { n: usize },
    /// Complete bipartite graph with sides `left` and `right`, `n` each.
    #[serde(rename = "Knn")]
    BalancedBipartite { n: usize, left: Vec<usize>, right: Vec<usize> },
    /// Leaf extension of the subgraph induced by `core`; `leaves[i]` are the
    /// leaves attached to `core[i]`.
    #[serde(rename = "leaf_extension")]
    LeafExtension { core: Vec<usize>, leaves: Vec<Vec<usize>> },
    #[serde(rename = "not_rim")]
    NotRim,
}

impl RimForm {
    pub fn is_rim(&self) -> bool {
        !matches!(self, RimForm::NotRim)
    }

    pub fn is_randomly_matchable(&self) -> bool {
        matches!(self, RimForm::CompleteEven { .. } | RimForm::BalancedBipartite { .. })
    }

    /// Rebuilds the graph from the certificate and compares it with `g`
    /// under the identity labeling.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        match self {
            RimForm::Trivial => n == 1,
            RimForm::CompleteEven { n: half } => n == 2 * half && *g == Graph::complete(n),
            RimForm::BalancedBipartite { n: half, left, right } => {
                if left.len() != *half || right.len() != *half || 2 * half != n {
                    return false;
                }
                let mut h = Graph::empty(n);
                for &a in left {
                    for &b in right {
                        if a >= n || b >= n || a == b {
                            return false;
                        }
                        h.add_edge(a, b);
                    }
                }
                h == *g
            }
            RimForm::LeafExtension { core, leaves } => {
                if core.is_empty() || core.len() != leaves.len() {
                    return false;
                }
                let mut seen = VertexSet::new(n);
                for &v in core.iter().chain(leaves.iter().flatten()) {
                    if v >= n || seen.contains(v) {
                        return false;
                    }
                    seen.insert(v);
                }
                if seen.len() != n || leaves.iter().any(Vec::is_empty) {
                    return false;
                }
                let mut h = Graph::empty(n);
                for (i, &a) in core.iter().enumerate() {
                    for &b in &core[i + 1..] {
                        if g.has_edge(a, b) {
                            h.add_edge(a, b);
                        }
                    }
                    for &l in &leaves[i] {
                        h.add_edge(a, l);
                    }
                }
                h == *g
            }
            RimForm::NotRim => true,
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Precondition("graph must be connected; apply per component".into()))
    }
}

/// Two-coloring of a connected bipartite graph, as (side of vertex 0, other side).
fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if color[u] == u8::MAX {
                color[u] = 1 - color[v];
                stack.push(u);
            } else if color[u] == color[v] {
                return None;
            }
        }
    }
    let left = (0..n).filter(|&v| color[v] == 0).collect();
    let right = (0..n).filter(|&v| color[v] == 1).collect();
    Some((left, right))
}

fn sumner_form(g: &Graph) -> Option<RimForm> {
    let n = g.n();
    if n >= 2 && n.is_multiple_of(2) && g.edge_count() == n * (n - 1) / 2 {
        return Some(RimForm::CompleteEven { n: n / 2 });
    }
    if n >= 2 && n.is_multiple_of(2) && g.edge_count() == n * n / 4 {
        if let Some((left, right)) = bipartition(g) {
            if left.len() == right.len() {
                return Some(RimForm::BalancedBipartite { n: n / 2, left, right });
            }
        }
    }
    None
}

/// Structural test for randomly matchable connected graphs: `K_{2n}` or
/// `K_{n,n}`.
pub fn recognize_randomly_matchable(g: &Graph) -> Result<RimForm> {
    require_connected(g)?;
    Ok(sumner_form(g).unwrap_or(RimForm::NotRim))
}

/// Structural test for randomly internally matchable connected graphs.
/// Forms are reported with priority `K2n`, `Knn`, leaf extension.
pub fn recognize_rim(g: &Graph) -> Result<RimForm> {
    require_connected(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(RimForm::Trivial);
    }
    if let Some(form) = sumner_form(g) {
        return Ok(form);
    }
    // n >= 3 here: K_2 is caught above.
    let mut core = Vec::new();
    let mut leaves = Vec::new();
    for v in (0..n).filter(|&v| g.degree(v) >= 2) {
        let attached: Vec<usize> = g.neighbors(v).iter().filter(|&u| g.degree(u) == 1).collect();
        if attached.is_empty() {
            return Ok(RimForm::NotRim);
        }
        core.push(v);
        leaves.push(attached);
    }
    Ok(RimForm::LeafExtension { core, leaves })
}
