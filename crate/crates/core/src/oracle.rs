//! Exact enumeration of maximal cliques and maximal stable sets, and the
//! brute-force CIS oracle built on them.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default limit on the number of maximal sets enumerated per graph.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The complete, duplicate-free family of maximal cliques (or maximal
/// stable sets) of a graph, sorted lexicographically by sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    pub n: usize,
    pub sets: Vec<VertexSet>,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn max_size(&self) -> usize {
        self.sets.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(VertexSet::to_vec).collect()
    }
}

struct Expansion<'a> {
    g: &'a Graph,
    cap: usize,
    out: Vec<VertexSet>,
    current: VertexSet,
}

impl Expansion<'_> {
    // Pivoted expansion over candidate set `p` and excluded set `x`.
    fn expand(&mut self, mut p: VertexSet, mut x: VertexSet) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() == self.cap {
                    return Err(Error::CapExceeded { cap: self.cap, found: self.out.len() });
                }
                self.out.push(self.current.clone());
            }
            return Ok(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.intersection_len(self.g.neighbors(u)), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        let branch = p.difference(self.g.neighbors(pivot));
        for v in &branch {
            let nv = self.g.neighbors(v);
            self.current.insert(v);
            self.expand(p.intersection(nv), x.intersection(nv))?;
            self.current.remove(v);
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

pub fn maximal_cliques(g: &Graph) -> Result<CliqueList> {
    maximal_cliques_capped(g, DEFAULT_CAP)
}

pub fn maximal_cliques_capped(g: &Graph, cap: usize) -> Result<CliqueList> {
    let n = g.n();
    let mut e = Expansion { g, cap, out: Vec::new(), current: VertexSet::new(n) };
    e.expand(VertexSet::full(n), VertexSet::new(n))?;
    let mut sets = e.out;
    sets.sort_by(|a, b| a.lex_cmp(b));
    Ok(CliqueList { n, sets })
}

pub fn maximal_stable_sets(g: &Graph) -> Result<CliqueList> {
    maximal_stable_sets_capped(g, DEFAULT_CAP)
}

pub fn maximal_stable_sets_capped(g: &Graph, cap: usize) -> Result<CliqueList> {
    maximal_cliques_capped(&g.complement(), cap)
}

/// Clique number by branch and bound (no enumeration cap needed).
pub fn omega(g: &Graph) -> usize {
    fn search(g: &Graph, size: usize, p: VertexSet, best: &mut usize) {
        if p.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut p = p;
        while let Some(v) = p.first() {
            if size + p.len() <= *best {
                return;
            }
            search(g, size + 1, p.intersection(g.neighbors(v)), best);
            p.remove(v);
        }
    }
    let mut best = 0;
    search(g, 0, VertexSet::full(g.n()), &mut best);
    best
}

/// Stability number, as the clique number of the complement.
pub fn alpha(g: &Graph) -> usize {
    omega(&g.complement())
}

pub fn is_strong_clique(g: &Graph, clique: &VertexSet) -> Result<bool> {
    is_strong_clique_capped(g, clique, DEFAULT_CAP)
}

/// True iff `clique` meets every maximal stable set.
pub fn is_strong_clique_capped(g: &Graph, clique: &VertexSet, cap: usize) -> Result<bool> {
    if !g.is_clique(clique) {
        return Err(Error::Precondition(format!("{clique:?} is not a clique")));
    }
    let stables = maximal_stable_sets_capped(g, cap)?;
    Ok(stables.iter().all(|s| !s.is_disjoint(clique)))
}

/// True iff `set` is a clique equal to `N[v]` for some vertex `v`.
pub fn is_simplicial_clique(g: &Graph, set: &VertexSet) -> bool {
    g.is_clique(set) && set.iter().any(|v| g.closed_neighborhood(v) == *set)
}

/// A disjoint (maximal clique, maximal stable set) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointPair {
    pub clique: Vec<usize>,
    pub stable_set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CisOutcome {
    pub cis: bool,
    pub witness: Option<DisjointPair>,
    pub clique_count: usize,
    pub stable_count: usize,
}

pub fn is_cis_bruteforce(g: &Graph) -> Result<CisOutcome> {
    is_cis_bruteforce_capped(g, DEFAULT_CAP)
}

/// Checks every (maximal clique, maximal stable set) pair; the witness is
/// the first disjoint pair with cliques and stable sets both in
/// lexicographic order.
pub fn is_cis_bruteforce_capped(g: &Graph, cap: usize) -> Result<CisOutcome> {
    let cliques = maximal_cliques_capped(g, cap)?;
    let stables = maximal_stable_sets_capped(g, cap)?;
    for c in cliques.iter() {
        if let Some(s) = stables.iter().find(|s| s.is_disjoint(c)) {
            return Ok(CisOutcome {
                cis: false,
                witness: Some(DisjointPair { clique: c.to_vec(), stable_set: s.to_vec() }),
                clique_count: cliques.len(),
                stable_count: stables.len(),
            });
        }
    }
    Ok(CisOutcome { cis: true, witness: None, clique_count: cliques.len(), stable_count: stables.len() })
}

/// Shorthand for scans: the CIS verdict alone.
pub fn is_cis(g: &Graph) -> Result<bool> {
    Ok(is_cis_bruteforce(g)?.cis)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CombKind {
    Comb,
    Anticomb,
}

/// An induced k-comb or k-anticomb.
///
/// `clique_vertices[i]`/`stem_vertices[i]` are the `v_i`/`w_i` of a comb:
/// in the graph itself for [`CombKind::Comb`], in its complement for
/// [`CombKind::Anticomb`]. The split partition `(C, S)` of the induced
/// subgraph is returned by [`CombWitness::split_clique`] and
/// [`CombWitness::split_stable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombWitness {
    pub kind: CombKind,
    pub clique_vertices: Vec<usize>,
    pub stem_vertices: Vec<usize>,
    pub settler: Option<usize>,
}

impl CombWitness {
    pub fn k(&self) -> usize {
        self.clique_vertices.len()
    }

    pub fn split_clique(&self) -> &[usize] {
        match self.kind {
            CombKind::Comb => &self.clique_vertices,
            CombKind::Anticomb => &self.stem_vertices,
        }
    }

    pub fn split_stable(&self) -> &[usize] {
        match self.kind {
            CombKind::Comb => &self.stem_vertices,
            CombKind::Anticomb => &self.clique_vertices,
        }
    }

    /// Checks that the witness is an induced comb/anticomb of `g` and, when
    /// a settler is recorded, that it settles it.
    pub fn verify(&self, g: &Graph) -> bool {
        let h = match self.kind {
            CombKind::Comb => g.clone(),
            CombKind::Anticomb => g.complement(),
        };
        let k = self.k();
        if k < 2 || self.stem_vertices.len() != k {
            return false;
        }
        let mut all: Vec<usize> = self.clique_vertices.iter().chain(&self.stem_vertices).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * k || all.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..k {
            for j in 0..k {
                let (vi, vj, wi, wj) =
                    (self.clique_vertices[i], self.clique_vertices[j], self.stem_vertices[i], self.stem_vertices[j]);
                if i != j && (!h.has_edge(vi, vj) || h.has_edge(wi, wj) || h.has_edge(vi, wj)) {
                    return false;
                }
            }
            if !h.has_edge(self.clique_vertices[i], self.stem_vertices[i]) {
                return false;
            }
        }
        match self.settler {
            None => true,
            Some(x) => {
                !all.contains(&x)
                    && x < g.n()
                    && self.split_clique().iter().all(|&c| g.has_edge(x, c))
                    && self.split_stable().iter().all(|&s| !g.has_edge(x, s))
            }
        }
    }
}

/// A vertex outside the comb adjacent to all of `C` and none of `S`.
pub fn find_settler(g: &Graph, w: &CombWitness) -> Option<usize> {
    let n = g.n();
    let mut cand = VertexSet::full(n);
    for &c in w.split_clique() {
        cand.intersect_with(g.neighbors(c));
    }
    for &s in w.split_stable() {
        cand.difference_with(g.neighbors(s));
        cand.remove(s);
    }
    for &c in w.split_clique() {
        cand.remove(c);
    }
    cand.first()
}

/// Searches for an induced k-comb (or k-anticomb), `2 ≤ k ≤ k_max`, that no
/// vertex settles. Combs are visited by increasing `k`, then by clique
/// tuple `v_1 < .. < v_k`, then by stem tuple.
pub fn find_unsettled(g: &Graph, k_max: usize, kind: CombKind) -> Result<Option<CombWitness>> {
    if k_max < 2 {
        return Err(Error::InvalidParameter("k_max must be at least 2".into()));
    }
    let h = match kind {
        CombKind::Comb => g.clone(),
        CombKind::Anticomb => g.complement(),
    };
    let mut found = None;
    for k in 2..=k_max.min(g.n() / 2) {
        let mut clique = Vec::with_capacity(k);
        visit_cliques(&h, k, VertexSet::full(h.n()), &mut clique, &mut |clique| {
            let mut stems = Vec::with_capacity(k);
            visit_stems(&h, clique, &mut stems, &mut |stems| {
                let w = CombWitness {
                    kind,
                    clique_vertices: clique.to_vec(),
                    stem_vertices: stems.to_vec(),
                    settler: None,
                };
                if find_settler(g, &w).is_none() {
                    found = Some(w);
                    true
                } else {
                    false
                }
            })
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

// Visits increasing k-cliques drawn from `cand`; stops when `f` returns true.
fn visit_cliques(
    h: &Graph,
    k: usize,
    cand: VertexSet,
    clique: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if clique.len() == k {
        return f(clique);
    }
    for v in &cand {
        if clique.len() + cand.iter().filter(|&u| u >= v).count() < k {
            break;
        }
        let mut next = cand.intersection(h.neighbors(v));
        for u in 0..=v {
            next.remove(u);
        }
        clique.push(v);
        if visit_cliques(h, k, next, clique, f) {
            return true;
        }
        clique.pop();
    }
    false
}

fn visit_stems(h: &Graph, clique: &[usize], stems: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let i = stems.len();
    if i == clique.len() {
        return f(stems);
    }
    let mut cand = h.neighbors(clique[i]).clone();
    for (j, &c) in clique.iter().enumerate() {
        cand.remove(c);
        if j != i {
            cand.difference_with(h.neighbors(c));
        }
    }
    for &w in stems.iter() {
        cand.remove(w);
        cand.difference_with(h.neighbors(w));
    }
    for w in &cand {
        stems.push(w);
        if visit_stems(h, clique, stems, f) {
            return true;
        }
        stems.pop();
    }
    false
}
