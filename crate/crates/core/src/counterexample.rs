//! CIS graphs violating `|V| ≤ α·ω`, built from a triangle-free base by
//! gluing a triangle on every edge and substituting `pK_p` for the base
//! vertices.

use std::ops::RangeInclusive;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph6, to_graph6};
use crate::oracle::{self, is_simplicial_clique, maximal_cliques, DEFAULT_CAP};
use crate::random::{random_triangle_free, repair_isolated, rng};

/// Largest base accepted by the exact independent-set search.
pub const BASE_ORDER_CAP: usize = 40;

/// Largest built graph re-checked by the brute-force oracle.
pub const ORACLE_VERTEX_CAP: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecipe {
    #[serde(serialize_with = "ser_graph6", deserialize_with = "de_graph6")]
    pub base: Graph,
    pub p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn ser_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_graph6(g))
}

fn de_graph6<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
    let text = String::deserialize(d)?;
    parse_graph6(&text).map_err(serde::de::Error::custom)
}

impl CounterexampleRecipe {
    pub fn new(base: Graph, p: usize) -> Result<Self> {
        let r = CounterexampleRecipe { base, p, seed: None };
        r.validate()?;
        Ok(r)
    }

    /// A random triangle-free base on `n` vertices with isolated vertices
    /// repaired.
    pub fn random(n: usize, p: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("a random base needs at least two vertices".into()));
        }
        let mut base = random_triangle_free(n, 0.5, &mut rng(seed));
        repair_isolated(&mut base);
        let r = CounterexampleRecipe { base, p, seed: Some(seed) };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p == 0 {
            return Err(Error::InvalidParameter("p must be positive".into()));
        }
        check_base(&self.base)
    }
}

fn check_base(h: &Graph) -> Result<()> {
    if let Some(t) = h.find_triangle() {
        return Err(Error::Precondition(format!("base has a triangle {t:?}")));
    }
    if let Some(v) = h.isolated_vertices().first() {
        return Err(Error::Precondition(format!("base vertex {v} is isolated")));
    }
    Ok(())
}

/// Adds an apex `v^e` adjacent to both ends of each edge `e`. Apexes are
/// numbered `n, n+1, ..` in the order of `h.edges()`.
pub fn glue_triangles(h: &Graph) -> Result<Graph> {
    check_base(h)?;
    let edges = h.edges();
    let n = h.n();
    let mut g = Graph::empty(n + edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        g.add_edge(u, v);
        g.add_edge(u, n + i);
        g.add_edge(v, n + i);
    }
    Ok(g)
}

/// The glued graph with `pK_p` substituted for every base vertex. Base
/// vertex `v` occupies block `[p²v, p²(v+1))`; apexes follow.
pub fn build_counterexample(r: &CounterexampleRecipe) -> Result<Graph> {
    r.validate()?;
    let glued = glue_triangles(&r.base)?;
    let blob = Graph::complete(r.p).repeat(r.p)?;
    let parts: Vec<Graph> =
        (0..glued.n()).map(|v| if v < r.base.n() { blob.clone() } else { Graph::empty(1) }).collect();
    glued.substitute(&parts)
}

/// `(α, ω)` of the built graph from the base alone: `ω = 2p + 1` and
/// `α = max_I (p·|I| + |E| − |edges meeting I|)` over stable sets `I` of
/// the base.
pub fn exact_alpha_omega(r: &CounterexampleRecipe) -> Result<(usize, usize)> {
    r.validate()?;
    let h = &r.base;
    if h.n() > BASE_ORDER_CAP {
        return Err(Error::CapExceeded { cap: BASE_ORDER_CAP, found: h.n() });
    }
    let m = h.edge_count();
    let mut best = 0;
    let mut chosen = Vec::new();
    stable_sets(h, 0, &mut chosen, &mut |set| {
        let touched: usize = set.iter().map(|&v| h.degree(v)).sum();
        best = best.max(r.p * set.len() + m - touched);
    });
    Ok((best, 2 * r.p + 1))
}

// Calls `f` on every stable set (stable sets of a triangle-free base have
// pairwise disjoint edge stars, so degrees add up).
fn stable_sets(h: &Graph, from: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    f(chosen);
    for v in from..h.n() {
        if chosen.iter().all(|&c| !h.has_edge(c, v)) {
            chosen.push(v);
            stable_sets(h, v + 1, chosen, f);
            chosen.pop();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    /// Structural certificate plus a brute-force CIS check of the built graph.
    OracleVerified,
    /// The built graph is too large for the oracle; only the structural
    /// certificate was checked.
    StructurallyCertifiedOnly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ViolationRow {
    pub p: usize,
    pub order: usize,
    pub alpha: usize,
    pub omega: usize,
    pub violates: bool,
    /// `|V| / (α·ω)`.
    pub ratio: f64,
    pub certification: Certification,
}

/// Every maximal clique of the glued graph is simplicial, so it is CIS and
/// so is every substitution into it.
pub fn structural_certificate(base: &Graph) -> Result<bool> {
    let glued = glue_triangles(base)?;
    Ok(maximal_cliques(&glued)?.iter().all(|c| is_simplicial_clique(&glued, c)))
}

/// Exact rows for each `p` in the range, with each built graph certified CIS.
pub fn find_violation(base: &Graph, p_range: RangeInclusive<usize>) -> Result<Vec<ViolationRow>> {
    check_base(base)?;
    if !structural_certificate(base)? {
        return Err(Error::Precondition("glued graph has a non-simplicial maximal clique".into()));
    }
    let mut rows = Vec::new();
    for p in p_range {
        let r = CounterexampleRecipe::new(base.clone(), p)?;
        let (alpha, omega) = exact_alpha_omega(&r)?;
        let order = p * p * base.n() + base.edge_count();
        let mut certification = Certification::StructurallyCertifiedOnly;
        if order <= ORACLE_VERTEX_CAP {
            let g = build_counterexample(&r)?;
            debug_assert_eq!(g.n(), order);
            match oracle::is_cis_bruteforce_capped(&g, DEFAULT_CAP) {
                Ok(outcome) if outcome.cis => certification = Certification::OracleVerified,
                Ok(_) => return Err(Error::Precondition(format!("built graph for p = {p} is not CIS"))),
                Err(Error::CapExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        rows.push(ViolationRow {
            p,
            order,
            alpha,
            omega,
            violates: order > alpha * omega,
            ratio: order as f64 / (alpha * omega) as f64,
            certification,
        });
    }
    Ok(rows)
}
