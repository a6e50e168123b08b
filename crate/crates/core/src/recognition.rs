//! Polynomial-time recognition of claw-free CIS graphs, and the
//! `|V| ≤ α·ω` bound checks.
//!
//! A graph is claw-free and CIS exactly when the true-twin reduction of
//! each component is one of
//!
//! 1. the complement of `pK_2 + qK_1` (`p ≥ 0`, `q ∈ {0, 1}`),
//! 2. `L(K_{n,n})`,
//! 3. `L(G' ∘ K_1)` for a triangle-free `G'`.
//!
//! Form 1 is read off the degree sequence; forms 2 and 3 are read off the
//! line-graph root. Forms overlap on small graphs and the first match in
//! the order above is reported.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::line::{contains_bull_subgraph, contains_induced, line_root, Pattern, RootCertificate, WeightedGraph};
use crate::matching::{for_each_maximal_matching, is_absorbing, nu, recognize_randomly_matchable, RimForm, DEFAULT_MATCHING_CAP};
use crate::oracle::{self, find_unsettled, CombKind, CombWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Cis,
    NotCis,
    NotClawFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormName {
    ComplementPk2Qk1,
    LineOfKnn,
    LineOfCorona,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormParams {
    ComplementPk2Qk1 { p: usize, q: usize },
    LineOfKnn { n: usize },
    LineOfCorona { core_order: usize, core_edges: Vec<(usize, usize)> },
}

/// Labeled evidence for a form. Vertex ids refer to the component's
/// true-twin reduction (index into `twin_classes`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormWitness {
    ComplementPk2Qk1 {
        non_edges: Vec<(usize, usize)>,
        universal: Vec<usize>,
    },
    LineOfKnn {
        root: RootCertificate,
        bipartition: (Vec<usize>, Vec<usize>),
    },
    /// `core_vertices[i]` is the root vertex playing core vertex `i` and
    /// `pendants[i]` its leaf.
    LineOfCorona {
        root: RootCertificate,
        core_vertices: Vec<usize>,
        pendants: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub twin_classes: Vec<Vec<usize>>,
    pub form: Option<FormName>,
    pub params: Option<FormParams>,
    pub witness: Option<FormWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    /// Induced claw `[center, l1, l2, l3]` in the input graph.
    Claw { vertices: Vec<usize> },
    /// A maximal matching of the component's root that is not absorbing;
    /// `unabsorbed` is a root vertex outside the matching that sees two of
    /// its edges. `matched_vertices` are the input vertices whose root edges
    /// form the matching.
    NonAbsorbingMatching {
        component: usize,
        root: RootCertificate,
        matching: Vec<(usize, usize)>,
        matched_vertices: Vec<usize>,
        unabsorbed: usize,
    },
    /// A bull subgraph `[v1..v5]` of the component's root.
    BullInRoot { component: usize, root: RootCertificate, bull: Vec<usize> },
    /// An induced comb or anticomb (in input vertex ids) with no settler.
    UnsettledComb { component: usize, witness: CombWitness },
    /// A disjoint maximal clique and maximal stable set of the input graph.
    DisjointPair { component: usize, clique: Vec<usize>, stable_set: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub verdict: Verdict,
    pub components: Vec<ComponentReport>,
    pub refutation: Option<Refutation>,
}

enum Detection {
    Found(FormName, FormParams, FormWitness),
    Missing(Option<RootCertificate>),
}

// Form detection on a connected true-twin-free graph.
fn detect_form(r: &Graph) -> Detection {
    let n = r.n();
    let universal: Vec<usize> = (0..n).filter(|&v| r.degree(v) + 1 == n).collect();
    if universal.len() <= 1 && (0..n).all(|v| r.degree(v) + 1 == n || r.degree(v) + 2 == n) {
        let q = universal.len();
        let non_edges = r.complement().edges();
        debug_assert_eq!(2 * non_edges.len() + q, n);
        return Detection::Found(
            FormName::ComplementPk2Qk1,
            FormParams::ComplementPk2Qk1 { p: non_edges.len(), q },
            FormWitness::ComplementPk2Qk1 { non_edges, universal },
        );
    }
    let Some(root) = line_root(r) else {
        return Detection::Missing(None);
    };
    let h = root.root();
    if h.n() == 2 {
        return Detection::Found(
            FormName::LineOfKnn,
            FormParams::LineOfKnn { n: 1 },
            FormWitness::LineOfKnn { root, bipartition: (vec![0], vec![1]) },
        );
    }
    if let Ok(RimForm::BalancedBipartite { n: half, left, right }) = recognize_randomly_matchable(&h) {
        return Detection::Found(
            FormName::LineOfKnn,
            FormParams::LineOfKnn { n: half },
            FormWitness::LineOfKnn { root, bipartition: (left, right) },
        );
    }
    if let Some((core_vertices, pendants)) = corona_split(&h) {
        let core = h.induced_subgraph(&core_vertices).expect("core is non-empty");
        if core.is_triangle_free() {
            return Detection::Found(
                FormName::LineOfCorona,
                FormParams::LineOfCorona { core_order: core.n(), core_edges: core.edges() },
                FormWitness::LineOfCorona { root, core_vertices, pendants },
            );
        }
    }
    Detection::Missing(Some(root))
}

/// Splits a connected graph into hosts and their unique pendant leaves when
/// it is a corona.
fn corona_split(h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = h.n();
    if n == 2 && h.edge_count() == 1 {
        return Some((vec![0], vec![1]));
    }
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let mut hosts = Vec::new();
    let mut pendants = Vec::new();
    for v in (0..n).filter(|&v| h.degree(v) >= 2) {
        let leaves: Vec<usize> = h.neighbors(v).iter().filter(|&u| h.degree(u) == 1).collect();
        if leaves.len() != 1 {
            return None;
        }
        hosts.push(v);
        pendants.push(leaves[0]);
    }
    (2 * hosts.len() == n).then_some((hosts, pendants))
}

struct Split {
    vertices: Vec<usize>,
    twin_classes: Vec<Vec<usize>>,
    reduced: Graph,
}

fn split_components(g: &Graph) -> Vec<Split> {
    g.components()
        .into_iter()
        .map(|comp| {
            let vertices = comp.to_vec();
            let sub = g.induced_subgraph(&vertices).expect("components are non-empty");
            let red = sub.true_twin_reduction();
            let twin_classes = red.classes.iter().map(|c| c.iter().map(|&i| vertices[i]).collect()).collect();
            Split { vertices, twin_classes, reduced: red.graph }
        })
        .collect()
}

/// The verdict alone, without witnesses or refutations.
pub fn classify_claw_free_cis(g: &Graph) -> Verdict {
    if contains_induced(g, Pattern::Claw).is_some() {
        return Verdict::NotClawFree;
    }
    let all = split_components(g).iter().all(|s| matches!(detect_form(&s.reduced), Detection::Found(..)));
    if all {
        Verdict::Cis
    } else {
        Verdict::NotCis
    }
}

/// Full recognition with per-component forms and, on failure, a refutation.
pub fn recognize_claw_free_cis(g: &Graph) -> RecognitionReport {
    if let Some(claw) = contains_induced(g, Pattern::Claw) {
        return RecognitionReport {
            verdict: Verdict::NotClawFree,
            components: Vec::new(),
            refutation: Some(Refutation::Claw { vertices: claw }),
        };
    }
    let mut components = Vec::new();
    let mut refutation = None;
    for (idx, split) in split_components(g).into_iter().enumerate() {
        let mut entry = ComponentReport {
            vertices: split.vertices.clone(),
            twin_classes: split.twin_classes.clone(),
            form: None,
            params: None,
            witness: None,
        };
        match detect_form(&split.reduced) {
            Detection::Found(name, params, witness) => {
                entry.form = Some(name);
                entry.params = Some(params);
                entry.witness = Some(witness);
            }
            Detection::Missing(root) => {
                if refutation.is_none() {
                    refutation = refute_component(g, idx, &split, root);
                }
            }
        }
        components.push(entry);
    }
    let verdict = if components.iter().all(|c| c.form.is_some()) { Verdict::Cis } else { Verdict::NotCis };
    RecognitionReport { verdict, components, refutation }
}

fn refute_component(g: &Graph, idx: usize, split: &Split, root: Option<RootCertificate>) -> Option<Refutation> {
    if let Some(root) = root {
        let h = root.root();
        let mut found = None;
        let _ = for_each_maximal_matching(&h, DEFAULT_MATCHING_CAP, |m| {
            if is_absorbing(&h, m).unwrap_or(true) {
                return ControlFlow::Continue(());
            }
            let sat = m.saturated(h.n());
            let unabsorbed = (0..h.n())
                .find(|&v| !sat.contains(v) && !m.edges().iter().any(|&(a, b)| h.neighbors(v).iter().all(|x| x == a || x == b)))
                .expect("non-absorbing matching leaves a vertex unabsorbed");
            found = Some((m.clone(), unabsorbed));
            ControlFlow::Break(())
        });
        let rep_of_edge = |e: (usize, usize)| -> usize {
            let i = root
                .root_edges
                .iter()
                .position(|&(a, b)| (a.min(b), a.max(b)) == e)
                .expect("matching edges are root edges");
            split.twin_classes[root.vertex_of_edge[i]][0]
        };
        if let Some((m, unabsorbed)) = found {
            return Some(Refutation::NonAbsorbingMatching {
                component: idx,
                matched_vertices: m.edges().iter().map(|&e| rep_of_edge(e)).collect(),
                matching: m.edges().to_vec(),
                root,
                unabsorbed,
            });
        }
        if let Some(bull) = contains_bull_subgraph(&h) {
            return Some(Refutation::BullInRoot { component: idx, root, bull });
        }
    }
    let sub = g.induced_subgraph(&split.vertices).expect("components are non-empty");
    for kind in [CombKind::Comb, CombKind::Anticomb] {
        if let Ok(Some(mut w)) = find_unsettled(&sub, 3, kind) {
            w.clique_vertices.iter_mut().for_each(|v| *v = split.vertices[*v]);
            w.stem_vertices.iter_mut().for_each(|v| *v = split.vertices[*v]);
            return Some(Refutation::UnsettledComb { component: idx, witness: w });
        }
    }
    let outcome = oracle::is_cis_bruteforce(&split.reduced).ok()?;
    let pair = outcome.witness?;
    // A maximal clique of the reduction lifts to the union of its classes,
    // a maximal stable set to one representative per class.
    let mut clique: Vec<usize> = pair.clique.iter().flat_map(|&c| split.twin_classes[c].iter().copied()).collect();
    clique.sort_unstable();
    let mut stable_set: Vec<usize> = pair.stable_set.iter().map(|&c| split.twin_classes[c][0]).collect();
    stable_set.sort_unstable();
    Some(Refutation::DisjointPair { component: idx, clique, stable_set })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaOmega {
    pub order: usize,
    pub alpha: usize,
    pub omega: usize,
    pub bound_holds: bool,
}

/// `|V|`, `α`, `ω`, and whether `|V| ≤ α·ω`.
pub fn check_alpha_omega(g: &Graph) -> AlphaOmega {
    let alpha = oracle::alpha(g);
    let omega = oracle::omega(g);
    AlphaOmega { order: g.n(), alpha, omega, bound_holds: g.n() <= alpha * omega }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedBound {
    pub total_weight: usize,
    pub max_weighted_degree: usize,
    pub nu: usize,
    pub holds: bool,
}

/// `w(E(H))`, `Δ_w(H)`, `ν(H)`, and whether `w(E(H)) ≤ Δ_w(H)·ν(H)`.
pub fn check_weighted_bound(h: &WeightedGraph) -> Result<WeightedBound> {
    if !h.base().is_connected() {
        return Err(Error::Precondition("weighted bound needs a connected base graph".into()));
    }
    let total_weight = h.total_weight();
    let max_weighted_degree = h.max_weighted_degree();
    let nu = nu(h.base())?;
    Ok(WeightedBound { total_weight, max_weighted_degree, nu, holds: total_weight <= max_weighted_degree * nu })
}

/// The exponent `ε` with `max(α, ω) = |V|^ε`.
pub fn erdos_hajnal_stat(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::Precondition("the exponent needs at least two vertices".into()));
    }
    let ao = check_alpha_omega(g);
    Ok((ao.alpha.max(ao.omega) as f64).ln() / (g.n() as f64).ln())
}
