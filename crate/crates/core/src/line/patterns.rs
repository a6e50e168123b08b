use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{find_maximal_matching, is_absorbing, DEFAULT_MATCHING_CAP};
use crate::oracle::{maximal_cliques_capped, DEFAULT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    Claw,
    Gem,
    W4,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Claw => "claw",
            Pattern::Gem => "gem",
            Pattern::W4 => "w4",
        })
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "claw" => Ok(Pattern::Claw),
            "gem" => Ok(Pattern::Gem),
            "w4" => Ok(Pattern::W4),
            _ => Err(Error::InvalidParameter(format!("unknown pattern {s:?}"))),
        }
    }
}

/// Finds an induced copy of `pattern`, returned in the labeling of the
/// matching named graph: claw `[center, l1, l2, l3]`, gem `[s, t, u, v, hub]`
/// (path `s-t-u-v`), W4 `[x1, x2, x3, x4, hub]` (cycle `x1..x4`).
pub fn contains_induced(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    match pattern {
        Pattern::Claw => find_claw(g),
        Pattern::Gem => find_gem(g),
        Pattern::W4 => find_w4(g),
    }
}

fn find_claw(g: &Graph) -> Option<Vec<usize>> {
    for c in 0..g.n() {
        let nc = g.neighbors(c);
        if nc.len() < 3 {
            continue;
        }
        for a in nc {
            let rest_a = nc.difference(g.neighbors(a));
            for b in rest_a.iter().filter(|&b| b > a) {
                let rest_b = rest_a.difference(g.neighbors(b));
                if let Some(d) = rest_b.iter().find(|&d| d > b) {
                    return Some(vec![c, a, b, d]);
                }
            }
        }
    }
    None
}

fn find_gem(g: &Graph) -> Option<Vec<usize>> {
    for w in 0..g.n() {
        let nw = g.neighbors(w);
        if nw.len() < 4 {
            continue;
        }
        for t in nw {
            let nt = nw.intersection(g.neighbors(t));
            for u in &nt {
                let nu = g.neighbors(u);
                let mut starts = nt.difference(nu);
                starts.remove(u);
                for s in &starts {
                    let mut ends = nw.intersection(nu).difference(g.neighbors(t)).difference(g.neighbors(s));
                    ends.remove(t);
                    ends.remove(s);
                    if let Some(v) = ends.first() {
                        return Some(vec![s, t, u, v, w]);
                    }
                }
            }
        }
    }
    None
}

fn find_w4(g: &Graph) -> Option<Vec<usize>> {
    for z in 0..g.n() {
        let nz = g.neighbors(z);
        if nz.len() < 4 {
            continue;
        }
        for x1 in nz {
            let n1 = g.neighbors(x1);
            for x2 in nz.intersection(n1).iter() {
                let mut thirds = nz.intersection(g.neighbors(x2)).difference(n1);
                thirds.remove(x1);
                for x3 in &thirds {
                    let mut fourths = nz.intersection(g.neighbors(x3)).intersection(n1).difference(g.neighbors(x2));
                    fourths.remove(x2);
                    if let Some(x4) = fourths.first() {
                        return Some(vec![x1, x2, x3, x4, z]);
                    }
                }
            }
        }
    }
    None
}

/// A (not necessarily induced) bull subgraph, as `[v1, v2, v3, v4, v5]`
/// with edges `v1v2, v2v3, v3v4, v2v5, v3v5`.
pub fn contains_bull_subgraph(g: &Graph) -> Option<Vec<usize>> {
    for a in 0..g.n() {
        for b in g.neighbors(a) {
            let common = g.neighbors(a).intersection(g.neighbors(b));
            for c in &common {
                let mut left = g.neighbors(a).clone();
                left.remove(b);
                left.remove(c);
                let mut right = g.neighbors(b).clone();
                right.remove(a);
                right.remove(c);
                for x in &left {
                    let mut r = right.clone();
                    r.remove(x);
                    if let Some(y) = r.first() {
                        return Some(vec![x, a, b, y, c]);
                    }
                }
            }
        }
    }
    None
}

/// Every vertex lies in at most two maximal cliques.
pub fn is_domino(g: &Graph) -> Result<bool> {
    is_domino_capped(g, DEFAULT_CAP)
}

pub fn is_domino_capped(g: &Graph, cap: usize) -> Result<bool> {
    let cliques = maximal_cliques_capped(g, cap)?;
    let mut count = vec![0usize; g.n()];
    for c in cliques.iter() {
        for v in c {
            count[v] += 1;
        }
    }
    Ok(count.iter().all(|&c| c <= 2))
}

/// Decides whether `L(H)` is CIS through its root: no bull subgraph and
/// every maximal matching absorbing.
pub fn is_cis_line(h: &Graph) -> Result<bool> {
    if let Some(v) = h.isolated_vertices().first() {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    if contains_bull_subgraph(h).is_some() {
        return Ok(false);
    }
    let bad = find_maximal_matching(h, DEFAULT_MATCHING_CAP, |m| !is_absorbing(h, m).unwrap_or(false))?;
    Ok(bad.is_none())
}
