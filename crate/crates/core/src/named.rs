//! Small named graphs with fixed labelings.
//!
//! Labelings:
//! - bull: `v1..v5` are `0..4`; edges 01, 12, 23, 14, 24 (4 is the horn tip over the triangle 1-2-4).
//! - claw: center 0, leaves 1, 2, 3.
//! - gem: path 0-1-2-3, hub 4.
//! - W4: cycle 0-1-2-3, hub 4.
//! - `P_n`: path 0-1-..-(n-1); `C_n`: that path closed by (n-1)-0.
//! - `K_{m,n}`: sides `0..m` and `m..m+n`.
//! - `comb(k)`: clique `v_i = i`, stem `w_i = k + i` for `i < k`.
//! - `anticomb(k)`: complement of `comb(k)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Bull,
    Claw,
    Gem,
    W4,
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Comb(usize),
    Anticomb(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        use NamedGraph::*;
        match self {
            Bull => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
            Claw => CompleteBipartite(1, 3).build(),
            Gem => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
            W4 => Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
            Path(n) => {
                if n == 0 {
                    return Err(Error::InvalidParameter("P_n needs n >= 1".into()));
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter("C_n needs n >= 3".into()));
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Graph::from_edges(n, &edges)
            }
            Complete(n) => {
                if n == 0 {
                    return Err(Error::InvalidParameter("K_n needs n >= 1".into()));
                }
                Ok(Graph::complete(n))
            }
            CompleteBipartite(m, n) => {
                if m == 0 || n == 0 {
                    return Err(Error::InvalidParameter("K_{m,n} needs m, n >= 1".into()));
                }
                let mut g = Graph::empty(m + n);
                for a in 0..m {
                    for b in m..m + n {
                        g.add_edge(a, b);
                    }
                }
                Ok(g)
            }
            Comb(k) => {
                if k < 2 {
                    return Err(Error::InvalidParameter("combs need k >= 2".into()));
                }
                let mut g = Graph::empty(2 * k);
                for i in 0..k {
                    for j in (i + 1)..k {
                        g.add_edge(i, j);
                    }
                    g.add_edge(i, k + i);
                }
                Ok(g)
            }
            Anticomb(k) => Ok(Comb(k).build()?.complement()),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Bull => write!(f, "bull"),
            Claw => write!(f, "claw"),
            Gem => write!(f, "gem"),
            W4 => write!(f, "w4"),
            Path(n) => write!(f, "p{n}"),
            Cycle(n) => write!(f, "c{n}"),
            Complete(n) => write!(f, "k{n}"),
            CompleteBipartite(m, n) => write!(f, "k{m},{n}"),
            Comb(k) => write!(f, "comb{k}"),
            Anticomb(k) => write!(f, "anticomb{k}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `bull`, `claw`, `gem`, `w4`, `p5`, `c5`, `k4`, `k2,3`,
    /// `comb3`, `anticomb3` (case-insensitive; `_`, `{`, `}` ignored).
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let bad = || Error::InvalidParameter(format!("unknown graph name {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match norm.as_str() {
            "bull" => NamedGraph::Bull,
            "claw" => NamedGraph::Claw,
            "gem" => NamedGraph::Gem,
            "w4" => NamedGraph::W4,
            _ => {
                if let Some(rest) = norm.strip_prefix("anticomb") {
                    NamedGraph::Anticomb(num(rest)?)
                } else if let Some(rest) = norm.strip_prefix("comb") {
                    NamedGraph::Comb(num(rest)?)
                } else if let Some(rest) = norm.strip_prefix('p') {
                    NamedGraph::Path(num(rest)?)
                } else if let Some(rest) = norm.strip_prefix('c') {
                    NamedGraph::Cycle(num(rest)?)
                } else if let Some(rest) = norm.strip_prefix('k') {
                    match rest.split_once(',') {
                        Some((m, n)) => NamedGraph::CompleteBipartite(num(m)?, num(n)?),
                        None => NamedGraph::Complete(num(rest)?),
                    }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}
