//! Exhaustive labeled graph enumeration.
//!
//! Graph `index` on `n` vertices has edge `x(i,j)` iff bit `k` of `index` is
//! set, where `k` is the position of the pair in graph6 column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`). Indices are stable, so scans can be
//! split into disjoint ranges.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_ORDER: usize = 7;

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (index >> k) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

pub struct LabeledGraphs {
    n: usize,
    range: Range<u64>,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.range.next().map(|i| graph_from_index(self.n, i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.range.size_hint()
    }
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices, `n ≤ 7`.
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    labeled_graphs_with_limit(n, DEFAULT_MAX_ORDER)
}

pub fn labeled_graphs_with_limit(n: usize, max_order: usize) -> Result<LabeledGraphs> {
    check_order(n, max_order)?;
    Ok(LabeledGraphs { n, range: 0..labeled_count(n) })
}

/// A sub-range of the labeled enumeration, for partitioned scans.
pub fn labeled_graph_range(n: usize, range: Range<u64>, max_order: usize) -> Result<LabeledGraphs> {
    check_order(n, max_order)?;
    let total = labeled_count(n);
    if range.end > total {
        return Err(Error::InvalidParameter(format!("range end {} exceeds {total}", range.end)));
    }
    Ok(LabeledGraphs { n, range })
}

fn check_order(n: usize, max_order: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NullGraph);
    }
    if n > max_order || n > 11 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration is limited to n <= {max_order}; ingest a graph6 corpus for larger orders"
        )));
    }
    Ok(())
}
