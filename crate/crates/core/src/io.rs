//! graph6 and edge-list text formats.
//!
//! graph6 follows the nauty format description: the order is written in
//! one, four, or eight bytes, followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1), x(0,2), x(1,2), ...`),
//! packed six bits per byte with 63 added. Padding bits must be zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

/// Parses a single graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    let sixes = |range: std::ops::Range<usize>| -> Result<usize> {
        let mut v = 0usize;
        for i in range {
            let b = *bytes
                .get(i)
                .ok_or_else(|| Error::parse(base + i, "truncated order field"))?;
            if !(63..=126).contains(&b) {
                return Err(Error::parse(base + i, format!("byte {b:#04x} outside graph6 range")));
            }
            v = (v << 6) | (b - 63) as usize;
        }
        Ok(v)
    };
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    let (n, start) = if bytes[0] != 126 {
        (sixes(0..1)?, 1)
    } else if bytes.get(1) != Some(&126) {
        (sixes(1..4)?, 4)
    } else {
        (sixes(2..8)?, 8)
    };
    if n == 0 {
        return Err(Error::parse(base, "graph6 order 0 encodes the null graph"));
    }
    if n > MAX_ORDER {
        return Err(Error::parse(base, "order too large"));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(Error::parse(
            base + start + data.len().min(expected),
            format!("expected {expected} edge bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + start + k, format!("byte {b:#04x} outside graph6 range")));
        }
        let six = b - 63;
        for shift in (0..6).rev() {
            let pos = k * 6 + (5 - shift);
            let bit = (six >> shift) & 1 == 1;
            if pos >= bits {
                if bit {
                    return Err(Error::parse(base + start + k, "non-zero padding bits"));
                }
                continue;
            }
            if bit {
                g.add_edge(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses `n` on the first non-blank line, then one `u v` pair per line.
/// Lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0usize;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let col = line_offset + (line.len() - line.trim_start().len());
        let fields: Vec<&str> = content.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(Error::parse(col, "header must be a single vertex count"));
                }
                let count: usize = fields[0]
                    .parse()
                    .map_err(|_| Error::parse(col, format!("bad vertex count {:?}", fields[0])))?;
                if count == 0 {
                    return Err(Error::parse(col, "vertex count must be positive"));
                }
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(Error::parse(col, "edge lines need exactly two vertex ids"));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| Error::parse(col, format!("bad vertex id {f:?}")))?;
                    if *slot >= count {
                        return Err(Error::parse(col, format!("vertex {} out of range 0..{count}", *slot)));
                    }
                }
                if ends[0] == ends[1] {
                    return Err(Error::parse(col, format!("self-loop at vertex {}", ends[0])));
                }
                edges.push((ends[0], ends[1]));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(offset, "missing vertex count header"))?;
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses a multi-graph input: graph6 is one graph per non-empty line,
/// an edge list is a single graph.
pub fn parse_many(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::EdgeList => Ok(vec![parse_edge_list(text)?]),
        Format::Graph6 => {
            let mut out = Vec::new();
            let mut offset = 0;
            for line in text.split_inclusive('\n') {
                if !line.trim().is_empty() {
                    out.push(parse_graph6(line).map_err(|e| match e {
                        Error::Parse { offset: o, message } => Error::Parse { offset: offset + o, message },
                        other => other,
                    })?);
                }
                offset += line.len();
            }
            Ok(out)
        }
    }
}
