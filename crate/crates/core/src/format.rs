//! Plain-text graph format.
//!
//! ```text
//! # triangle
//! v 3
//! e 0 1
//! e 1 2
//! e 2 0
//! ```
//!
//! `v N` declares the vertex count and must come first; every `e U V` line
//! adds an edge, in order. Lines starting with `#` are comments.

use std::fmt::Write;

use crate::edge_set::{EdgeId, EdgeSet};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let numbers = fields
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("not a vertex index: {:?}", f)))
            })
            .collect::<Result<Vec<_>>>()?;
        match (tag, numbers.as_slice()) {
            ("v", &[n]) => {
                if vertex_count.is_some() {
                    return Err(Error::parse(line_no, "duplicate vertex count line"));
                }
                if n == 0 {
                    return Err(Error::parse(line_no, "graph must have at least one vertex"));
                }
                vertex_count = Some(n);
            }
            ("e", &[u, v]) => {
                let n = vertex_count
                    .ok_or_else(|| Error::parse(line_no, "edge before the vertex count line"))?;
                if u >= n || v >= n {
                    return Err(Error::parse(
                        line_no,
                        format!("endpoint out of range for {} vertices", n),
                    ));
                }
                edges.push((u, v));
            }
            _ => return Err(Error::parse(line_no, format!("malformed line {:?}", line))),
        }
    }
    let n = vertex_count.ok_or_else(|| Error::parse(0, "missing vertex count line"))?;
    Multigraph::new(n, edges).map_err(|e| match e {
        Error::ResourceCap { .. } => e,
        other => Error::parse(0, other.to_string()),
    })
}

pub fn print_graph(graph: &Multigraph) -> String {
    let mut out = format!("v {}\n", graph.vertex_count());
    for &(u, v) in graph.edges() {
        writeln!(out, "e {} {}", u, v).unwrap();
    }
    out
}

/// Parses a comma-separated list of 1-based edge indices, e.g. `2,3`.
pub fn parse_edge_list(text: &str, edge_count: usize) -> Result<Vec<EdgeId>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|field| {
            let ordinal: usize = field
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, format!("not an edge index: {:?}", field)))?;
            EdgeId::from_ordinal(ordinal)
                .filter(|e| e.0 < edge_count)
                .ok_or_else(|| Error::parse(1, format!("edge index {} out of range", ordinal)))
        })
        .collect()
}

pub fn parse_edge_set(text: &str, edge_count: usize) -> Result<EdgeSet> {
    let list = parse_edge_list(text, edge_count)?;
    let set: EdgeSet = list.iter().copied().collect();
    if set.len() != list.len() {
        return Err(Error::parse(1, "repeated edge index"));
    }
    Ok(set)
}
