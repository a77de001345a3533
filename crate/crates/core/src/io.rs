//! Canonical edge-list text format and DOT export.
//!
//! Edge list: first line `<n> <m>`, then `m` lines `<u> <v>` with
//! `0 <= u < v < n`, whitespace separated, LF line endings. The writer emits
//! edges in lexicographic order, so writing a parsed canonical file
//! reproduces it byte for byte.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse().map_err(|_| parse_err(line_no, format!("bad {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Blank lines are ignored; an edge may be
/// given in either orientation.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (n, m) = parse_pair(hl, header)?;
    if n == 0 {
        return Err(parse_err(hl, "graph order must be positive"));
    }
    let mut g = Graph::new(n);
    let mut count = 0;
    for (no, line) in lines {
        let (u, v) = parse_pair(no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(no, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(no, format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(no, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Undirected DOT with vertex ids as node names; `highlight` vertices get `color=black`.
pub fn to_dot(g: &Graph, highlight: &[usize]) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        if highlight.contains(&v) {
            writeln!(out, "  {v} [color=black];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
