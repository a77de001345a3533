//! Library side of the `tdim` binary: reports, named constructions and the
//! subcommand implementations.

pub mod commands;
pub mod construct;
pub mod report;

use std::path::Path;

use anyhow::{Context, Result};
use threshold_dim::io::parse_edge_list;
use threshold_dim::Graph;

/// Reads an edge-list file; `-` reads standard input.
pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_edge_list(&text)?)
}

/// Parses `"1,2,3"` (spaces allowed, empty string = empty list).
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("not a non-negative integer: {t:?}")))
        .collect()
}

/// Exit status for an error: 2 for unparsable input, 3 for a cap, 1 otherwise.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<threshold_dim::Error>() {
        Some(threshold_dim::Error::Parse { .. }) => 2,
        Some(threshold_dim::Error::CapExceeded { .. }) => 3,
        _ => 1,
    }
}
