//! All connected graphs of small order, one per isomorphism class.
//!
//! Graphs of order `n` come from those of order `n - 1` by adding a vertex
//! joined to a nonempty subset (every connected graph has a vertex whose
//! removal keeps it connected). Duplicates are removed through a canonical
//! adjacency code.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the atlas enumerates.
pub const MAX_ATLAS_ORDER: usize = 7;

/// Largest order [`canonical_code`] accepts (the code packs `n(n-1)/2` bits into a `u64`).
pub const MAX_CODE_ORDER: usize = 11;

/// The maximum, over vertex orders compatible with colour refinement, of
/// the upper-triangle adjacency bits read row by row.
///
/// Two graphs of the same order are isomorphic iff their codes agree.
///
/// # Panics
/// Panics above [`MAX_CODE_ORDER`] vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_order(g).1
}

/// The relabelled graph achieving [`canonical_code`].
pub fn canonical_form(g: &Graph) -> Graph {
    let (order, _) = canonical_order(g);
    g.induced(&order)
}

fn canonical_order(g: &Graph) -> (Vec<usize>, u64) {
    let n = g.order();
    assert!(n <= MAX_CODE_ORDER, "canonical_code supports at most {MAX_CODE_ORDER} vertices");
    let colour = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (_, group) in &(0..n).sorted_by_key(|&v| (colour[v], v)).chunk_by(|&v| colour[v]) {
        cells.push(group.collect());
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    let arrangements = cells.iter().map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>());
    for choice in arrangements.multi_cartesian_product() {
        let order: Vec<usize> = choice.into_iter().flatten().collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(c, _)| code > *c) {
            best = Some((code, order));
        }
    }
    match best {
        Some((code, order)) => (order, code),
        // zero cells (n = 0): multi_cartesian_product yields nothing
        None => (Vec::new(), 0),
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | u64::from(g.has_edge(order[i], order[j]));
        }
    }
    code
}

/// Stable colour refinement starting from degrees; colours are ranks of
/// isomorphism-invariant signatures, so their order is invariant too.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> =
            (0..n).map(|v| (colour[v], g.neighbors(v).map(|u| colour[u]).sorted().collect())).collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks.binary_search(&s).expect("present")).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Canonical representatives of the connected graphs of order `n`, sorted
/// by edge count, then canonical code.
pub fn connected_graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs(n)?.pop().unwrap_or_default())
}

/// `out[i]` holds the connected graphs of order `i + 1`, for orders `1..=max_order`.
pub fn connected_graphs(max_order: usize) -> Result<Vec<Vec<Graph>>> {
    if max_order > MAX_ATLAS_ORDER {
        return Err(Error::CapExceeded { what: "atlas order", size: max_order, cap: MAX_ATLAS_ORDER });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_order == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::new(1)]);
    for n in 2..=max_order {
        let mut seen: BTreeSet<(usize, u64)> = BTreeSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 2] {
            for mask in 1u32..1 << (n - 1) {
                let mut h = g.disjoint_union(&Graph::new(1));
                for v in 0..n - 1 {
                    if mask >> v & 1 == 1 {
                        h.insert_edge(v, n - 1);
                    }
                }
                let (order, code) = canonical_order(&h);
                if seen.insert((h.edge_count(), code)) {
                    next.push(((h.edge_count(), code), h.induced(&order)));
                }
            }
        }
        next.sort_by_key(|(key, _)| *key);
        levels.push(next.into_iter().map(|(_, h)| h).collect());
    }
    Ok(levels)
}
