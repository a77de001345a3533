//! Exact `τ` for graphs of diameter at most 2.
//!
//! Adding edges never raises the diameter, so in every supergraph the
//! distance from an outsider `v` to a landmark is 1 or 2 and the signature
//! of `v` is just its landmark neighbourhood. Hence `W` is a landmark set
//! of some supergraph iff the outsiders can be given pairwise distinct
//! subsets `S_v ⊇ N_W(v)` of `W`, which is a bipartite matching problem.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::distance::distances;
use crate::graph::{EdgeSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterTwoTau {
    pub tau: usize,
    pub landmarks: Vec<usize>,
    pub edges: EdgeSet,
    /// Landmark sets examined.
    pub candidates: u64,
}

/// Number of landmark sets of size `from..=upto` on `n` vertices, saturating.
pub fn diameter_two_work(n: usize, from: usize, upto: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128; // C(n, t) for t = 0
    for t in 0..=upto.min(n) {
        if t >= from {
            total = total.saturating_add(binom);
        }
        binom = binom.saturating_mul((n - t) as u128) / (t as u128 + 1);
    }
    total
}

/// The least `t` in `from..=upto` for which some `t`-set is a landmark set
/// of a supergraph, with the lexicographically smallest such set and the
/// edges realising it. `None` if the diameter exceeds 2 or no size in the
/// range works.
pub fn diameter_two_tau(g: &Graph, from: usize, upto: usize) -> Option<DiameterTwoTau> {
    let n = g.order();
    if !distances(g).diameter().at_most(2) {
        return None;
    }
    if n <= 1 {
        return (from == 0).then(|| DiameterTwoTau {
            tau: 0,
            landmarks: Vec::new(),
            edges: EdgeSet::new(),
            candidates: 1,
        });
    }
    let mut candidates = 0u64;
    for t in from.max(1)..=upto.min(n - 1) {
        if t < 64 && (n - t) as u128 > 1u128 << t {
            continue;
        }
        let sets: Vec<Vec<usize>> = (0..n).combinations(t).collect();
        candidates += sets.len() as u64;
        if let Some((w, assigned)) = sets.into_par_iter().find_map_first(|w| assign(g, &w).map(|a| (w, a))) {
            let mut edges = EdgeSet::new();
            for (v, mask) in assigned {
                for (i, &x) in w.iter().enumerate() {
                    if mask >> i & 1 == 1 && !g.has_edge(v, x) {
                        edges.insert(v, x).expect("v is not a landmark");
                    }
                }
            }
            return Some(DiameterTwoTau { tau: t, landmarks: w, edges, candidates });
        }
    }
    None
}

/// Distinct supersets of the landmark neighbourhoods, or `None`.
///
/// Outsiders are matched in id order; each tries its supersets by number
/// of added landmarks, then lexicographically.
fn assign(g: &Graph, w: &[usize]) -> Option<Vec<(usize, u64)>> {
    let t = w.len();
    if t > 63 {
        return None;
    }
    let outsiders: Vec<usize> = (0..g.order()).filter(|v| !w.contains(v)).collect();
    let base: Vec<u64> = outsiders
        .iter()
        .map(|&v| w.iter().enumerate().filter(|&(_, &x)| g.has_edge(v, x)).map(|(i, _)| 1u64 << i).sum())
        .collect();
    let mut owner: HashMap<u64, usize> = HashMap::new();
    let mut mate = vec![0u64; outsiders.len()];
    for i in 0..outsiders.len() {
        let mut seen = HashSet::new();
        if !augment(i, t, &base, &mut owner, &mut mate, &mut seen) {
            return None;
        }
    }
    Some(outsiders.into_iter().zip(mate).collect())
}

fn supersets(base: u64, t: usize) -> impl Iterator<Item = u64> {
    let free: Vec<usize> = (0..t).filter(|&i| base >> i & 1 == 0).collect();
    (0..=free.len()).flat_map(move |s| {
        free.clone().into_iter().combinations(s).map(move |extra| extra.iter().fold(base, |m, &i| m | 1 << i))
    })
}

fn augment(
    i: usize,
    t: usize,
    base: &[u64],
    owner: &mut HashMap<u64, usize>,
    mate: &mut [u64],
    seen: &mut HashSet<u64>,
) -> bool {
    for s in supersets(base[i], t) {
        if !seen.insert(s) {
            continue;
        }
        let free = match owner.get(&s) {
            None => true,
            Some(&j) => augment(j, t, base, owner, mate, seen),
        };
        if free {
            owner.insert(s, i);
            mate[i] = s;
            return true;
        }
    }
    false
}
