//! Resolving sets, exact metric dimension, and lower bounds on it.

mod search;

pub(crate) use search::LandmarkSearch;

use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::certificate::{Certificate, CertificateKind, Witness};
use crate::clique::{greedy_clique, max_clique};
use crate::distance::{distances, DistanceMatrix, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::threshold::g_of;

/// Orders from which the exhaustive layer splits work across threads.
const PARALLEL_FROM_ORDER: usize = 28;

/// Distances from one vertex to an ordered landmark list; `u32::MAX` marks "unreachable".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(pub Vec<u32>);

pub fn signature(dm: &DistanceMatrix, v: usize, landmarks: &[usize]) -> Signature {
    Signature(landmarks.iter().map(|&w| dm.get(v, w)).collect())
}

/// A minimum resolving set (metric basis) and its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaResult {
    pub beta: usize,
    pub basis: Vec<usize>,
}

/// `true` iff the landmarks give every vertex a distinct signature.
pub fn resolves(g: &Graph, landmarks: &[usize]) -> bool {
    first_unresolved_pair(g, landmarks).is_none()
}

/// Smallest pair `(u, v)`, `u < v`, with equal signatures.
pub fn first_unresolved_pair(g: &Graph, landmarks: &[usize]) -> Option<(usize, usize)> {
    first_unresolved_pair_in(&distances(g), landmarks)
}

pub(crate) fn first_unresolved_pair_in(dm: &DistanceMatrix, landmarks: &[usize]) -> Option<(usize, usize)> {
    let n = dm.order();
    let mut sigs: Vec<(Signature, usize)> = (0..n).map(|v| (signature(dm, v, landmarks), v)).collect();
    sigs.sort_unstable();
    sigs.windows(2).filter(|p| p[0].0 == p[1].0).map(|p| (p[0].1, p[1].1)).min()
}

/// Exact metric dimension under the default [`Limits`].
pub fn metric_dimension(g: &Graph) -> Result<BetaResult> {
    metric_dimension_with(g, &Limits::default())
}

/// Exact metric dimension with the lexicographically smallest basis.
///
/// Sizes are tried in increasing order; for size `b` the candidates exclude
/// [`basis_vertex_filter`]`(g, b)`.
pub fn metric_dimension_with(g: &Graph, limits: &Limits) -> Result<BetaResult> {
    let n = g.order();
    if n > limits.max_beta_order {
        return Err(Error::CapExceeded { what: "order for metric_dimension", size: n, cap: limits.max_beta_order });
    }
    let dm = distances(g);
    Ok(beta_in(&dm, 0, n).expect("V(G) minus one vertex always resolves"))
}

/// Smallest resolving set of size in `from..upto`, or `None` if every such size fails.
///
/// Callers pass `from` only when no smaller set can resolve.
pub(crate) fn beta_in(dm: &DistanceMatrix, from: usize, upto: usize) -> Option<BetaResult> {
    let n = dm.order();
    if n <= 1 {
        return (from == 0 && upto > 0).then(|| BetaResult { beta: 0, basis: Vec::new() });
    }
    let search = LandmarkSearch::new(dm);
    let parallel = n >= PARALLEL_FROM_ORDER;
    for b in from.max(1)..upto.min(n) {
        let mut allowed = bitset::full(n);
        for v in filter_in(dm, b) {
            bitset::clear(&mut allowed, v);
        }
        if let Some(basis) = search.find(b, &allowed, parallel) {
            return Some(BetaResult { beta: b, basis });
        }
    }
    None
}

/// Vertices that cannot lie in any resolving set of size `b`: those with
/// `|N_k(v)| > (2k+1)^(b-1)` for some `k >= 1`.
pub fn basis_vertex_filter(g: &Graph, b: usize) -> Vec<usize> {
    filter_in(&distances(g), b)
}

pub(crate) fn filter_in(dm: &DistanceMatrix, b: usize) -> Vec<usize> {
    if b == 0 {
        return Vec::new();
    }
    let n = dm.order();
    let max_k = dm.max_finite();
    let mut counts = vec![0usize; max_k as usize + 1];
    (0..n)
        .filter(|&v| {
            counts.iter_mut().for_each(|c| *c = 0);
            for &d in dm.row(v) {
                if d != UNREACHABLE {
                    counts[d as usize] += 1;
                }
            }
            (1..=max_k).any(|k| ball_cap(k, b).is_some_and(|cap| counts[k as usize] as u128 > cap))
        })
        .collect()
}

/// `(2k+1)^(b-1)`, or `None` when it overflows (and so caps nothing).
fn ball_cap(k: u32, b: usize) -> Option<u128> {
    (2 * k as u128 + 1).checked_pow(u32::try_from(b - 1).ok()?)
}

/// `⌈log₂ c⌉`.
pub fn ceil_log2(c: usize) -> usize {
    if c <= 1 {
        0
    } else {
        (usize::BITS - (c - 1).leading_zeros()) as usize
    }
}

/// `β ≥ ⌈log₂ ω⌉` with a maximum clique as witness.
///
/// Graphs above the clique cap fail; see [`clique_certificate`] for a variant that
/// falls back to a greedy clique.
pub fn clique_lower_bound(g: &Graph, limits: &Limits) -> Result<Certificate> {
    let clique = max_clique(g, limits.max_clique_order)?;
    Ok(clique_cert(clique))
}

/// Like [`clique_lower_bound`] but never fails: above the cap any clique
/// found greedily still certifies its own bound.
pub fn clique_certificate(g: &Graph, limits: &Limits) -> Certificate {
    clique_lower_bound(g, limits).unwrap_or_else(|_| clique_cert(greedy_clique(g)))
}

fn clique_cert(clique: Vec<usize>) -> Certificate {
    Certificate {
        kind: CertificateKind::Clique,
        value: ceil_log2(clique.len()),
        witness: Witness::Clique { vertices: clique },
    }
}

/// `β ≥ g(n)` for graphs of diameter at most 2.
pub fn diam2_lower_bound(g: &Graph) -> Option<Certificate> {
    let n = g.order();
    let diameter = distances(g).diameter().finite()?;
    if diameter > 2 || n < 2 {
        return None;
    }
    Some(Certificate { kind: CertificateKind::Diam2, value: g_of(n), witness: Witness::Diam2 { order: n, diameter } })
}
