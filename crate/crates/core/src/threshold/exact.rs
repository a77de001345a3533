//! Bounds on `τ` from every available source, and the exhaustive oracle.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::construct::diametral_bound;
use super::diameter_two::{diameter_two_tau, diameter_two_work};
use super::lower::tau_lower_bound;
use super::multipartite::{chromatic_witness, default_coloring};
use crate::certificate::{Certificate, CertificateKind, ExhaustiveMethod, Witness};
use crate::distance::distances;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::limits::Limits;
use crate::resolve::{beta_in, metric_dimension_with, resolves};

/// Largest number of landmark sets the diameter-2 search may examine inside [`tau_bounds`].
const DIAMETER_TWO_BUDGET: u128 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperSource {
    /// A metric basis of `g` itself, no edges added.
    MetricBasis,
    /// Landmarks on a diametral path.
    Diametral,
    /// The threshold graph of the multipartite graph on a colouring's classes.
    Coloring,
    /// The diameter-2 matching search.
    DiameterTwo,
    /// The exhaustive supergraph search.
    Enumeration,
}

/// A supergraph `g + edges` in which `basis` resolves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperWitness {
    pub source: UpperSource,
    pub edges: EdgeSet,
    pub basis: Vec<usize>,
}

impl UpperWitness {
    pub fn value(&self) -> usize {
        self.basis.len()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        g.add_edges(&self.edges).is_ok_and(|h| self.basis.iter().all(|&v| v < g.order()) && resolves(&h, &self.basis))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauBounds {
    pub lower: usize,
    pub certificate: Certificate,
    pub upper: usize,
    pub witness: UpperWitness,
    /// Set when the two bounds meet.
    pub exact: Option<usize>,
}

impl TauBounds {
    pub fn new(certificate: Certificate, witness: UpperWitness) -> Self {
        let (lower, upper) = (certificate.value, witness.value());
        debug_assert!(lower <= upper, "lower {lower} above upper {upper}");
        TauBounds { lower, certificate, upper, witness, exact: (lower == upper).then_some(lower) }
    }
}

/// Upper-bound witnesses from the metric basis (within the order cap), the
/// diametral path and a colouring; the smallest wins, earlier on ties.
pub fn upper_candidates(g: &Graph, limits: &Limits) -> Vec<UpperWitness> {
    let mut out = Vec::new();
    if g.order() <= limits.max_beta_order {
        if let Ok(b) = metric_dimension_with(g, limits) {
            out.push(UpperWitness { source: UpperSource::MetricBasis, edges: EdgeSet::new(), basis: b.basis });
        }
    }
    if let Some(d) = diametral_bound(g) {
        out.push(UpperWitness { source: UpperSource::Diametral, edges: d.edges, basis: d.landmarks });
    }
    if g.order() > 0 {
        let (coloring, _) = default_coloring(g, limits.max_exact_coloring_order);
        if let Ok((edges, basis)) = chromatic_witness(g, &coloring) {
            out.push(UpperWitness { source: UpperSource::Coloring, edges, basis });
        }
    }
    out
}

/// Lower and upper bounds without the exhaustive supergraph search.
///
/// For diameter at most 2 the matching search closes the gap whenever it
/// fits the work budget and the order cap.
pub fn tau_bounds(g: &Graph, limits: &Limits) -> TauBounds {
    let certificate = tau_lower_bound(g, limits);
    let witness = upper_candidates(g, limits)
        .into_iter()
        .min_by_key(UpperWitness::value)
        .expect("the colouring bound always applies");
    let bounds = TauBounds::new(certificate, witness);
    if bounds.exact.is_some() || g.order() > limits.max_beta_order {
        return bounds;
    }
    let (from, upto) = (bounds.lower, bounds.upper - 1);
    if diameter_two_work(g.order(), from, upto) > DIAMETER_TWO_BUDGET || !distances(g).diameter().at_most(2) {
        return bounds;
    }
    let work = diameter_two_work(g.order(), from, upto) as u64;
    let exhaustive = |value, candidates| Certificate {
        kind: CertificateKind::Exhaustive,
        value,
        witness: Witness::Exhaustive { method: ExhaustiveMethod::DiameterTwoAssignment, candidates },
    };
    match diameter_two_tau(g, from, upto) {
        Some(r) => TauBounds::new(
            exhaustive(r.tau, r.candidates),
            UpperWitness { source: UpperSource::DiameterTwo, edges: r.edges, basis: r.landmarks },
        ),
        None => TauBounds::new(exhaustive(bounds.upper, work), bounds.witness),
    }
}

/// Exact `τ` by examining supergraphs level by level (number of added
/// edges ascending, edge masks ascending within a level).
///
/// Each level runs in parallel; a candidate only matters if its `β` is
/// below the best of the earlier levels, and the level's result is the
/// minimum `(β, mask)`, so the answer and witness do not depend on
/// scheduling. The search stops once the best meets the lower bound.
pub fn tau_exact(g: &Graph, limits: &Limits) -> Result<TauBounds> {
    let n = g.order();
    if n > limits.max_beta_order {
        return Err(Error::CapExceeded { what: "order for tau_exact", size: n, cap: limits.max_beta_order });
    }
    let complement = g.complement_edges().to_vec();
    let m = complement.len();
    let cap = limits.max_complement_edges.min(63);
    if m > cap {
        return Err(Error::CapExceeded { what: "complement edge count for tau_exact", size: m, cap });
    }
    let cheap = tau_lower_bound(g, limits);
    // τ = 1 exactly for linear forests, so anything else on two or more vertices has τ >= 2
    let structural = if n >= 2 && !g.is_linear_forest() { 2 } else { usize::from(n >= 2) };
    let lower = cheap.value.max(structural);

    let dm = distances(g);
    let base = beta_in(&dm, 0, n.max(1)).expect("V(G) minus one vertex always resolves");
    let (mut best, mut best_mask, mut best_basis) = (base.beta, 0u64, base.basis);
    let mut candidates = 1u64;

    for p in 1..=m {
        if best <= lower {
            break;
        }
        let masks = level_masks(m, p);
        candidates += masks.len() as u64;
        let ceiling = best - 1;
        let running = AtomicUsize::new(ceiling);
        let found = masks
            .par_iter()
            .filter_map(|&mask| {
                let h = with_mask(g, &complement, mask);
                let upto = running.load(Ordering::Relaxed);
                let r = beta_in(&distances(&h), lower, upto + 1)?;
                running.fetch_min(r.beta, Ordering::Relaxed);
                Some((r.beta, mask, r.basis))
            })
            .min_by_key(|(beta, mask, _)| (*beta, *mask));
        if let Some((beta, mask, basis)) = found {
            (best, best_mask, best_basis) = (beta, mask, basis);
        }
    }

    let edges: EdgeSet = (0..m).filter(|&i| best_mask >> i & 1 == 1).map(|i| complement[i]).collect();
    let certificate = if cheap.value >= best {
        cheap
    } else {
        Certificate {
            kind: CertificateKind::Exhaustive,
            value: best,
            witness: Witness::Exhaustive { method: ExhaustiveMethod::SupergraphEnumeration, candidates },
        }
    };
    Ok(TauBounds::new(certificate, UpperWitness { source: UpperSource::Enumeration, edges, basis: best_basis }))
}

fn with_mask(g: &Graph, complement: &[(usize, usize)], mask: u64) -> Graph {
    let mut h = g.clone();
    let mut rest = mask;
    while rest != 0 {
        let (u, v) = complement[rest.trailing_zeros() as usize];
        h.insert_edge(u, v);
        rest &= rest - 1;
    }
    h
}

/// All `m`-bit masks with `p` bits set, ascending (Gosper's hack).
fn level_masks(m: usize, p: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if p > m {
        return out;
    }
    let mut x: u64 = (1u64 << p) - 1;
    let limit = 1u64 << m;
    while x < limit {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::resolve::metric_dimension;

    /// Every supergraph, exact β of each, no pruning.
    fn oracle_tau(g: &Graph) -> usize {
        let c = g.complement_edges().to_vec();
        (0u64..1 << c.len()).map(|mask| metric_dimension(&with_mask(g, &c, mask)).unwrap().beta).min().unwrap()
    }

    #[test]
    fn level_masks_enumerate_combinations() {
        assert_eq!(level_masks(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(level_masks(3, 3), vec![0b111]);
        assert_eq!(level_masks(20, 10).len(), 184_756);
    }

    #[test]
    fn named_examples() {
        let l = Limits::default();
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(tau_exact(&k33, &l).unwrap().exact, Some(3));
        for n in 2..7 {
            assert_eq!(tau_exact(&path(n).unwrap(), &l).unwrap().exact, Some(1));
        }
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        let t = tau_exact(&k23, &l).unwrap();
        assert_eq!(t.exact, Some(2));
        assert_eq!(t.witness.edges.to_vec(), vec![(2, 3)]);
        assert_eq!(t.witness.basis, vec![0, 2]);
        assert!(t.witness.verify(&k23));
        assert_eq!(tau_exact(&complete(1).unwrap(), &l).unwrap().exact, Some(0));
    }

    #[test]
    fn linear_forest_needs_edges() {
        let g = path(2).unwrap().disjoint_union(&path(2).unwrap());
        let t = tau_exact(&g, &Limits::default()).unwrap();
        assert_eq!(t.exact, Some(1));
        assert_eq!(t.witness.edges.len(), 1);
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..150 {
            let n = 1 + (state % 6) as usize;
            let mut g = Graph::new(n);
            let density = 30 + state % 60;
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < density {
                        g.insert_edge(u, v);
                    }
                }
            }
            let t = tau_exact(&g, &Limits::default()).unwrap();
            assert_eq!(t.exact, Some(oracle_tau(&g)), "{g:?}");
            assert!(t.witness.verify(&g));
            let b = tau_bounds(&g, &Limits::default());
            assert!(b.lower <= oracle_tau(&g) && oracle_tau(&g) <= b.upper, "{g:?}");
            assert!(b.witness.verify(&g));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(9).unwrap();
        assert!(matches!(tau_exact(&g, &Limits::default()), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn bounds_close_on_diameter_two() {
        let g = subdivided_star(2).join(&edgeless(2));
        let b = tau_bounds(&g, &Limits::default());
        assert_eq!(b.exact, Some(4));
        assert_eq!(b.witness.source, UpperSource::DiameterTwo);
        assert!(b.witness.verify(&g));
    }
}
