//! Constructors for irreducible graphs (`τ = β`) and the verdict engine.

use serde::Serialize;

use crate::certificate::{Certificate, CertificateKind, Witness};
use crate::distance::distances;
use crate::error::{Error, Result};
use crate::families::{complete, edgeless, path};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::resolve::{clique_certificate, diam2_lower_bound, metric_dimension_with, BetaResult};
use crate::shortlex::{reverse_shortlex_assign, shortlex_assign, AssignmentProblem};
use crate::threshold::{
    g_of, min_degree_certificate, no_two_basis_supergraph, tau_bounds, tau_exact, TauBounds, UpperSource, UpperWitness,
};
use crate::EdgeSet;

/// Largest `b` accepted by [`s_graph_bs`] (the clique has `2^b` vertices).
const MAX_BS_DIMENSION: usize = 20;

/// `S_n`: `K_{g(n)}` on ids `0..g(n)` and `K_{n-g(n)}` on the rest, joined by
/// reverse shortlex assignment with the first clique as `W`.
pub fn s_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("S_n needs n >= 2, got {n}")));
    }
    let a = g_of(n);
    let f = complete(a)?.disjoint_union(&complete(n - a)?);
    let prob = AssignmentProblem::new(&f, (0..a).collect(), (a..n).collect())?;
    f.add_edges(&reverse_shortlex_assign(&prob))
}

/// `S_{b,s}`: `K_{2^b}` on ids `0..2^b`, `K̄_b` on the next `b` ids, then the
/// path `P_s` with its first vertex joined to the first `K̄_b` vertex. The
/// clique vertices get `K̄_b`-neighbourhoods by shortlex assignment.
pub fn s_graph_bs(b: usize, s: usize) -> Result<Graph> {
    if !(2..=MAX_BS_DIMENSION).contains(&b) || s == 0 {
        return Err(Error::InvalidParameter(format!(
            "S_(b,s) needs 2 <= b <= {MAX_BS_DIMENSION}, s >= 1; got b={b}, s={s}"
        )));
    }
    let q = 1usize << b;
    let mut f = complete(q)?.disjoint_union(&edgeless(b)).disjoint_union(&path(s)?);
    f.insert_edge(q, q + b);
    let prob = AssignmentProblem::new(&f, (q..q + b).collect(), (0..q).collect())?;
    f.add_edges(&shortlex_assign(&prob))
}

/// `g ∨ K̄_2`, the two new vertices last.
pub fn join_k2bar(g: &Graph) -> Graph {
    g.join(&edgeless(2))
}

/// `g ∨ K_2`, the two new vertices last.
pub fn join_k2(g: &Graph) -> Graph {
    g.join(&complete(2).expect("K_2"))
}

/// `β(g ∨ K̄_2)` as predicted from `β(g)`; only for diameter at most 2.
pub fn predicted_join_k2bar_beta(g: &Graph, beta: usize) -> Option<usize> {
    distances(g).diameter().at_most(2).then_some(beta + 1)
}

/// A connected irreducible graph of order `n` and metric dimension `b`, `1 <= b < n`.
///
/// * `b = 1`: the path `P_n`.
/// * `n > 2^b + b`: `S_{b, n - 2^b - b}`.
/// * `2b < n <= 2^b + b`: `S_{n-2k}` joined with `k` copies of `K̄_2`, for the
///   least `k` with `2^(b-k-1) + b - k <= n - 2k <= 2^(b-k) + b - k`.
/// * `n <= 2b`: `K_{n-2k}` joined with `k` copies of `K̄_2`, `k = n - 1 - b`.
///
/// Joined pairs are appended after the base graph, one pair at a time.
pub fn irreducible_of(n: usize, b: usize) -> Result<Graph> {
    if b == 0 || b >= n {
        return Err(Error::InvalidParameter(format!("need 1 <= b < n, got n={n}, b={b}")));
    }
    if b == 1 {
        return path(n);
    }
    if b < 63 && n as u128 > (1u128 << b) + b as u128 {
        return s_graph_bs(b, n - (1usize << b) - b);
    }
    if n > 2 * b {
        let k = (0..b)
            .find(|&k| {
                let (m, d) = ((n - 2 * k) as u128, (b - k) as u128);
                (1u128 << (d - 1)) + d <= m && m <= (1u128 << d) + d
            })
            .ok_or_else(|| Error::InvalidParameter(format!("no valid k for n={n}, b={b}")))?;
        return Ok(with_k2bar_pairs(s_graph(n - 2 * k)?, k));
    }
    let k = n - 1 - b;
    Ok(with_k2bar_pairs(complete(n - 2 * k)?, k))
}

fn with_k2bar_pairs(mut g: Graph, k: usize) -> Graph {
    for _ in 0..k {
        g = join_k2bar(&g);
    }
    g
}

/// An irreducible graph `H` containing `g` as an induced subgraph, with the
/// embedding (`g`'s vertex `i` is `H`'s vertex `map[i]`).
///
/// `G' = g ∨ K_p` with `|g| + p = 2^k` on ids `0..2^k`, then `K_k` on the
/// next `k` ids as `W`; shortlex assignment over `P = V(G')` in id order, so
/// the last `K_p` vertex takes all of `W` and becomes universal.
pub fn embed_in_irreducible(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    let k = (1..usize::BITS as usize).find(|&k| 1usize << k > n).expect("order fits");
    let q = 1usize << k;
    let host = g.join(&complete(q - n)?).disjoint_union(&complete(k)?);
    let prob = AssignmentProblem::new(&host, (q..q + k).collect(), (0..q).collect())?;
    Ok((host.add_edges(&shortlex_assign(&prob))?, (0..n).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Irreducible { certificate: Certificate },
    Reducible { witness: UpperWitness },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibilityVerdict {
    pub status: Status,
    pub beta: BetaResult,
    pub tau_bounds: TauBounds,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self.status, Status::Irreducible { .. })
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self.status, Status::Reducible { .. })
    }
}

/// Decides `τ(g) = β(g)` when it can, trying in order: diameter 2, 2-basis
/// exclusion, min degree, clique, small dimension (`β ∈ {1, 2, n-1}` on a
/// connected graph), then the full bound computation (constructions and the
/// diameter-2 search), then exhaustive enumeration when within caps.
pub fn is_irreducible(g: &Graph, limits: &Limits) -> Result<IrreducibilityVerdict> {
    let beta = metric_dimension_with(g, limits)?;
    let n = g.order();
    let basis_witness =
        || UpperWitness { source: UpperSource::MetricBasis, edges: EdgeSet::new(), basis: beta.basis.clone() };
    let irreducible = |certificate: Certificate| {
        let tau_bounds = TauBounds::new(Certificate { value: beta.beta, ..certificate.clone() }, basis_witness());
        IrreducibilityVerdict { status: Status::Irreducible { certificate }, beta: beta.clone(), tau_bounds }
    };

    let b = beta.beta;
    let cheap = [
        diam2_lower_bound(g),
        no_two_basis_supergraph(g),
        Some(min_degree_certificate(g)),
        Some(clique_certificate(g, limits)),
    ];
    if let Some(c) = cheap.into_iter().flatten().find(|c| c.value >= b) {
        return Ok(irreducible(c));
    }
    if g.is_connected() && (b == 1 || b == 2 || b + 1 == n) {
        return Ok(irreducible(Certificate {
            kind: CertificateKind::SmallDimension,
            value: b,
            witness: Witness::SmallDimension { beta: b, basis: beta.basis.clone() },
        }));
    }

    let decide = |bounds: TauBounds| {
        if bounds.upper < b && bounds.witness.verify(g) {
            Some(IrreducibilityVerdict {
                status: Status::Reducible { witness: bounds.witness.clone() },
                beta: beta.clone(),
                tau_bounds: bounds,
            })
        } else if bounds.lower >= b {
            Some(IrreducibilityVerdict {
                status: Status::Irreducible { certificate: bounds.certificate.clone() },
                beta: beta.clone(),
                tau_bounds: bounds,
            })
        } else {
            None
        }
    };
    let bounds = tau_bounds(g, limits);
    if let Some(v) = decide(bounds.clone()) {
        return Ok(v);
    }
    if let Ok(exact) = tau_exact(g, limits) {
        if let Some(v) = decide(exact) {
            return Ok(v);
        }
    }
    Ok(IrreducibilityVerdict { status: Status::Unknown, beta, tau_bounds: bounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Diameter;
    use crate::families::*;
    use crate::induced::is_induced_subgraph;
    use crate::resolve::{metric_dimension, resolves};

    #[test]
    fn s_graphs() {
        assert_eq!(s_graph(2).unwrap(), complete(2).unwrap());
        let s8 = s_graph(8).unwrap();
        assert_eq!(s8.edge_count(), 23);
        assert_eq!(metric_dimension(&s8).unwrap().beta, 3);
        assert!(resolves(&s8, &[0, 1, 2]));
        for n in 2..=12 {
            let s = s_graph(n).unwrap();
            assert_eq!(s.order(), n);
            assert!(distances(&s).diameter().at_most(2));
            assert_eq!(metric_dimension(&s).unwrap().beta, g_of(n), "S_{n}");
        }
        assert!(s_graph(1).is_err());
    }

    #[test]
    fn s_graphs_bs() {
        let s = s_graph_bs(2, 3).unwrap();
        assert_eq!((s.order(), s.edge_count()), (9, 13));
        assert!(resolves(&s, &[4, 5]));
        assert_eq!(metric_dimension(&s).unwrap().beta, 2);
        let s = s_graph_bs(2, 1).unwrap();
        assert_eq!(s.order(), 7);
        assert_eq!(metric_dimension(&s).unwrap().beta, 2);
        let s = s_graph_bs(3, 1).unwrap();
        assert_eq!(s.order(), 12);
        assert_eq!(metric_dimension(&s).unwrap().beta, 3);
        assert_eq!(clique_certificate(&s, &Limits::default()).value, 3);
        assert!(s_graph_bs(1, 1).is_err());
        assert!(s_graph_bs(2, 0).is_err());
    }

    #[test]
    fn joins() {
        let c4 = cycle(4).unwrap();
        assert_eq!(metric_dimension(&join_k2bar(&c4)).unwrap().beta, 3);
        assert_eq!(predicted_join_k2bar_beta(&c4, 2), Some(3));
        let t = subdivided_star(2);
        assert_eq!(metric_dimension(&join_k2bar(&t)).unwrap().beta, 5);
        assert_eq!(predicted_join_k2bar_beta(&t, 2), None);
        assert_eq!(join_k2bar(&complete(1).unwrap()), path(3).unwrap().induced(&[1, 0, 2]));
        assert_eq!(metric_dimension(&join_k2(&c4)).unwrap().beta, 3);
        for n in 1..6 {
            assert_eq!(metric_dimension(&join_k2(&complete(n).unwrap())).unwrap().beta, n + 1);
        }
    }

    #[test]
    fn theorem_cases() {
        let g = irreducible_of(6, 4).unwrap();
        assert_eq!(g.edge_count(), 14);
        assert_eq!(metric_dimension(&g).unwrap().beta, 4);
        let g = irreducible_of(10, 4).unwrap();
        assert_eq!(g, join_k2bar(&s_graph(8).unwrap()));
        assert_eq!(metric_dimension(&g).unwrap().beta, 4);
        assert_eq!(irreducible_of(8, 2).unwrap(), s_graph_bs(2, 2).unwrap());
        assert!(irreducible_of(5, 5).is_err());
        assert!(irreducible_of(5, 0).is_err());
    }

    #[test]
    fn embeddings() {
        for (g, k) in [(path(3).unwrap(), 2), (complete(1).unwrap(), 1), (cycle(5).unwrap(), 3)] {
            let (h, map) = embed_in_irreducible(&g).unwrap();
            assert_eq!(h.order(), (1 << k) + k);
            assert_eq!(distances(&h).diameter(), Diameter::Finite(2));
            assert_eq!(metric_dimension(&h).unwrap().beta, k);
            assert_eq!(g_of(h.order()), k);
            assert_eq!(h.induced(&map), g);
            assert!(is_induced_subgraph(&g, &h, 12).unwrap().is_some());
        }
    }

    #[test]
    fn verdicts() {
        let l = Limits::default();
        let v = is_irreducible(&generalized_petersen(5, 2).unwrap(), &l).unwrap();
        assert!(v.is_irreducible());
        assert_eq!(v.beta.beta, 3);
        let t = join_k2bar(&subdivided_star(2));
        let v = is_irreducible(&t, &l).unwrap();
        assert!(v.is_reducible());
        assert_eq!(v.tau_bounds.upper, 4);
        for n in 4..=12 {
            let v = is_irreducible(&s_graph(n).unwrap(), &l).unwrap();
            assert!(
                matches!(&v.status, Status::Irreducible { certificate } if certificate.kind == CertificateKind::Diam2),
                "S_{n}"
            );
        }
        // β = 2 with only the small-dimension rule left: a spider with legs of length 2
        let v = is_irreducible(&subdivided_star(1), &l).unwrap();
        assert!(
            matches!(&v.status, Status::Irreducible { certificate } if certificate.kind == CertificateKind::SmallDimension)
        );
        let v = is_irreducible(&generalized_petersen(7, 2).unwrap(), &l).unwrap();
        assert!(
            matches!(&v.status, Status::Irreducible { certificate } if matches!(certificate.kind, CertificateKind::BallCount | CertificateKind::PairExclusion))
        );
        let v = is_irreducible(&complete_multipartite(&[3, 3]).unwrap(), &l).unwrap();
        assert!(v.is_reducible());
        assert_eq!(v.tau_bounds.exact, Some(3));
    }
}
