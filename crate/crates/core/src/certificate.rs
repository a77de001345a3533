//! Lower-bound certificates for `β` and `τ`, each re-checkable from the graph alone.

use serde::{Deserialize, Serialize};

use crate::distance::distances;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::resolve::{ceil_log2, metric_dimension_with};
use crate::threshold::{diameter_two_tau, g_of, min_degree_value, tau_exact, vertex_exclusion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    Clique,
    Diam2,
    MinDegree,
    BallCount,
    PairExclusion,
    Exhaustive,
    SmallDimension,
}

/// A claim `bound >= value` together with the evidence for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub value: usize,
    pub witness: Witness,
}

/// Why a vertex cannot lie in a 2-element resolving set of any supergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexExclusion {
    pub vertex: usize,
    /// `|N_1(v)|`.
    pub degree: usize,
    /// `|N_1(v) ∪ N_2(v)|`.
    pub within_two: usize,
}

/// Two vertices that no supergraph can tell apart from the pair `{x, y}`:
/// `x` and `y` are saturated (degree 3), and `a`, `b` sit at the same
/// distances (at most 2) from both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExhaustiveMethod {
    /// Every set of added edges was examined.
    SupergraphEnumeration,
    /// Diameter at most 2: every landmark set was tested for a system of
    /// distinct neighbourhood supersets.
    DiameterTwoAssignment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Clique { vertices: Vec<usize> },
    Diam2 { order: usize, diameter: u32 },
    MinDegree { vertex: usize, degree: usize },
    BallCount { exclusions: Vec<VertexExclusion> },
    PairExclusion { exclusions: Vec<VertexExclusion>, pairs: Vec<PairWitness> },
    Exhaustive { method: ExhaustiveMethod, candidates: u64 },
    SmallDimension { beta: usize, basis: Vec<usize> },
}

impl Certificate {
    /// Re-derives the bound from `g` and the witness.
    ///
    /// `Exhaustive` certificates are re-checked by running the search again,
    /// so they obey `limits`.
    pub fn verify(&self, g: &Graph, limits: &Limits) -> bool {
        let n = g.order();
        match (&self.kind, &self.witness) {
            (CertificateKind::Clique, Witness::Clique { vertices }) => {
                vertices.iter().all(|&v| v < n)
                    && vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
                    && self.value == ceil_log2(vertices.len())
            }
            (CertificateKind::Diam2, Witness::Diam2 { order, diameter }) => {
                *order == n
                    && distances(g).diameter().finite() == Some(*diameter)
                    && *diameter <= 2
                    && self.value == g_of(n)
            }
            (CertificateKind::MinDegree, Witness::MinDegree { vertex, degree }) => {
                *vertex < n
                    && g.degree(*vertex) == *degree
                    && g.min_degree() == *degree
                    && self.value == min_degree_value(n, *degree)
            }
            (CertificateKind::BallCount, Witness::BallCount { exclusions }) => {
                self.value == 3 && two_basis_premises(g) && exclusions_hold(g, exclusions) && exclusions.len() == n
            }
            (CertificateKind::PairExclusion, Witness::PairExclusion { exclusions, pairs }) => {
                if self.value != 3 || !two_basis_premises(g) || !exclusions_hold(g, exclusions) {
                    return false;
                }
                let mut excluded = vec![false; n];
                for e in exclusions {
                    excluded[e.vertex] = true;
                }
                let survivors: Vec<usize> = (0..n).filter(|&v| !excluded[v]).collect();
                let dm = distances(g);
                survivors.iter().enumerate().all(|(i, &x)| {
                    survivors[i + 1..]
                        .iter()
                        .all(|&y| pairs.iter().any(|p| (p.x, p.y) == (x, y) && pair_witness_holds(g, &dm, p)))
                })
            }
            (CertificateKind::Exhaustive, Witness::Exhaustive { method, .. }) => match method {
                ExhaustiveMethod::SupergraphEnumeration => {
                    tau_exact(g, limits).ok().and_then(|t| t.exact) == Some(self.value)
                }
                ExhaustiveMethod::DiameterTwoAssignment => {
                    diameter_two_tau(g, 0, usize::MAX).map(|t| t.tau) == Some(self.value)
                }
            },
            (CertificateKind::SmallDimension, Witness::SmallDimension { beta, .. }) => {
                g.is_connected()
                    && (*beta == 1 || *beta == 2 || *beta + 1 == n)
                    && metric_dimension_with(g, limits).is_ok_and(|b| b.beta == *beta)
                    && self.value == *beta
            }
            _ => false,
        }
    }
}

/// Connected and not a linear forest, so `τ >= 2` and the ball counts apply.
fn two_basis_premises(g: &Graph) -> bool {
    g.order() >= 2 && g.is_connected() && !g.is_linear_forest()
}

fn pair_witness_holds(g: &Graph, dm: &crate::distance::DistanceMatrix, p: &PairWitness) -> bool {
    let n = g.order();
    let outside = |v: usize| v < n && v != p.x && v != p.y;
    let sig = |v: usize| (dm.get(p.x, v), dm.get(p.y, v));
    p.x < n
        && p.y < n
        && p.x != p.y
        && g.degree(p.x) == 3
        && g.degree(p.y) == 3
        && outside(p.a)
        && outside(p.b)
        && p.a != p.b
        && sig(p.a) == sig(p.b)
        && sig(p.a).0 <= 2
        && sig(p.a).1 <= 2
}

fn exclusions_hold(g: &Graph, exclusions: &[VertexExclusion]) -> bool {
    let dm = distances(g);
    let mut seen = vec![false; g.order()];
    exclusions.iter().all(|e| {
        e.vertex < g.order()
            && !std::mem::replace(&mut seen[e.vertex], true)
            && vertex_exclusion(&dm, e.vertex).as_ref() == Some(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::resolve::{clique_certificate, diam2_lower_bound};
    use crate::threshold::{min_degree_certificate, no_two_basis_supergraph};

    #[test]
    fn honest_certificates_verify() {
        let l = Limits::default();
        let g = cycle_square(9).unwrap();
        assert!(min_degree_certificate(&g).verify(&g, &l));
        assert!(clique_certificate(&g, &l).verify(&g, &l));
        let s = complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(diam2_lower_bound(&s).unwrap().verify(&s, &l));
        for n in [5, 6, 8, 11] {
            let p = generalized_petersen(n, 2).unwrap();
            let c = no_two_basis_supergraph(&p).unwrap();
            assert!(c.verify(&p, &l), "P({n},2)");
        }
    }

    #[test]
    fn tampered_certificates_fail() {
        let l = Limits::default();
        let g = cycle(6).unwrap();
        let fake = Certificate {
            kind: CertificateKind::Clique,
            value: 2,
            witness: Witness::Clique { vertices: vec![0, 1, 2] },
        };
        assert!(!fake.verify(&g, &l));
        let fake =
            Certificate { kind: CertificateKind::Diam2, value: 2, witness: Witness::Diam2 { order: 6, diameter: 2 } };
        assert!(!fake.verify(&g, &l));
        let fake = Certificate {
            kind: CertificateKind::BallCount,
            value: 3,
            witness: Witness::BallCount { exclusions: vec![] },
        };
        assert!(!fake.verify(&g, &l));
        let mismatched = Certificate {
            kind: CertificateKind::MinDegree,
            value: 2,
            witness: Witness::Clique { vertices: vec![0, 1] },
        };
        assert!(!mismatched.verify(&g, &l));
    }
}
