//! Lower bounds on `τ`: certificates that survive every edge addition.

use crate::certificate::{Certificate, CertificateKind, PairWitness, VertexExclusion, Witness};
use crate::distance::{distances, DistanceMatrix};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::resolve::{clique_certificate, diam2_lower_bound};

/// Smallest `b >= 1` with `3^(b-1) >= δ` (0 for graphs with fewer than two vertices).
///
/// Every landmark of a `b`-element resolving set has at most `3^(b-1)`
/// neighbours, and edge addition only raises degrees.
pub fn min_degree_value(order: usize, min_degree: usize) -> usize {
    if order < 2 {
        return 0;
    }
    let mut b = 1;
    let mut cap = 1usize;
    while cap < min_degree {
        b += 1;
        cap = cap.saturating_mul(3);
    }
    b
}

pub fn min_degree_certificate(g: &Graph) -> Certificate {
    let n = g.order();
    let vertex = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap_or(0);
    let degree = if n == 0 { 0 } else { g.degree(vertex) };
    Certificate {
        kind: CertificateKind::MinDegree,
        value: min_degree_value(n, degree),
        witness: Witness::MinDegree { vertex, degree },
    }
}

/// `Some` when `v` can never be a landmark of a 2-element resolving set of a
/// supergraph: at most 3 vertices may sit at distance 1 and at most 5 at
/// distance 2, and distances only shrink.
pub fn vertex_exclusion(dm: &DistanceMatrix, v: usize) -> Option<VertexExclusion> {
    let degree = dm.sphere_size(v, 1);
    let within_two = degree + dm.sphere_size(v, 2);
    (degree >= 4 || within_two >= 9).then_some(VertexExclusion { vertex: v, degree, within_two })
}

/// For landmarks `x`, `y` of degree exactly 3 no edge at `x` or `y` can be
/// added, so distances up to 2 from them are frozen. Returns the smallest
/// pair of other vertices sharing such a frozen signature.
pub fn pair_collision(g: &Graph, dm: &DistanceMatrix, x: usize, y: usize) -> Option<(usize, usize)> {
    if g.degree(x) != 3 || g.degree(y) != 3 {
        return None;
    }
    let mut first: std::collections::HashMap<(u32, u32), usize> = std::collections::HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.order() {
        if v == x || v == y {
            continue;
        }
        let sig = (dm.get(x, v), dm.get(y, v));
        if sig.0 > 2 || sig.1 > 2 {
            continue;
        }
        match first.get(&sig) {
            Some(&a) if best.is_none_or(|b| (a, v) < b) => best = Some((a, v)),
            Some(_) => {}
            None => {
                first.insert(sig, v);
            }
        }
    }
    best
}

/// `τ >= 3` when no supergraph has a resolving set of size 1 or 2.
///
/// Size 1 is ruled out because `g` is connected and not a path. Size 2 is
/// ruled out vertex by vertex ([`vertex_exclusion`]) and then pair by pair
/// among the survivors ([`pair_collision`]). The result is a `BallCount`
/// certificate when no pair check was needed, `PairExclusion` otherwise.
pub fn no_two_basis_supergraph(g: &Graph) -> Option<Certificate> {
    let n = g.order();
    if n < 2 || !g.is_connected() || g.is_linear_forest() {
        return None;
    }
    let dm = distances(g);
    let mut exclusions = Vec::new();
    let mut survivors = Vec::new();
    for v in 0..n {
        match vertex_exclusion(&dm, v) {
            Some(e) => exclusions.push(e),
            None => survivors.push(v),
        }
    }
    if survivors.is_empty() {
        return Some(Certificate {
            kind: CertificateKind::BallCount,
            value: 3,
            witness: Witness::BallCount { exclusions },
        });
    }
    let mut pairs = Vec::new();
    for (i, &x) in survivors.iter().enumerate() {
        for &y in &survivors[i + 1..] {
            let (a, b) = pair_collision(g, &dm, x, y)?;
            pairs.push(PairWitness { x, y, a, b });
        }
    }
    Some(Certificate {
        kind: CertificateKind::PairExclusion,
        value: 3,
        witness: Witness::PairExclusion { exclusions, pairs },
    })
}

/// The strongest of the min-degree, clique, diameter-2 and 2-basis
/// exclusion certificates (ties keep the earlier one in that order).
pub fn tau_lower_bound(g: &Graph, limits: &Limits) -> Certificate {
    let mut best = min_degree_certificate(g);
    let others = [Some(clique_certificate(g, limits)), diam2_lower_bound(g), no_two_basis_supergraph(g)];
    for c in others.into_iter().flatten() {
        if c.value > best.value {
            best = c;
        }
    }
    best
}
