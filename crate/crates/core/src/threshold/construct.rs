//! Upper bounds from landmark sets whose outsiders see few landmarks.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::distance::distances;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::resolve::resolves;

/// Adds edges from every vertex outside `w` to `w` so that the outsiders get
/// pairwise distinct `W`-neighbourhoods, each a superset of the original one.
///
/// Needs `ℓ < |W|`, `2^(|W|-ℓ) >= n - |W|` and `|N_W(x)| <= ℓ` for every
/// outsider `x`. Outsiders are handled in id order; each takes the first
/// unused superset of its neighbourhood in shortlex order.
pub fn diammeth_construct(g: &Graph, w: &[usize], ell: usize) -> Result<EdgeSet> {
    let n = g.order();
    let mut in_w = vec![false; n];
    for &x in w {
        g.check_vertex(x)?;
        if std::mem::replace(&mut in_w[x], true) {
            return Err(Error::Precondition(format!("vertex {x} listed twice in W")));
        }
    }
    if ell >= w.len() {
        return Err(Error::Precondition(format!("ℓ = {ell} must be below |W| = {}", w.len())));
    }
    let outsiders: Vec<usize> = (0..n).filter(|&v| !in_w[v]).collect();
    let room = w.len() - ell;
    if room < 128 && (1u128 << room) < outsiders.len() as u128 {
        return Err(Error::Precondition(format!("2^(|W|-ℓ) = 2^{room} is smaller than n - |W| = {}", outsiders.len())));
    }
    let nbhd = |v: usize| -> Vec<usize> { w.iter().positions(|&x| g.has_edge(v, x)).collect() };
    if let Some(&x) = outsiders.iter().find(|&&x| nbhd(x).len() > ell) {
        return Err(Error::Precondition(format!("vertex {x} has {} > ℓ = {ell} neighbours in W", nbhd(x).len())));
    }
    let mut used: HashSet<Vec<usize>> = HashSet::new();
    let mut edges = EdgeSet::new();
    for &v in &outsiders {
        let base = nbhd(v);
        let free: Vec<usize> = (0..w.len()).filter(|i| !base.contains(i)).collect();
        // adding a fixed set to each candidate keeps shortlex order
        let chosen = (0..=free.len())
            .flat_map(|s| free.iter().copied().combinations(s))
            .map(|extra| {
                let mut s: Vec<usize> = base.iter().chain(&extra).copied().collect();
                s.sort_unstable();
                s
            })
            .find(|s| !used.contains(s))
            .expect("the counting condition leaves a free superset");
        for &i in &chosen {
            if !base.contains(&i) {
                edges.insert(v, w[i])?;
            }
        }
        used.insert(chosen);
    }
    let h = g.add_edges(&edges)?;
    if !resolves(&h, w) {
        return Err(Error::Precondition("constructed landmark set does not resolve".into()));
    }
    Ok(edges)
}

/// The diameter bound: landmarks on a diametral path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametralBound {
    pub diameter: usize,
    pub edges: EdgeSet,
    /// The diametral path minus its far endpoint.
    pub landmarks: Vec<usize>,
}

/// `τ <= d` when `2^(d-3) >= n - d`, for connected graphs of diameter `d >= 3`.
///
/// The path runs between the lexicographically smallest pair at distance
/// `d`, following the smallest-id neighbour one step closer at each vertex.
pub fn diametral_bound(g: &Graph) -> Option<DiametralBound> {
    let n = g.order();
    let dm = distances(g);
    let d = dm.diameter().finite()?;
    if d < 3 || (d - 3 < 64 && (1u64 << (d - 3)) < (n - d as usize) as u64) {
        return None;
    }
    let (a, b) = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| dm.get(u, v) == d)?;
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        cur = g.neighbors(cur).find(|&x| dm.get(x, b) + 1 == dm.get(cur, b)).expect("a geodesic step exists");
        path.push(cur);
    }
    path.pop();
    let mut landmarks = path;
    landmarks.sort_unstable();
    let ell = 3.min(landmarks.len() - 1);
    let edges = diammeth_construct(g, &landmarks, ell).ok()?;
    Some(DiametralBound { diameter: d as usize, edges, landmarks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};

    /// P_6 spine 0..5 with three leaves 6, 7, 8 hanging off vertex 2.
    fn caterpillar() -> Graph {
        Graph::from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (2, 7), (2, 8)]).unwrap()
    }

    #[test]
    fn caterpillar_spine() {
        let g = caterpillar();
        let w = [0, 1, 2, 3, 4];
        let e = diammeth_construct(&g, &w, 3).unwrap();
        assert!(resolves(&g.add_edges(&e).unwrap(), &w));
        let b = diametral_bound(&g).unwrap();
        assert_eq!(b.diameter, 5);
        assert_eq!(b.landmarks, vec![0, 1, 2, 3, 4]);
        assert!(resolves(&g.add_edges(&b.edges).unwrap(), &b.landmarks));
    }

    #[test]
    fn nothing_to_add_when_already_resolving() {
        let g = path(4).unwrap();
        assert!(diammeth_construct(&g, &[0, 1, 2], 1).unwrap().is_empty());
    }

    #[test]
    fn all_but_one_vertex() {
        // the leftover vertex must not see all of W
        let g = complete(5).unwrap();
        assert!(matches!(diammeth_construct(&g, &[0, 1, 2, 3], 3), Err(Error::Precondition(_))));
        let g = crate::families::cycle(7).unwrap();
        let e = diammeth_construct(&g, &[0, 1, 2, 3, 4, 5], 5).unwrap();
        assert!(resolves(&g.add_edges(&e).unwrap(), &[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn preconditions_are_named() {
        let g = caterpillar();
        assert!(matches!(diammeth_construct(&g, &[0, 1], 2), Err(Error::Precondition(_))));
        assert!(matches!(diammeth_construct(&g, &[0, 1, 2], 0), Err(Error::Precondition(_))));
        assert!(matches!(diammeth_construct(&g, &[1, 3, 5, 0], 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn diametral_examples() {
        let b = diametral_bound(&path(9).unwrap()).unwrap();
        assert_eq!(b.diameter, 8);
        assert_eq!(b.landmarks.len(), 8);
        assert!(diametral_bound(&complete(4).unwrap()).is_none());
        assert!(diametral_bound(&crate::families::edgeless(3)).is_none());
    }
}
