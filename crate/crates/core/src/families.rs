//! Constructors for the named graph families.
//!
//! Each constructor fixes its vertex numbering so that outputs are
//! reproducible edge for edge; the layout is given in the item docs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part sizes `x_1, …, x_k` of a complete multipartite graph (all positive, `k >= 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionSizes(Vec<usize>);

impl PartitionSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParameter("a partition needs at least one part".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        Ok(PartitionSizes(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn parts(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// First vertex id of part `i` in [`complete_multipartite`]'s layout.
    pub fn offset(&self, i: usize) -> usize {
        self.0[..i].iter().sum()
    }
}

/// `P_n` on `0 - 1 - … - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` on `0 - 1 - … - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs at least one vertex".into()));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

/// `K̄_n`, the edgeless graph.
pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

/// `K_{1,n}` with centre 0.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i))).expect("valid star")
}

/// `K_{x_1,…,x_k}`; part `i` occupies the consecutive ids starting at
/// [`PartitionSizes::offset`].
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let parts = PartitionSizes::new(sizes.to_vec())?;
    let n = parts.total();
    let mut part_of = Vec::with_capacity(n);
    for (i, &x) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, x));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `P(n, k)`: outer ring `v_i = i`, inner ring `u_i = n + i`, with edges
/// `v_i v_{i+1}`, `u_i v_i` and `u_i u_{i+k}` (indices mod `n`).
///
/// `k = n/2` is refused because the inner ring would collapse to a matching.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || k >= n || 2 * k == n {
        return Err(Error::InvalidParameter(format!(
            "generalized Petersen graph needs n >= 3, 1 <= k < n, 2k != n; got n={n}, k={k}"
        )));
    }
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.insert_edge(i, (i + 1) % n);
        g.insert_edge(i, n + i);
        g.insert_edge(n + i, n + (i + k) % n);
    }
    Ok(g)
}

/// `C_n²`, the square of the cycle.
pub fn cycle_square(n: usize) -> Result<Graph> {
    cycle(n)?.power(2)
}

/// `K_{1,3}` with every edge subdivided `t` times.
///
/// Centre 0; arm `a ∈ {0,1,2}` is `1 + a(t+1), …, (a+1)(t+1)` walking outwards.
pub fn subdivided_star(t: usize) -> Graph {
    let arm = t + 1;
    let mut g = Graph::new(1 + 3 * arm);
    for a in 0..3 {
        let base = 1 + a * arm;
        g.insert_edge(0, base);
        for j in 1..arm {
            g.insert_edge(base + j - 1, base + j);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{diameter, Diameter};

    #[test]
    fn petersen_is_cubic_with_girth_five() {
        let g = generalized_petersen(5, 2).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        // girth 5: no triangles and no 4-cycles means no two vertices share two neighbours
        for u in 0..10 {
            for v in u + 1..10 {
                let common = g.neighbors(u).filter(|&w| g.has_edge(v, w)).count();
                assert!(common <= usize::from(!g.has_edge(u, v)));
            }
        }
    }

    #[test]
    fn petersen_counts() {
        for n in 3..20 {
            for k in 1..n {
                if 2 * k == n {
                    assert!(generalized_petersen(n, k).is_err());
                    continue;
                }
                let g = generalized_petersen(n, k).unwrap();
                assert_eq!(g.order(), 2 * n);
                assert_eq!(g.edge_count(), 3 * n, "P({n},{k})");
                assert!((0..2 * n).all(|v| g.degree(v) == 3));
            }
        }
        assert!(generalized_petersen(2, 1).is_err());
        assert!(generalized_petersen(5, 0).is_err());
        assert!(generalized_petersen(5, 5).is_err());
    }

    #[test]
    fn octahedron() {
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 12);
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!(complete_multipartite(&[]).is_err());
    }

    #[test]
    fn subdivided_star_two() {
        let t = subdivided_star(2);
        assert_eq!(t.order(), 10);
        assert_eq!(t.edge_count(), 9);
        assert_eq!(diameter(&t), Diameter::Finite(6));
        assert_eq!(subdivided_star(0), star(3));
    }

    #[test]
    fn small_family_sizes() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert_eq!(complete(6).unwrap().edge_count(), 15);
        assert_eq!(cycle_square(10).unwrap().edge_count(), 20);
    }
}
