//! All-pairs hop distances by bit-parallel BFS.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset;
use crate::graph::Graph;

/// Distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Row-major `n × n` hop-count matrix with [`UNREACHABLE`] for disconnected pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }

    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Finite(0);
        }
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        Diameter::Finite(self.d.iter().copied().max().unwrap_or(0))
    }

    /// Largest finite entry (0 for an edgeless graph).
    pub fn max_finite(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }

    /// `|N_k(v)|`: number of vertices at distance exactly `k` from `v`.
    pub fn sphere_size(&self, v: usize, k: u32) -> usize {
        self.row(v).iter().filter(|&&x| x == k).count()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix({})", self.n)?;
        for u in 0..self.n {
            let row: Vec<String> =
                self.row(u).iter().map(|&x| if x == UNREACHABLE { "∞".to_string() } else { x.to_string() }).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A diameter, which is infinite for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    /// `true` for finite diameters of at most `d`.
    pub fn at_most(self, d: u32) -> bool {
        matches!(self, Diameter::Finite(x) if x <= d)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_none(),
        }
    }
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let w = g.words();
    let mut d = vec![UNREACHABLE; n * n];
    let mut seen = vec![0u64; w];
    let mut frontier = vec![0u64; w];
    let mut next = vec![0u64; w];
    for s in 0..n {
        seen.iter_mut().for_each(|x| *x = 0);
        frontier.iter_mut().for_each(|x| *x = 0);
        bitset::set(&mut seen, s);
        bitset::set(&mut frontier, s);
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut level = 0u32;
        loop {
            level += 1;
            next.iter_mut().for_each(|x| *x = 0);
            for v in bitset::ones(&frontier) {
                for (a, b) in next.iter_mut().zip(g.row(v)) {
                    *a |= b;
                }
            }
            let mut any = false;
            for (a, b) in next.iter_mut().zip(seen.iter_mut()) {
                *a &= !*b;
                *b |= *a;
                any |= *a != 0;
            }
            if !any {
                break;
            }
            for v in bitset::ones(&next) {
                row[v] = level;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }
    DistanceMatrix { n, d }
}

pub fn diameter(g: &Graph) -> Diameter {
    distances(g).diameter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_multipartite, cycle, edgeless, generalized_petersen, path};

    #[test]
    fn path_ends() {
        assert_eq!(distances(&path(4).unwrap()).get(0, 3), 3);
    }

    #[test]
    fn complete_graph_is_all_ones() {
        let d = distances(&complete(5).unwrap());
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn disconnected_pair() {
        let d = distances(&edgeless(2));
        assert_eq!(d.get(0, 1), UNREACHABLE);
        assert_eq!(d.diameter(), Diameter::Infinite);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&cycle(6).unwrap()), Diameter::Finite(3));
        assert_eq!(diameter(&complete_multipartite(&[2, 3]).unwrap()), Diameter::Finite(2));
        assert_eq!(diameter(&generalized_petersen(5, 2).unwrap()), Diameter::Finite(2));
        assert_eq!(diameter(&complete(1).unwrap()), Diameter::Finite(0));
        assert!(Diameter::Finite(7) < Diameter::Infinite);
    }

    #[test]
    fn matrix_invariants_on_wide_graph() {
        let g = generalized_petersen(40, 3).unwrap();
        let d = distances(&g);
        for u in 0..80 {
            assert_eq!(d.get(u, u), 0);
            for v in 0..80 {
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..80 {
                    assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }
}
