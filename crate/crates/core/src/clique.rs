//! Exact maximum clique by branch and bound with a greedy-colouring bound.

use crate::bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum clique of `g`, the lexicographically smallest among those of maximum size.
///
/// Refuses graphs with more than `cap` vertices.
pub fn max_clique(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    if g.order() > cap {
        return Err(Error::CapExceeded { what: "order for max_clique", size: g.order(), cap });
    }
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search { g, best: Vec::new(), current: Vec::new() };
    search.expand(bitset::full(g.order()));
    Ok(search.best)
}

/// Some clique, grown greedily from every start vertex; no optimality claim.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for s in 0..g.order() {
        let mut clique = vec![s];
        let mut cand: Vec<u64> = g.row(s).to_vec();
        while let Some(v) = bitset::ones(&cand).max_by_key(|&v| (bitset::count(&and(&cand, g.row(v))), usize::MAX - v))
        {
            clique.push(v);
            cand = and(&cand, g.row(v));
        }
        clique.sort_unstable();
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    // Candidates are taken in increasing order, so cliques of equal size are
    // met in lexicographic order and only strict improvements are kept.
    fn expand(&mut self, mut cand: Vec<u64>) {
        if bitset::is_zero(&cand) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        while let Some(v) = bitset::first(&cand) {
            if self.current.len() + colour_bound(self.g, &cand) <= self.best.len() {
                return;
            }
            bitset::clear(&mut cand, v);
            self.current.push(v);
            let next = and(&cand, self.g.row(v));
            self.expand(next);
            self.current.pop();
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
    }
}

/// Number of colour classes in a greedy colouring of `cand`, an upper bound
/// on the clique number of the induced subgraph.
fn colour_bound(g: &Graph, cand: &[u64]) -> usize {
    let mut left = cand.to_vec();
    let mut colours = 0;
    while !bitset::is_zero(&left) {
        colours += 1;
        let mut avail = left.clone();
        while let Some(v) = bitset::first(&avail) {
            bitset::clear(&mut left, v);
            bitset::clear(&mut avail, v);
            for (a, r) in avail.iter_mut().zip(g.row(v)) {
                *a &= !r;
            }
        }
    }
    colours
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, edgeless};
    use itertools::Itertools;

    fn brute(g: &Graph) -> Vec<usize> {
        for k in (1..=g.order()).rev() {
            if let Some(c) =
                (0..g.order()).combinations(k).find(|c| c.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)))
            {
                return c;
            }
        }
        Vec::new()
    }

    #[test]
    fn known_sizes() {
        assert_eq!(max_clique(&complete(5).unwrap(), 64).unwrap().len(), 5);
        assert_eq!(max_clique(&cycle(6).unwrap(), 64).unwrap(), vec![0, 1]);
        assert_eq!(max_clique(&edgeless(3), 64).unwrap(), vec![0]);
        assert!(max_clique(&edgeless(65), 64).is_err());
    }

    #[test]
    fn matches_brute_force_on_pseudorandom_graphs() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..300 {
            let n = 1 + (state % 10) as usize;
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < 55 {
                        g.insert_edge(u, v);
                    }
                }
            }
            assert_eq!(max_clique(&g, 64).unwrap(), brute(&g), "{g:?}");
            let gc = greedy_clique(&g);
            assert!(gc.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)));
        }
    }
}
