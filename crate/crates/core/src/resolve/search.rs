//! Lexicographic depth-first search for resolving sets of a fixed size.
//!
//! State is the set of still-unresolved vertex pairs, kept as one bit row
//! per vertex (`v` in row `u` means `u < v` and the pair is unresolved).
//! Adding landmark `w` intersects row `u` with the class of vertices whose
//! distance to `w` equals `d(u, w)`. A branch dies as soon as some
//! unresolved pair has no resolver left among the remaining candidates.

use rayon::prelude::*;

use crate::bitset;
use crate::distance::DistanceMatrix;

pub(crate) struct LandmarkSearch {
    n: usize,
    words: usize,
    /// `same[(w * n + u) * words..]`: vertices at the same distance from `w` as `u`.
    same: Vec<u64>,
    /// `resolvers[(u * n + v) * words..]`: landmarks that tell `u` and `v` apart.
    resolvers: Vec<u64>,
}

impl LandmarkSearch {
    pub(crate) fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.order();
        let words = bitset::words_for(n);
        let mut same = vec![0u64; n * n * words];
        let mut resolvers = vec![0u64; n * n * words];
        let mut layer: Vec<(u32, usize)> = Vec::with_capacity(n);
        for w in 0..n {
            let row = dm.row(w);
            layer.clear();
            layer.extend(row.iter().copied().zip(0..n));
            layer.sort_unstable();
            let mut start = 0;
            while start < n {
                let mut end = start;
                while end < n && layer[end].0 == layer[start].0 {
                    end += 1;
                }
                let mut bits = vec![0u64; words];
                for &(_, v) in &layer[start..end] {
                    bitset::set(&mut bits, v);
                }
                for &(_, v) in &layer[start..end] {
                    let at = (w * n + v) * words;
                    same[at..at + words].copy_from_slice(&bits);
                }
                start = end;
            }
            for u in 0..n {
                for v in u + 1..n {
                    if row[u] != row[v] {
                        let at = (u * n + v) * words;
                        bitset::set(&mut resolvers[at..at + words], w);
                    }
                }
            }
        }
        LandmarkSearch { n, words, same, resolvers }
    }

    fn initial(&self) -> Vec<u64> {
        let mut unres = vec![0u64; self.n * self.words];
        for u in 0..self.n {
            let row = &mut unres[u * self.words..(u + 1) * self.words];
            for v in u + 1..self.n {
                bitset::set(row, v);
            }
        }
        unres
    }

    fn add_landmark(&self, unres: &[u64], w: usize) -> Vec<u64> {
        let base = w * self.n * self.words;
        unres.iter().zip(&self.same[base..base + self.n * self.words]).map(|(a, b)| a & b).collect()
    }

    fn resolver_row(&self, u: usize, v: usize) -> &[u64] {
        let at = (u * self.n + v) * self.words;
        &self.resolvers[at..at + self.words]
    }

    /// Intersection of `cand` with the resolvers of every unresolved pair;
    /// `None` if some pair has no resolver in `cand` at all.
    fn common_resolvers(&self, unres: &[u64], cand: &[u64], need_common: bool) -> Option<Vec<u64>> {
        let mut common = cand.to_vec();
        for u in 0..self.n {
            let row = &unres[u * self.words..(u + 1) * self.words];
            for v in bitset::ones(row) {
                let r = self.resolver_row(u, v);
                if !bitset::intersects(r, cand) {
                    return None;
                }
                if need_common {
                    for (c, x) in common.iter_mut().zip(r) {
                        *c &= x;
                    }
                }
            }
        }
        Some(common)
    }

    /// Lexicographically smallest resolving set of exactly `size` vertices drawn from `allowed`.
    pub(crate) fn find(&self, size: usize, allowed: &[u64], parallel: bool) -> Option<Vec<usize>> {
        let unres = self.initial();
        if size == 0 {
            return bitset::is_zero(&unres).then(Vec::new);
        }
        if !parallel {
            let mut chosen = Vec::with_capacity(size);
            return self.dfs(allowed.to_vec(), size, &unres, &mut chosen).then_some(chosen);
        }
        let firsts: Vec<usize> = bitset::ones(allowed).collect();
        firsts.par_iter().find_map_first(|&w| {
            let mut cand = allowed.to_vec();
            for x in bitset::ones(allowed).take_while(|&x| x <= w) {
                bitset::clear(&mut cand, x);
            }
            if bitset::count(&cand) + 1 < size {
                return None;
            }
            let next = self.add_landmark(&unres, w);
            let mut chosen = vec![w];
            self.dfs(cand, size - 1, &next, &mut chosen).then_some(chosen)
        })
    }

    fn dfs(&self, mut cand: Vec<u64>, left: usize, unres: &[u64], chosen: &mut Vec<usize>) -> bool {
        if left == 0 {
            return bitset::is_zero(unres);
        }
        if bitset::count(&cand) < left {
            return false;
        }
        let Some(common) = self.common_resolvers(unres, &cand, left == 1) else {
            return false;
        };
        if left == 1 {
            return match bitset::ones(&common).next() {
                Some(w) => {
                    chosen.push(w);
                    true
                }
                None => false,
            };
        }
        while let Some(w) = bitset::first(&cand) {
            bitset::clear(&mut cand, w);
            if bitset::count(&cand) + 1 < left {
                break;
            }
            let next = self.add_landmark(unres, w);
            chosen.push(w);
            if self.dfs(cand.clone(), left - 1, &next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
