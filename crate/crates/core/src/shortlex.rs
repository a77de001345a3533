//! Shortlex assignment: give the vertices of `P` pairwise distinct
//! `W`-neighbourhoods by adding edges between `P` and `W`.
//!
//! Vertices of `P` that already see part of `W` keep their neighbourhood.
//! The remaining ones (`v_1, …, v_s`, in the caller's order) receive the
//! first `s` unused subsets of `W`, where "first" is either shortlex order
//! (by size, then lexicographically in the caller's order of `W`) or
//! reverse shortlex order (largest subsets first, still lexicographic
//! within one size).

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{AssignmentViolation, Error, Result};
use crate::graph::{EdgeSet, Graph};

/// Ordering of the candidate subsets of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetOrder {
    Shortlex,
    ReverseShortlex,
}

/// A validated input: `W ∩ P = ∅`, `|P| <= 2^|W|`, and no two vertices of
/// `P` share a nonempty `W`-neighbourhood.
#[derive(Debug, Clone)]
pub struct AssignmentProblem<'a> {
    g: &'a Graph,
    w: Vec<usize>,
    p: Vec<usize>,
}

impl<'a> AssignmentProblem<'a> {
    pub fn new(g: &'a Graph, w: Vec<usize>, p: Vec<usize>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &v in w.iter().chain(&p) {
            g.check_vertex(v)?;
        }
        for &v in &w {
            if !seen.insert(v) {
                return Err(Error::Assignment(AssignmentViolation::Repeated(v)));
            }
        }
        let mut seen_p = HashSet::new();
        for &v in &p {
            if seen.contains(&v) {
                return Err(Error::Assignment(AssignmentViolation::Overlap(v)));
            }
            if !seen_p.insert(v) {
                return Err(Error::Assignment(AssignmentViolation::Repeated(v)));
            }
        }
        let capacity = capacity(w.len());
        if p.len() as u128 > capacity {
            return Err(Error::Assignment(AssignmentViolation::TooManyTargets { targets: p.len(), capacity }));
        }
        let prob = AssignmentProblem { g, w, p };
        let mut owner = std::collections::HashMap::new();
        for &v in &prob.p {
            let nb = prob.w_neighbourhood(v);
            if nb.is_empty() {
                continue;
            }
            if let Some(&u) = owner.get(&nb) {
                return Err(Error::Assignment(AssignmentViolation::SharedNeighbourhood(u, v)));
            }
            owner.insert(nb, v);
        }
        Ok(prob)
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn w(&self) -> &[usize] {
        &self.w
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    /// `N_W(v)` as positions into `W`, ascending.
    fn w_neighbourhood(&self, v: usize) -> Vec<usize> {
        self.w.iter().positions(|&x| self.g.has_edge(v, x)).collect()
    }
}

/// `2^k`, saturating.
fn capacity(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        1u128 << k
    }
}

/// Subsets of `{0, …, k-1}` (positions into `W`) in the requested order, lazily.
pub fn subsets_in_order(k: usize, order: SubsetOrder) -> impl Iterator<Item = Vec<usize>> {
    let sizes: Box<dyn Iterator<Item = usize>> = match order {
        SubsetOrder::Shortlex => Box::new(0..=k),
        SubsetOrder::ReverseShortlex => Box::new((0..=k).rev()),
    };
    sizes.flat_map(move |s| (0..k).combinations(s))
}

/// All `2^k` subsets in shortlex order.
pub fn shortlex_order(k: usize) -> Vec<Vec<usize>> {
    assert!(k <= 20, "shortlex_order materialises 2^k subsets; k = {k} is too large");
    subsets_in_order(k, SubsetOrder::Shortlex).collect()
}

/// All `2^k` subsets by decreasing size, lexicographic within a size.
pub fn reverse_shortlex_order(k: usize) -> Vec<Vec<usize>> {
    assert!(k <= 20, "reverse_shortlex_order materialises 2^k subsets; k = {k} is too large");
    subsets_in_order(k, SubsetOrder::ReverseShortlex).collect()
}

/// Result of an assignment run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub edges: EdgeSet,
    /// `(v_j, S_j)` for each vertex that started with an empty `W`-neighbourhood,
    /// with `S_j` given as vertex ids.
    pub assigned: Vec<(usize, Vec<usize>)>,
}

pub fn assign(prob: &AssignmentProblem<'_>, order: SubsetOrder) -> Assignment {
    let taken: HashSet<Vec<usize>> =
        prob.p.iter().map(|&v| prob.w_neighbourhood(v)).filter(|nb| !nb.is_empty()).collect();
    let empties: Vec<usize> = prob.p.iter().copied().filter(|&v| prob.w_neighbourhood(v).is_empty()).collect();
    let mut edges = EdgeSet::new();
    let mut assigned = Vec::with_capacity(empties.len());
    let pool = subsets_in_order(prob.w.len(), order).filter(|s| !taken.contains(s));
    for (&v, subset) in empties.iter().zip(pool) {
        let ids: Vec<usize> = subset.iter().map(|&i| prob.w[i]).collect();
        for &x in &ids {
            edges.insert(v, x).expect("W and P are disjoint");
        }
        assigned.push((v, ids));
    }
    debug_assert_eq!(assigned.len(), empties.len());
    Assignment { edges, assigned }
}

pub fn shortlex_assign(prob: &AssignmentProblem<'_>) -> EdgeSet {
    assign(prob, SubsetOrder::Shortlex).edges
}

pub fn reverse_shortlex_assign(prob: &AssignmentProblem<'_>) -> EdgeSet {
    assign(prob, SubsetOrder::ReverseShortlex).edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, edgeless};

    #[test]
    fn orders() {
        assert_eq!(shortlex_order(1), vec![vec![], vec![0]]);
        assert_eq!(shortlex_order(2), vec![vec![], vec![0], vec![1], vec![0, 1]]);
        assert_eq!(shortlex_order(3)[..5], [vec![], vec![0], vec![1], vec![2], vec![0, 1]]);
        assert_eq!(shortlex_order(4).len(), 16);
        assert_eq!(reverse_shortlex_order(3)[..5], [vec![0, 1, 2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0]]);
    }

    #[test]
    fn edgeless_three_targets() {
        let g = edgeless(5);
        let prob = AssignmentProblem::new(&g, vec![0, 1], vec![2, 3, 4]).unwrap();
        assert_eq!(shortlex_assign(&prob).to_vec(), vec![(0, 3), (1, 4)]);
    }

    #[test]
    fn preassigned_subset_is_skipped() {
        // u = 2 already sees {x1}; the two empty vertices get ∅ and {x2}
        let g = Graph::from_edges(5, [(0, 2)]).unwrap();
        let prob = AssignmentProblem::new(&g, vec![0, 1], vec![2, 3, 4]).unwrap();
        let a = assign(&prob, SubsetOrder::Shortlex);
        assert_eq!(a.assigned, vec![(3, vec![]), (4, vec![1])]);
    }

    #[test]
    fn reverse_small_cases() {
        let g = edgeless(2);
        let prob = AssignmentProblem::new(&g, vec![0], vec![1]).unwrap();
        assert_eq!(reverse_shortlex_assign(&prob).to_vec(), vec![(0, 1)]);
        let prob = AssignmentProblem::new(&g, vec![0], vec![]).unwrap();
        assert!(reverse_shortlex_assign(&prob).is_empty());
    }

    #[test]
    fn s8_reverse_assignment_sets() {
        // W = K_3 on {0,1,2}, P = K_5 on {3..7}
        let g = complete(3).unwrap().disjoint_union(&complete(5).unwrap());
        let prob = AssignmentProblem::new(&g, vec![0, 1, 2], vec![3, 4, 5, 6, 7]).unwrap();
        let a = assign(&prob, SubsetOrder::ReverseShortlex);
        let sets: Vec<Vec<usize>> = a.assigned.into_iter().map(|(_, s)| s).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0]]);
    }

    #[test]
    fn violations_are_named() {
        let g = Graph::from_edges(4, [(0, 2), (0, 3)]).unwrap();
        let err = |w: Vec<usize>, p: Vec<usize>| AssignmentProblem::new(&g, w, p).unwrap_err();
        assert_eq!(err(vec![0], vec![0]), Error::Assignment(AssignmentViolation::Overlap(0)));
        assert!(matches!(
            err(vec![0], vec![1, 2, 3]),
            Error::Assignment(AssignmentViolation::TooManyTargets { targets: 3, capacity: 2 })
        ));
        assert_eq!(err(vec![0, 1], vec![2, 3]), Error::Assignment(AssignmentViolation::SharedNeighbourhood(2, 3)));
        assert_eq!(err(vec![0, 0], vec![2]), Error::Assignment(AssignmentViolation::Repeated(0)));
        assert!(matches!(err(vec![9], vec![1]), Error::VertexOutOfRange { .. }));
    }
}
