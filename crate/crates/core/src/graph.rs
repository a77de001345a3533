//! Simple undirected graphs stored as bit rows, plus the edge-level
//! operations (edge addition, join, power, complement).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::distance::{distances, UNREACHABLE};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..order`.
///
/// Row `v` holds the neighbourhood `N(v)` as a bitset; rows are symmetric
/// and have a zero diagonal. Graphs are never mutated once handed out.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        let words = bitset::words_for(order);
        Graph { order, words, rows: vec![0; order * words] }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        let w = self.words;
        bitset::set(&mut self.rows[u * w..(u + 1) * w], v);
        bitset::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// The neighbourhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::test(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges().collect())
    }

    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        bitset::set(&mut seen, 0);
        bitset::set(&mut frontier, 0);
        while !bitset::is_zero(&frontier) {
            let mut next = vec![0u64; self.words];
            for v in bitset::ones(&frontier) {
                for (n, r) in next.iter_mut().zip(self.row(v)) {
                    *n |= r;
                }
            }
            for (n, s) in next.iter_mut().zip(seen.iter_mut()) {
                *n &= !*s;
                *s |= *n;
            }
            frontier = next;
        }
        bitset::count(&seen) == self.order
    }

    /// `true` when every vertex has degree at most 2 and there is no cycle,
    /// i.e. the graph is a spanning subgraph of a path.
    pub fn is_linear_forest(&self) -> bool {
        self.max_degree() <= 2 && self.edge_count() + self.component_count() == self.order
    }

    pub fn component_count(&self) -> usize {
        let mut comp = vec![usize::MAX; self.order];
        let mut count = 0;
        for s in 0..self.order {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.insert_edge(i, j);
                }
            }
        }
        h
    }

    /// `G + S`: the graph with the edges of `extra` added.
    ///
    /// Every added edge must be a non-edge of `self`.
    pub fn add_edges(&self, extra: &EdgeSet) -> Result<Graph> {
        let mut h = self.clone();
        for &(u, v) in extra.iter() {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if h.has_edge(u, v) {
                return Err(Error::EdgePresent(u, v));
            }
            h.insert_edge(u, v);
        }
        Ok(h)
    }

    /// `G ∨ H`. Vertices of `self` keep their ids, those of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut j = self.disjoint_union(other);
        let n = self.order;
        for u in 0..n {
            for v in 0..other.order {
                j.insert_edge(u, n + v);
            }
        }
        j
    }

    /// `G ∪ H` with the same id layout as [`Graph::join`].
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order;
        let mut j = Graph::new(n + other.order);
        for (u, v) in self.edges() {
            j.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            j.insert_edge(n + u, n + v);
        }
        j
    }

    /// `G^k`: `uv` is an edge iff `0 < d(u, v) <= k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidParameter("graph power must be at least 1".into()));
        }
        let d = distances(self);
        let mut h = Graph::new(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                let duv = d.get(u, v);
                if duv != UNREACHABLE && duv as usize <= k {
                    h.insert_edge(u, v);
                }
            }
        }
        Ok(h)
    }

    pub fn complement(&self) -> Graph {
        let mut h = Graph::new(self.order);
        for (u, v) in self.complement_edges().iter() {
            h.insert_edge(*u, *v);
        }
        h
    }

    /// The non-edges of the graph, i.e. the edges that may be added to it.
    pub fn complement_edges(&self) -> EdgeSet {
        let mut set = BTreeSet::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    set.insert((u, v));
                }
            }
        }
        EdgeSet(set)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A set of unordered vertex pairs, each stored as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet(BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    /// Builds a set from pairs in any orientation, rejecting loops and repeats.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = EdgeSet::new();
        for (u, v) in pairs {
            if !set.insert(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(set)
    }

    /// Returns `Ok(false)` if the edge was already in the set.
    pub fn insert(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.0.insert((u.min(v), u.max(v))))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }

    pub fn extend(&mut self, other: &EdgeSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn to_vec(&self) -> Vec<(usize, usize)> {
        self.0.iter().copied().collect()
    }

    /// Edges of `self` that are not in `other`.
    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    /// Collects pairs, normalising orientation.
    ///
    /// # Panics
    /// Panics on a self-loop.
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        let mut set = EdgeSet::new();
        for (u, v) in iter {
            set.insert(u, v).expect("self-loop in edge set");
        }
        set
    }
}
