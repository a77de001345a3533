//! Threshold dimension of complete multipartite graphs and the colouring
//! bound built on it.

use serde::Serialize;

use super::numbers::{at_ell, chromatic_formula, f_int};
use crate::error::{Error, Result};
use crate::families::{complete_multipartite, PartitionSizes};
use crate::graph::{EdgeSet, Graph};
use crate::shortlex::{shortlex_assign, AssignmentProblem};

/// `T_K`: the sum of `f(x_i)`, minus one if some part size is exactly `ℓ_{f(x_i)}`.
///
/// A single part is accepted only when it is `[1]` (`K_1`, value 0); an
/// edgeless graph on two or more vertices is not complete multipartite in
/// the sense of the formula.
pub fn multipartite_tau(x: &PartitionSizes) -> Result<usize> {
    if x.parts() == 1 && x.sizes()[0] != 1 {
        return Err(Error::InvalidParameter(format!(
            "a single part of size {} is an edgeless graph; the formula needs k >= 2",
            x.sizes()[0]
        )));
    }
    let s: usize = x.sizes().iter().map(|&xi| f_int(xi)).sum();
    Ok(if x.sizes().iter().any(|&xi| at_ell(xi)) { s - 1 } else { s })
}

/// The lowest-indexed part sitting at `ℓ_{f(x_i)}`, which gets one landmark fewer.
fn reduced_part(x: &PartitionSizes) -> Option<usize> {
    x.sizes().iter().position(|&xi| at_ell(xi))
}

/// A supergraph `H` of `K_x` (layout of [`complete_multipartite`]) and a
/// resolving set `W` of `H` with `|W| = T_K`.
///
/// Part `i` contributes its first `f(x_i)` vertices to `W` (one fewer for the
/// reduced part); the rest of the part receives `W_i`-neighbourhoods by
/// shortlex assignment.
pub fn multipartite_threshold_graph(x: &PartitionSizes) -> Result<(Graph, Vec<usize>)> {
    multipartite_tau(x)?;
    let k = complete_multipartite(x.sizes())?;
    let reduced = reduced_part(x);
    let mut edges = EdgeSet::new();
    let mut w = Vec::new();
    for (i, &xi) in x.sizes().iter().enumerate() {
        let take = f_int(xi) - usize::from(reduced == Some(i));
        let start = x.offset(i);
        let wi: Vec<usize> = (start..start + take).collect();
        let pi: Vec<usize> = (start + take..start + xi).collect();
        let prob = AssignmentProblem::new(&k, wi.clone(), pi)?;
        edges.extend(&shortlex_assign(&prob));
        w.extend(wi);
    }
    Ok((k.add_edges(&edges)?, w))
}

/// Where a colouring came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringSource {
    Supplied,
    Exact,
    Greedy,
}

/// Both upper bounds obtained from a proper `k`-colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticBound {
    pub colors: usize,
    /// `k(f(n/k) + 1) - 1`.
    pub formula: usize,
    /// `τ` of the complete multipartite graph on the colour classes.
    pub partition: usize,
    /// Colour class sizes, indexed by colour.
    pub class_sizes: Vec<usize>,
}

/// Checks that `coloring` is proper and returns the colour classes (each
/// ascending), with colours renumbered by first appearance.
pub fn color_classes(g: &Graph, coloring: &[usize]) -> Result<Vec<Vec<usize>>> {
    if coloring.len() != g.order() {
        return Err(Error::InvalidParameter(format!(
            "colouring has {} entries for a graph of order {}",
            coloring.len(),
            g.order()
        )));
    }
    for (u, v) in g.edges() {
        if coloring[u] == coloring[v] {
            return Err(Error::ImproperColoring(u, v));
        }
    }
    let mut index = std::collections::HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (v, &c) in coloring.iter().enumerate() {
        let i = *index.entry(c).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[i].push(v);
    }
    Ok(classes)
}

pub fn chromatic_bound(g: &Graph, coloring: &[usize]) -> Result<ChromaticBound> {
    let classes = color_classes(g, coloring)?;
    let n = g.order();
    let k = classes.len();
    let class_sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let partition =
        if k == 1 { usize::from(n > 1) } else { multipartite_tau(&PartitionSizes::new(class_sizes.clone())?)? };
    Ok(ChromaticBound { colors: k, formula: chromatic_formula(n, k)?, partition, class_sizes })
}

/// Edges and landmarks realising the partition bound on `g` itself.
///
/// The threshold graph of the multipartite graph on the colour classes is
/// pulled back to `g`'s ids; `g` is a spanning subgraph of it, so the
/// returned edges are exactly its non-edges of `g`.
pub fn chromatic_witness(g: &Graph, coloring: &[usize]) -> Result<(EdgeSet, Vec<usize>)> {
    let classes = color_classes(g, coloring)?;
    let n = g.order();
    if classes.len() == 1 {
        // edgeless: join the vertices into a path, one end resolves it
        let edges: EdgeSet = (1..n).map(|i| (i - 1, i)).collect();
        return Ok((edges, if n > 1 { vec![0] } else { Vec::new() }));
    }
    let sizes = PartitionSizes::new(classes.iter().map(Vec::len).collect())?;
    let (h, w) = multipartite_threshold_graph(&sizes)?;
    let to_g: Vec<usize> = classes.into_iter().flatten().collect();
    let mut edges = EdgeSet::new();
    for (a, b) in h.edges() {
        let (u, v) = (to_g[a], to_g[b]);
        if !g.has_edge(u, v) {
            edges.insert(u, v)?;
        }
    }
    let mut basis: Vec<usize> = w.into_iter().map(|a| to_g[a]).collect();
    basis.sort_unstable();
    Ok((edges, basis))
}

/// Proper colouring with the fewest colours, by backtracking over vertices
/// in id order with colours introduced in order of first use.
pub fn exact_coloring(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    for k in 1..=n {
        let mut col = vec![usize::MAX; n];
        if color_with(g, k, 0, 0, &mut col) {
            return col;
        }
    }
    unreachable!("n colours always suffice")
}

fn color_with(g: &Graph, k: usize, v: usize, used: usize, col: &mut [usize]) -> bool {
    if v == col.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|u| col[u] != c) {
            col[v] = c;
            if color_with(g, k, v + 1, used.max(c + 1), col) {
                return true;
            }
            col[v] = usize::MAX;
        }
    }
    false
}

/// Largest-degree-first greedy colouring (ties by id), smallest free colour each time.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut col = vec![usize::MAX; n];
    for v in order {
        let taken: Vec<usize> = g.neighbors(v).map(|u| col[u]).collect();
        col[v] = (0..).find(|c| !taken.contains(c)).expect("unbounded");
    }
    col
}

/// Exact colouring up to `max_exact` vertices, greedy above.
pub fn default_coloring(g: &Graph, max_exact: usize) -> (Vec<usize>, ColoringSource) {
    if g.order() <= max_exact {
        (exact_coloring(g), ColoringSource::Exact)
    } else {
        (greedy_coloring(g), ColoringSource::Greedy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, edgeless, generalized_petersen};
    use crate::resolve::resolves;

    fn parts(v: &[usize]) -> PartitionSizes {
        PartitionSizes::new(v.to_vec()).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(multipartite_tau(&parts(&[1, 2])).unwrap(), 1);
        assert_eq!(multipartite_tau(&parts(&[3, 3])).unwrap(), 3);
        assert_eq!(multipartite_tau(&parts(&[7, 12])).unwrap(), 7);
        assert_eq!(multipartite_tau(&parts(&[1])).unwrap(), 0);
        assert!(multipartite_tau(&parts(&[4])).is_err());
        assert_eq!(multipartite_tau(&parts(&[1, 1, 1, 1])).unwrap(), 3);
    }

    #[test]
    fn threshold_graph_examples() {
        for (x, t) in [(vec![2, 3], 2), (vec![2, 2], 2), (vec![6, 6], 5), (vec![1, 1], 1)] {
            let (h, w) = multipartite_threshold_graph(&parts(&x)).unwrap();
            assert_eq!(w.len(), t, "{x:?}");
            assert!(resolves(&h, &w), "{x:?}");
            let k = complete_multipartite(&x).unwrap();
            assert!(k.edges().all(|(u, v)| h.has_edge(u, v)));
        }
    }

    #[test]
    fn chromatic_examples() {
        let c6 = cycle(6).unwrap();
        let b = chromatic_bound(&c6, &[0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!((b.formula, b.partition), (5, 3));
        let k5 = complete(5).unwrap();
        let b = chromatic_bound(&k5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((b.formula, b.partition), (9, 4));
        let k7_12 = complete_multipartite(&[7, 12]).unwrap();
        let col: Vec<usize> = (0..19).map(|v| usize::from(v >= 7)).collect();
        let b = chromatic_bound(&k7_12, &col).unwrap();
        assert_eq!((b.formula, b.partition), (7, 7));
        assert_eq!(chromatic_bound(&c6, &[0, 0, 1, 0, 1, 0]), Err(Error::ImproperColoring(0, 1)));
        let b = chromatic_bound(&edgeless(4), &[0; 4]).unwrap();
        assert_eq!((b.colors, b.partition), (1, 1));
    }

    #[test]
    fn witness_pulls_back() {
        let g = generalized_petersen(5, 2).unwrap();
        let col = exact_coloring(&g);
        let (edges, basis) = chromatic_witness(&g, &col).unwrap();
        let b = chromatic_bound(&g, &col).unwrap();
        assert_eq!(basis.len(), b.partition);
        assert!(resolves(&g.add_edges(&edges).unwrap(), &basis));
        let (edges, basis) = chromatic_witness(&edgeless(3), &[0; 3]).unwrap();
        assert!(resolves(&edgeless(3).add_edges(&edges).unwrap(), &basis));
    }

    #[test]
    fn colourings() {
        assert_eq!(color_classes(&cycle(5).unwrap(), &exact_coloring(&cycle(5).unwrap())).unwrap().len(), 3);
        assert_eq!(color_classes(&cycle(6).unwrap(), &exact_coloring(&cycle(6).unwrap())).unwrap().len(), 2);
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!(color_classes(&p, &exact_coloring(&p)).unwrap().len(), 3);
        let gc = greedy_coloring(&p);
        assert!(color_classes(&p, &gc).is_ok());
    }
}
