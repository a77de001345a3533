/// Size caps for the exponential routines.
///
/// Every exhaustive search in the crate refuses inputs above its cap with
/// [`Error::CapExceeded`](crate::Error::CapExceeded) instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by [`max_clique`](crate::clique::max_clique).
    pub max_clique_order: usize,
    /// Largest host order accepted by [`is_induced_subgraph`](crate::induced::is_induced_subgraph).
    pub max_induced_order: usize,
    /// Largest order accepted by [`metric_dimension`](crate::resolve::metric_dimension).
    pub max_beta_order: usize,
    /// Largest number of non-edges accepted by [`tau_exact`](crate::threshold::tau_exact).
    pub max_complement_edges: usize,
    /// Above this order colourings come from the greedy heuristic.
    pub max_exact_coloring_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_clique_order: 64,
            max_induced_order: 12,
            max_beta_order: 24,
            max_complement_edges: 21,
            max_exact_coloring_order: 16,
        }
    }
}

impl Limits {
    /// Caps raised far enough that only memory and patience bound the search.
    pub fn unbounded() -> Self {
        Limits {
            max_clique_order: usize::MAX,
            max_induced_order: usize::MAX,
            max_beta_order: usize::MAX,
            max_complement_edges: 40,
            max_exact_coloring_order: usize::MAX,
        }
    }
}
