//! Threshold dimension: the counting functions, upper-bound constructions,
//! lower-bound certificates and exact solvers.

mod construct;
mod diameter_two;
mod exact;
mod lower;
mod multipartite;
mod numbers;

pub use construct::{diametral_bound, diammeth_construct, DiametralBound};
pub use diameter_two::{diameter_two_tau, diameter_two_work, DiameterTwoTau};
pub use exact::{tau_bounds, tau_exact, upper_candidates, TauBounds, UpperSource, UpperWitness};
pub use lower::{
    min_degree_certificate, min_degree_value, no_two_basis_supergraph, pair_collision, tau_lower_bound,
    vertex_exclusion,
};
pub use multipartite::{
    chromatic_bound, chromatic_witness, color_classes, default_coloring, exact_coloring, greedy_coloring,
    multipartite_tau, multipartite_threshold_graph, ChromaticBound, ColoringSource,
};
pub use numbers::{
    at_ell, chromatic_formula, ell, f_int, f_of, g_of, planar_bound, planar_log_cap, sharpness_family, sharpness_min_d,
    Rational,
};
