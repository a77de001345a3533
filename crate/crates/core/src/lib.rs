//! Exact metric dimension and threshold dimension of small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`distance`], [`families`], [`clique`], [`induced`], [`io`]: the
//!   graph substrate (bit-row adjacency, BFS distances, constructors, edge-list
//!   and DOT formats).
//! * [`resolve`]: resolving sets, the exact metric dimension solver and the
//!   lower bounds on it.
//! * [`shortlex`]: assigning distinct landmark neighbourhoods by adding edges.
//! * [`threshold`]: threshold dimension bounds, constructions and the
//!   exhaustive supergraph oracle.
//! * [`irreducible`]: constructors for irreducible graphs and the verdict engine.
//! * [`atlas`]: enumeration of all connected graphs of small order.

pub mod atlas;
mod bitset;
pub mod certificate;
pub mod clique;
pub mod distance;
mod error;
pub mod families;
pub mod graph;
pub mod induced;
pub mod io;
pub mod irreducible;
pub mod limits;
pub mod resolve;
pub mod shortlex;
pub mod threshold;

pub use certificate::{Certificate, CertificateKind, Witness};
pub use distance::{diameter, distances, Diameter, DistanceMatrix, UNREACHABLE};
pub use error::{AssignmentViolation, Error, Result};
pub use graph::{EdgeSet, Graph};
pub use limits::Limits;
pub use resolve::{metric_dimension, resolves, BetaResult};
