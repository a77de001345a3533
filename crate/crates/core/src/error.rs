use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} is already present in the graph")]
    EdgePresent(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} is {size}, above the configured cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("assignment precondition violated: {0}")]
    Assignment(AssignmentViolation),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("improper colouring: vertices {0} and {1} are adjacent and share a colour")]
    ImproperColoring(usize, usize),
}

/// Which of the three assignment conditions failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignmentViolation {
    #[error("(i) vertex {0} is in both W and P")]
    Overlap(usize),
    #[error("(ii) |P| = {targets} exceeds 2^|W| = {capacity}")]
    TooManyTargets { targets: usize, capacity: u128 },
    #[error("(iii) vertices {0} and {1} share a nonempty W-neighbourhood")]
    SharedNeighbourhood(usize, usize),
    #[error("vertex {0} listed twice")]
    Repeated(usize),
}
