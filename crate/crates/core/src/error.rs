use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("not a permutation of the vertex set")]
    NotAPermutation,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is not nicely distance-balanced with gamma = diameter + 1")]
    NotGammaDPlusOne,
    #[error("{0}")]
    Precondition(String),
    #[error("no geodesic of length {diameter} starts with the edge ({x0}, {x1})")]
    NoDiametralGeodesic { x0: usize, x1: usize, diameter: usize },
    #[error("invalid constructor argument: {0}")]
    InvalidArgument(String),
    #[error("unknown atlas name `{0}`")]
    UnknownAtlasName(String),
    #[error("unknown census predicate `{0}`")]
    UnknownPredicate(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("no regular graph with n = {n}, k = {k}: {reason}")]
    BadSweep { n: usize, k: usize, reason: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
