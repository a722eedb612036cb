use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex id {vertex} (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("invalid meta-vertex id {id} (component graph has {count} meta-vertices)")]
    InvalidMetaVertex { id: usize, count: usize },

    #[error("no unique farthest vertex: cycle length {0} is odd")]
    NotUniqueFarthest(usize),

    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),

    #[error("edge {{{0}, {1}}} is not mapped to an edge")]
    EdgeNotPreserved(usize, usize),

    #[error("coloring has {colors} entries but the graph has {edges} edges")]
    ColoringMismatch { colors: usize, edges: usize },

    #[error("operation requires a hypercube")]
    NotHypercube,

    #[error("vertices {0:?} do not form a 4-cycle")]
    NotAFourCycle([usize; 4]),

    #[error("graph is not connected")]
    Disconnected,

    #[error("no vertex u is connected to its image phi(u)")]
    NoConnectedOrbitPair,

    #[error("graph has {edges} edges; exhaustive search is limited to {limit}")]
    TooManyEdges { edges: usize, limit: usize },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}
