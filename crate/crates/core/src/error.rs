use thiserror::Error;

/// Errors raised by graph, hypergraph and oracle operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("triangles in a packing share edge {0}")]
    OverlappingPacking(usize),
    #[error("unknown hypergraph vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown hyperedge {0}")]
    UnknownHyperedge(usize),
    #[error("hyperedge id {0} used twice")]
    DuplicateHyperedge(usize),
    #[error("vertex {vertex} repeated in hyperedge {edge}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("hypergraph is not linear: hyperedges {0} and {1} share two or more vertices")]
    NotLinear(usize, usize),
    #[error("hypergraph is not 3-uniform: hyperedge {edge} has {size} vertices")]
    NotUniform { edge: usize, size: usize },
    #[error("hypergraph has isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("hypergraph contains a cycle")]
    Cyclic,
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no Steiner triple system on {0} points (need n = 1 or 3 mod 6)")]
    NoSteinerSystem(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
