use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph would have {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("invalid cockade spec: {0}")]
    Cockade(String),
    #[error("infeasible enumeration filter: {0}")]
    Filter(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("run interrupted: {0}")]
    Interrupted(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
