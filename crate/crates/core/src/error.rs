use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, &'static str),
    #[error("pattern has {0} vertices; at most 8 are supported")]
    UnsupportedPattern(usize),
    #[error("invalid probe partition: {0}")]
    InvalidPartition(String),
    #[error("invalid probe certificate: {0}")]
    InvalidCertificate(String),
    #[error("graph is not a cograph")]
    NotACograph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not cubic (vertex {0} has degree {1})")]
    NotCubic(usize, usize),
    #[error("not a bipartition: {0}")]
    NotBipartite(String),
    #[error("instance generation gave up after {0} attempts")]
    GenerationTimeout(usize),
    #[error("colouring leaves vertex {0} uncoloured")]
    PartialColouring(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("unsupported value of d: {0}")]
    UnsupportedD(String),
    #[error("wrong case: {0}")]
    WrongCase(String),
    #[error("oracle scale exceeded: {size} > limit {limit}")]
    OracleScaleExceeded { size: usize, limit: usize },
    #[error("invalid SAT instance: {0}")]
    InvalidSatInstance(String),
}
