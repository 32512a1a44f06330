use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("relation {0} mixes paths with different endpoints")]
    NonParallelRelation(usize),
    #[error("ideal is not admissible below path length {0}")]
    NotAdmissible(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("representation violates relation {0}")]
    RelationViolated(usize),
    #[error("map does not intertwine the action of arrow `{0}`")]
    NotIntertwining(String),
    #[error("decomposition inconclusive after {0} trials")]
    InconclusiveDecomposition(usize),
    #[error("internal exactness check failed: {0}")]
    Exactness(String),
    #[error("projective dimension of the simple at vertex {0} is not finite")]
    InfinitePd(usize),
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
