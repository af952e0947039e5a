use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants carry enough context to print a useful message; the CLI maps
/// them onto stable exit codes through [`Error::code`] and
/// [`Error::is_guard`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge #{index} is empty")]
    EmptyEdge { index: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} has negative weight {weight}")]
    NegativeWeight { edge: Vec<usize>, weight: String },
    #[error("edge {edge:?} appears more than once")]
    DuplicateEdge { edge: Vec<usize> },
    #[error("edge {edge:?} has a single vertex; the adjacency entry w/(|e|-1) is undefined")]
    SingletonEdge { edge: Vec<usize> },
    #[error("hypergraph must have at least one vertex")]
    NoVertices,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("{what}: size {size} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("bad arity: {0}")]
    BadArity(String),
    #[error("mode/arity mismatch: {0}")]
    ModeArityMismatch(String),
    #[error("bad looseness: {0}")]
    BadLooseness(String),
    #[error("degenerate cycle: {0}")]
    DegenerateCycle(String),
    #[error("too small: {0}")]
    TooSmall(String),
    #[error("arity error: {0}")]
    ArityError(String),
    #[error("insufficient vertices: {0}")]
    InsufficientVertices(String),
    #[error("bad cardinality set: {0}")]
    BadCardinalitySet(String),
    #[error("hypergraph is not regular: {0}")]
    NotRegular(String),
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("partition is not equitable: {0}")]
    NotEquitable(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("partition mismatch: {0}")]
    PartitionMismatch(String),
    #[error("count mismatch: {0}")]
    CountMismatch(String),
    #[error("block is not constant: {0}")]
    NonConstantBlock(String),
    #[error("matrix is not symmetric (deviation {0:e})")]
    NotSymmetric(f64),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not switchable: {0}")]
    NotSwitchable(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("bad subset size: {0}")]
    BadSubsetSize(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier (the variant name).
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyEdge { .. } => "EmptyEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::NegativeWeight { .. } => "NegativeWeight",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::SingletonEdge { .. } => "SingletonEdge",
            Error::NoVertices => "NoVertices",
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::TooLarge { .. } => "TooLarge",
            Error::BadArity(_) => "BadArity",
            Error::ModeArityMismatch(_) => "ModeArityMismatch",
            Error::BadLooseness(_) => "BadLooseness",
            Error::DegenerateCycle(_) => "DegenerateCycle",
            Error::TooSmall(_) => "TooSmall",
            Error::ArityError(_) => "ArityError",
            Error::InsufficientVertices(_) => "InsufficientVertices",
            Error::BadCardinalitySet(_) => "BadCardinalitySet",
            Error::NotRegular(_) => "NotRegular",
            Error::NotConnected => "NotConnected",
            Error::NotEquitable(_) => "NotEquitable",
            Error::MalformedPartition(_) => "MalformedPartition",
            Error::PartitionMismatch(_) => "PartitionMismatch",
            Error::CountMismatch(_) => "CountMismatch",
            Error::NonConstantBlock(_) => "NonConstantBlock",
            Error::NotSymmetric(_) => "NotSymmetric",
            Error::NoConvergence(_) => "NoConvergence",
            Error::UnsupportedRegime(_) => "UnsupportedRegime",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::NotSwitchable(_) => "NotSwitchable",
            Error::SizeMismatch(..) => "SizeMismatch",
            Error::BadSubsetSize(_) => "BadSubsetSize",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for rejections caused by a size guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}
