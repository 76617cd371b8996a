use thiserror::Error;

/// Failure while parsing a ring-spec string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid ring spec: {0}")]
    Semantic(String),
}

/// Failure while constructing a ring.
#[derive(Debug, Error)]
pub enum BuildError {
    #[error("ring order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: u64, cap: usize },
    #[error("table parse error on line {line}: {msg}")]
    TableParse { line: usize, msg: String },
    #[error("ring axiom violated: {axiom} (witness {witness:?})")]
    Axiom { axiom: &'static str, witness: Vec<usize> },
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// Failure while enumerating ideals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal enumeration exceeded the cap of {cap} ideals")]
    IdealCap { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices; limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid graph parameters: {0}")]
    BadParams(String),
}

#[derive(Debug, Error)]
pub enum RecognitionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// The forbidden-subgraph scan and the Krausz search reached different
    /// conclusions. This is always a bug.
    #[error("line-graph deciders disagree: forbidden scan says {scan_says_line}, Krausz search says {krausz_says_line}")]
    Disagreement {
        scan_says_line: bool,
        krausz_says_line: bool,
    },
    #[error("forbidden library failed self-validation: {0}")]
    Library(String),
}

/// Any error surfaced by the verification pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
}

impl From<GraphError> for Error {
    fn from(e: GraphError) -> Self {
        Error::Recognition(RecognitionError::Graph(e))
    }
}
