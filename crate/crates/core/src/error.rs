use thiserror::Error;

/// Errors raised by constructors and solvers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid interval [{lo}, {hi}] for {n} vertices")]
    InvalidInterval { lo: usize, hi: usize, n: usize },
    #[error("map is not order-preserving at position {0}")]
    NotMonotone(usize),
    #[error("map has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("map is not an ordered homomorphism")]
    NotAHomomorphism,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("assignment does not satisfy the instance")]
    UnsatisfiedAssignment,
    #[error("literal refers to variable {var} but instance has {var_count} variables")]
    VariableOutOfRange { var: usize, var_count: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("not an ordered matching: vertex {vertex} has degree {degree}")]
    NotAMatching { vertex: usize, degree: usize },
    #[error("hyperedge {0:?} is not a set of distinct vertices of the declared size")]
    BadHyperedge(Vec<usize>),
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("invalid partitioned graph: {0}")]
    InvalidPartitionedGraph(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("witness violates the gadget structure: {0}")]
    GadgetViolation(String),
    #[error("{path}: {source}")]
    InFile { path: String, source: Box<Error> },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
