use thiserror::Error;

/// Errors raised by graph construction, parsing and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected: vertex {unreached} not reachable from vertex 0")]
    Disconnected { unreached: usize },

    #[error("witness must differ from the tested vertex {0}")]
    InvalidWitness(usize),

    #[error("graph has a single vertex; diameter is zero")]
    DegenerateGraph,

    #[error("absorbing set is empty")]
    EmptyAbsorbingSet,

    #[error("random walk exceeded {0} steps")]
    WalkCapExceeded(u64),

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vertex set X is empty")]
    EmptyX,

    #[error("vertex set X covers every vertex")]
    XCoversAllVertices,

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("graph interior is empty")]
    InteriorEmpty,

    #[error("{vertices} vertices exceeds the dense spectrum cap of {cap}")]
    SpectrumTooLarge { vertices: usize, cap: usize },

    #[error("linear solve failed: {0}")]
    SolverFailure(String),

    #[error("weight undefined at vertex {0} where f is nonzero")]
    WUndefinedWhereFNonzero(usize),

    #[error("f is nonzero on boundary vertex {0}")]
    FNotVanishingOnBoundary(usize),

    #[error("masses do not form a probability measure: {0}")]
    NotAMeasure(String),

    #[error("vertex {0} lies in the boundary")]
    VertexInBoundary(usize),

    #[error("kernel is not convex and nondecreasing")]
    KernelNotAdmissible,

    #[error("kernel covers distances up to {have}, graph needs {need}")]
    KernelTooShort { have: usize, need: usize },

    #[error("interior purge did not terminate within {0} moves")]
    NonTermination(usize),

    #[error("graph6 data length does not match vertex count {0}")]
    BadChecksumLength(usize),

    #[error("byte {0:#04x} at offset {1} is outside the graph6 range")]
    NonPrintableByte(u8, usize),

    #[error("graph6 graph is disconnected")]
    DisconnectedAfterParse,

    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Errors caused by malformed or unsuitable input rather than a failed computation.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::SolverFailure(_) | Error::NonTermination(_) | Error::WalkCapExceeded(_))
    }
}
