use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// What went wrong in a graph6 payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Fault {
    Empty,
    NoVertices,
    ByteOutOfRange(u8),
    LongFormUnsupported,
    TooShort { expected: usize, found: usize },
    TooLong { expected: usize, found: usize },
    NonZeroPadding,
}

impl std::fmt::Display for Graph6Fault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6Fault::Empty => write!(f, "empty input"),
            Graph6Fault::NoVertices => write!(f, "graph has no vertices"),
            Graph6Fault::ByteOutOfRange(b) => write!(f, "byte {b} outside [63, 126]"),
            Graph6Fault::LongFormUnsupported => write!(f, "long-form header (n > 62) is not supported"),
            Graph6Fault::TooShort { expected, found } => {
                write!(f, "payload too short: expected {expected} bytes, found {found}")
            }
            Graph6Fault::TooLong { expected, found } => {
                write!(f, "payload too long: expected {expected} bytes, found {found}")
            }
            Graph6Fault::NonZeroPadding => write!(f, "padding bits after the last edge are not zero"),
        }
    }
}

/// Coarse error categories, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Connectivity,
    Numerical,
    Internal,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("graph6 error at byte {offset}: {fault}")]
    Graph6 { offset: usize, fault: Graph6Fault },

    #[error("graph6 short form holds at most 62 vertices, got {n}")]
    UnsupportedSize { n: usize },

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },

    #[error("enumeration supports 1 <= n <= 7, got {n}")]
    EnumerationRange { n: usize },

    #[error("symmetric eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("ambiguous eigenvalue grouping: gap {gap:e} is within a factor 10 of the threshold {threshold:e}")]
    GroupingAmbiguity { gap: f64, threshold: f64 },

    #[error("largest eigenvalue has multiplicity {multiplicity}, expected 1")]
    PerronNotSimple { multiplicity: usize },

    #[error("Perron vector entry at vertex {vertex} is not positive ({value:e})")]
    PerronNotPositive { vertex: usize, value: f64 },

    #[error("local measure at vertex {vertex} is ill-conditioned: rank lost at degree {degree}")]
    IllConditioned { vertex: usize, degree: usize },

    #[error("walk length {l} exceeds the configured cap {cap}")]
    WalkCapExceeded { l: u32, cap: u32 },

    #[error("integer overflow while counting walks of length {l}")]
    WalkOverflow { l: u32 },

    #[error("distance level {level} out of range (eccentricity {ecc})")]
    LevelOutOfRange { level: usize, ecc: usize },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "characterizations disagree at vertex {vertex}: partition says {via_partition}, polynomials say {via_polynomials}"
    )]
    CharacterizationMismatch { vertex: usize, via_partition: bool, via_polynomials: bool },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Graph6 { .. }
            | UnsupportedSize { .. }
            | VertexOutOfRange { .. }
            | UnknownFamily(_)
            | InvalidParams { .. }
            | EnumerationRange { .. }
            | WalkCapExceeded { .. }
            | LevelOutOfRange { .. }
            | MalformedPartition(_)
            | NotAdjacent { .. }
            | Precondition(_) => ErrorClass::Input,
            Disconnected { .. } => ErrorClass::Connectivity,
            NoConvergence { .. }
            | GroupingAmbiguity { .. }
            | PerronNotSimple { .. }
            | PerronNotPositive { .. }
            | IllConditioned { .. }
            | WalkOverflow { .. } => ErrorClass::Numerical,
            CharacterizationMismatch { .. } | Inconsistent(_) => ErrorClass::Internal,
        }
    }
}
