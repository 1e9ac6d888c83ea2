use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("negative entry at ({i}, {j})")]
    NegativeEntry { i: usize, j: usize },
    #[error("nonzero diagonal entry at ({i}, {i})")]
    NonZeroDiagonal { i: usize },
    #[error("distinct points {i} and {j} are at distance 0")]
    ZeroDistance { i: usize, j: usize },
    #[error("asymmetric entries at ({i}, {j}) and ({j}, {i})")]
    Asymmetry { i: usize, j: usize },
    #[error("triangle inequality fails: d({i},{j}) = {dij} > d({i},{k}) + d({k},{j}) = {dik} + {dkj}")]
    Triangle {
        i: usize,
        j: usize,
        k: usize,
        dij: String,
        dik: String,
        dkj: String,
    },
    #[error("graph is disconnected: no path between {u} and {v}")]
    DisconnectedGraph { u: usize, v: usize },
    #[error("{what}: size {size} exceeds bound {bound}")]
    InstanceTooLarge { what: &'static str, size: usize, bound: usize },
    #[error("graph is not Helly: {witness}")]
    NotHelly { witness: String },
    #[error("Helly recognition methods disagree: {detail}")]
    MethodDisagreement { detail: String },
    #[error("map is not an automorphism: {detail}")]
    NotAutomorphism { detail: String },
    #[error("orbit left the explored window at step {step}")]
    WindowExhausted { step: usize },
    #[error("window too small: vertex {vertex} lacks its full neighborhood")]
    WindowTooSmall { vertex: usize },
    #[error("radius {radius} exceeds bound {bound}")]
    RadiusTooLarge { radius: usize, bound: usize },
    #[error("bad specification: {0}")]
    BadSpec(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("format {format} is not supported for {kind}")]
    UnsupportedFormat { format: String, kind: &'static str },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code for the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InstanceTooLarge { .. } | Error::RadiusTooLarge { .. } => 3,
            Error::NotHelly { .. } | Error::NotAutomorphism { .. } => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
