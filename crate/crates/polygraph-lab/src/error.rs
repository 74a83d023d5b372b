use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is not regular (degree histogram: {0:?})")]
    NonRegular(Vec<(usize, usize)>),
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("parameter too small: {0}")]
    ParameterTooSmall(String),
    #[error("girth too small: required > {required}, actual {actual}")]
    GirthTooSmall { required: usize, actual: usize },
    #[error("size limit exceeded: {size} > {limit} ({what})")]
    SizeLimit {
        what: String,
        size: usize,
        limit: usize,
    },
    #[error("generator exhausted {tries} tries (best girth found: {best_girth})")]
    ExhaustedTries { tries: usize, best_girth: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("degenerate parameter pair (a = {a}, b = {b}): {reason}")]
    Degenerate { a: usize, b: usize, reason: String },
    #[error("invalid regularity pair (a = {a}, b = {b})")]
    InvalidPair { a: usize, b: usize },
    #[error("graph is not (a,b)-regular: {0}")]
    NotABRegular(String),
    #[error("operation requires S = {expected}, got {actual}")]
    WrongS { expected: String, actual: String },
    #[error("S does not contain 0; construction inapplicable")]
    ZeroNotInS,
    #[error("base graph is bipartite; no odd cycle exists")]
    BipartiteBase,
    #[error("center undefined: girth precondition violated")]
    CenterUndefined,
    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
