use thiserror::Error;

/// Errors surfaced by the engine. Every fallible operation is exact: an error
/// always means a contract violation or a resource cap, never a numerical issue.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for arity {arity} (indices are 1-based)")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("polynomial is not grade-homogeneous: saw grades {first} and {second}")]
    MixedGrade { first: i64, second: i64 },

    #[error("invalid algebra spec `{0}` (expected sp:<n>, so:2n, so:2n+1, sl:<n>, gl:<n>)")]
    InvalidAlgebra(String),

    #[error("{0}")]
    InvalidPartition(String),

    #[error("element is not in the selected algebra")]
    NotInAlgebra,

    #[error("operator {op} is not defined for {family}")]
    UnsupportedOperator { op: &'static str, family: String },

    #[error("monomial cap exceeded: slice {slice} needs more than {cap} monomials")]
    CapExceeded { slice: String, cap: usize },

    #[error("slice {0} is not provably finite under the given constraints")]
    SliceNotFinite(String),

    #[error("operator image escapes the codomain slice: {0} has no column")]
    ImageEscapesSlice(String),

    #[error("iteration cap {cap} reached before the series terminated")]
    NonTermination { cap: usize },

    #[error("solver configuration rejected: {0}")]
    BadSolverConfig(String),

    #[error("unknown case id `{0}`")]
    UnknownCase(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
