use alloc::string::String;

/// Errors raised by the library.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator vanishes at t = {0}")]
    PoleAtPoint(String),
    #[error("constant term is not invertible")]
    NotAUnit,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: u64 },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: String, found: String },
    #[error("scalar kinds differ: {0} vs {1}")]
    ScalarKindMismatch(String, String),
    #[error("series orders or base points differ")]
    OrderMismatch,
    #[error("arity must exceed {0}")]
    ArityTooSmall(usize),
    #[error("cutoff k = {k} is smaller than the number of rows {rows}")]
    CutoffTooSmall { k: usize, rows: usize },
    #[error("element is not idempotent at the base point")]
    NotIdempotent,
    #[error("series order {0} too small to separate eigenvalues")]
    OrderTooSmall(usize),
    #[error("eigenvalues fail to separate candidate summands: {0}")]
    SeparationFailure(String),
    #[error("block class is trivial")]
    TrivialClass,
    #[error("block classes belong to different parameters")]
    ParameterMismatch,
    #[error("block class is minimal")]
    MinimalClass,
    #[error("not a Young diagram: {0}")]
    InvalidYoungDiagram(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
