use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    /// Operands built over different algebras or truncations.
    #[error("usage error: {0}")]
    Usage(String),

    /// An input would make a formal series ill defined (a term of order zero).
    #[error("convergence error: {0}")]
    Convergence(String),

    /// A precondition on graded parts or bidegrees failed.
    #[error("domain error: {0}")]
    Domain(String),

    /// A solved identity left a nonzero residual.
    #[error("internal consistency failure: {0}")]
    Residual(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
