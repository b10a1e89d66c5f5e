use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point ({x}, {y}) is not reachable by a Dyck path")]
    UnreachableDyckPoint { x: i64, y: i64 },

    #[error("closed form is singular at {0}; use the polynomial representation")]
    Singular(String),

    #[error("series constant term {0} is not invertible")]
    NotInvertible(String),

    #[error("series constant term {0} is not the square of a rational")]
    NotSquare(String),

    #[error("exhaustive enumeration refused: {0}")]
    SizeGuard(String),

    #[error("malformed reference table {name}: {reason}")]
    Fixture { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
