use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed {what}: {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("requested size {requested} exceeds the configured limit {limit}")]
    LimitExceeded { requested: usize, limit: usize },

    #[error("{0}")]
    Domain(String),

    #[error("series expansion needs a nonzero constant term in the denominator")]
    Expansion,

    #[error("index ({row}, {col}) out of range for a {size}x{size} matrix")]
    IndexOutOfRange { row: usize, col: usize, size: usize },

    #[error("continued fraction depth {depth} is insufficient for order {order}")]
    DepthInsufficient { depth: usize, order: usize },

    #[error("invalid occurrence spec: {0}")]
    InvalidSpec(String),

    #[error("no closed form: {0}")]
    NoClosedForm(String),

    #[error("bad table data: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
