use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph6 record: {0}")]
    MalformedRecord(String),

    #[error("truncated graph6 record: expected {expected} data bytes, found {found}")]
    TruncatedRecord { expected: usize, found: usize },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("unsupported QAOA depth p={0} (expected 1..=3)")]
    UnsupportedDepth(usize),

    #[error("sequencing error: {0}")]
    Sequencing(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("missing data for graph ids {0:?}")]
    MissingData(Vec<u32>),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("schema v{version} mismatch in column `{column}`: {detail}")]
    Schema {
        version: u32,
        column: String,
        detail: String,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
