use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto its exit-code
/// contract (2 usage/parameter, 3 resource guard, 4 validation failure).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {weight} is not dominant for {group}")]
    NotDominant { weight: String, group: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid family label: {0}")]
    InvalidLabel(String),

    #[error("unsupported embedding: {0}")]
    UnsupportedEmbedding(String),

    #[error("resource guard exceeded: weight system larger than {limit} weights")]
    ResourceGuard { limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
