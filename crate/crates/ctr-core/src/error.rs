//! Error type shared by all engine modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CtrError>;

#[derive(Debug, Error)]
pub enum CtrError {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed record at {path}:{line}: {message}")]
    MalformedRecord {
        path: String,
        line: usize,
        message: String,
    },

    #[error("invalid span in instance {id}: {message}")]
    InvalidSpan { id: String, message: String },

    #[error("invalid instance {id}: {message}")]
    InvalidInstance { id: String, message: String },

    #[error("duplicate instance id {0}")]
    DuplicateId(String),

    #[error("instance {0} has no reference summary")]
    MissingReference(String),

    #[error("annotation list is empty")]
    EmptyAnnotations,

    #[error("training corpus is empty")]
    EmptyCorpus,

    #[error("model vocabulary is empty")]
    EmptyVocabulary,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("distribution support mismatch: {0}")]
    SupportMismatch(String),

    #[error("data pool holds {pool} samples, fewer than {quantiles} quantiles")]
    PoolTooSmall { pool: usize, quantiles: usize },

    #[error("pool sample for instance {0} is not quantized")]
    UnquantizedSample(String),

    #[error("prompt fixture provides {available} exemplars, {requested} requested")]
    InsufficientExemplars { available: usize, requested: usize },

    #[error("remote endpoint error: {0}")]
    Remote(String),

    #[error("unknown instance id {0}")]
    UnknownId(String),
}
