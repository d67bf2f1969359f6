use thiserror::Error;

use crate::partitions::{FormType, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse partition token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("[{partition}] is not a valid {eps} diagram: {rule}")]
    InvalidDiagram {
        partition: Partition,
        eps: FormType,
        rule: String,
    },

    #[error("{what} {requested} exceeds the configured bound {bound}")]
    Capacity {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("no family matches the pair [{bottom}] < [{top}] ({eps}); not a minimal irreducible degeneration")]
    NotMinimalIrreducible {
        eps: FormType,
        top: Partition,
        bottom: Partition,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
