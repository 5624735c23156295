use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidParts(Vec<usize>),

    #[error("cell ({row},{col}) is not in the diagram")]
    CellOutOfDiagram { row: usize, col: usize },

    #[error("cell ({row},{col}) cannot be removed: the remaining cells do not form a diagram")]
    NotRemovable { row: usize, col: usize },

    #[error("{what}: n = {n} exceeds the guard {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("no partition of {n} has parts <= {max_part} and at most {max_parts} parts")]
    EmptyConstrainedSet {
        n: usize,
        max_part: usize,
        max_parts: usize,
    },

    /// A bound was asked for outside the hypotheses under which it is claimed.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A proof step checked during a construction did not hold.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_hypothesis(&self) -> bool {
        matches!(self, Error::Hypothesis(_))
    }
}
