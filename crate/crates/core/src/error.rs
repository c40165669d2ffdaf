use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A malformed token in a textual word; `position` is 1-based.
    #[error("token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// An exponential enumeration would exceed its configured cap.
    #[error("{what}: {needed} exceeds the cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("bases list is empty")]
    EmptyBases,

    #[error("basis {index} has {found} elements, expected {expected}")]
    RaggedBases {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("duplicate basis at position {0}")]
    DuplicateBasis(usize),

    /// Basis exchange fails for `first`, `second` and `element` of `first \ second`.
    #[error("not a matroid: exchange fails for B1={first:?}, B2={second:?}, b1={element}")]
    NotAMatroid {
        first: Vec<String>,
        second: Vec<String>,
        element: String,
    },

    #[error("canonical verification failed: {0}")]
    VerificationFailed(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
