use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed instance: {0}")]
    Json(#[from] serde_json::Error),

    #[error("cannot read input: {0}")]
    Io(String),

    #[error("duplicate ground label {0:?}")]
    DuplicateLabel(String),

    #[error("set references unknown element {0:?}")]
    UnknownLabel(String),

    #[error("mask width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("set {0} is not a member of the patchwork")]
    NotAMember(String),

    #[error("the ground set is empty")]
    EmptyUniverse,

    /// The input family violates closure, so the cohort trichotomy does not apply.
    #[error("not a patchwork: {0}")]
    NotAPatchwork(String),

    #[error("invalid tree spec: {0}")]
    InvalidTreeSpec(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("{what} exceeds cap ({value} > {cap})")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
}
