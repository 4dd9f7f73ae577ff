use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what}: n = {n} exceeds the guard of {guard}; pass an explicit override to force")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        guard: usize,
    },

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("degree sequence is not graphical")]
    NotGraphical,

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("toughness prerequisite could not be verified: {0}")]
    ToughnessPrerequisite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
