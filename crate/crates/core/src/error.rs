use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A group specification string could not be read.
    #[error("cannot parse group spec: bad token `{token}`")]
    Parse { token: String },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested computation exceeds an explicit size guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Two independent routes to the same quantity disagreed.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
