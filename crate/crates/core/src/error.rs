use thiserror::Error;

/// Errors surfaced to callers; anything that indicates an implementation
/// bug (a closed form evaluating to a non-integer, say) panics instead.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside an operation's stated domain. The message
    /// names the violated condition.
    #[error("domain error: {0}")]
    Domain(String),

    /// An identity id not present in the registry.
    #[error("unknown identity id `{0}` (see `list-ids`)")]
    UnknownIdentity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
