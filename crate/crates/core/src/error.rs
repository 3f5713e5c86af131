use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input exceeded a hard size cap or a search ran out of budget.
    /// The computation was abandoned rather than answered approximately.
    #[error("resource limit exceeded: {what} (limit {limit}, got {actual})")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A precondition of an operation did not hold for the supplied value.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::ResourceLimit {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
