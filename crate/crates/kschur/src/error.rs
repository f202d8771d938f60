use thiserror::Error;

/// Errors surfaced by the library.
///
/// The CLI maps these onto exit codes: domain/precondition/capability
/// problems are usage errors (2), numeric failures are 3, and internal
/// consistency or positivity violations (which indicate a bug) are 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid level: {0}")]
    InvalidLevel(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    #[error("positivity violation: {0}")]
    Positivity(String),

    #[error("capability exceeded: {0}")]
    Capability(String),
}

impl Error {
    /// Exit status used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidPartition(_)
            | Error::InvalidLevel(_)
            | Error::Domain(_)
            | Error::Precondition(_)
            | Error::Capability(_) => 2,
            Error::Numeric(_) => 3,
            Error::InternalConsistency(_) | Error::Positivity(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
