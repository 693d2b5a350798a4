use oklab_core::Error;

/// Failures with their process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Consistency(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } => 2,
            CliError::Resource(_) => 3,
            CliError::Consistency(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::ResourceLimit { .. } | Error::Overflow { .. } | Error::RegularityNotReached { .. } => {
                CliError::Resource(msg)
            }
            Error::InternalConsistency { .. } => CliError::Consistency(msg),
            _ => CliError::Invalid(msg),
        }
    }
}
