use thiserror::Error;

/// Errors raised by graph parsing, word handling and the bounded searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Input(String),

    #[error("{what}: size {actual} exceeds the cap of {cap}")]
    Resource {
        what: &'static str,
        cap: usize,
        actual: usize,
    },
}

impl Error {
    pub fn input(message: impl Into<String>) -> Self {
        Error::Input(message.into())
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Input(_) => 1,
            Error::Resource { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
