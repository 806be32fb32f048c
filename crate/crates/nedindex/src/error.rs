use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input. `line` is 1-based; 0 means the input as a whole.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Graph(#[from] nedindex_core::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("k={k}, repeat {repeat}: {source}")]
    Sweep {
        k: usize,
        repeat: usize,
        source: nedindex_core::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
