use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A delimited-text input failed to parse. Carries enough context to
    /// point at the offending cell.
    #[error("{file}:{row}: column '{column}': {message}")]
    Parse {
        file: String,
        row: usize,
        column: String,
        message: String,
    },

    /// An id appeared more than once inside a single input file.
    #[error("{file}: duplicate card id '{id}'")]
    DuplicateId { file: String, id: String },

    /// A card-name query matched nothing in the catalog.
    #[error("unknown card '{query}'")]
    UnknownCard { query: String },

    /// A country code is missing from the electricity-mix table.
    #[error("unknown country code '{code}' (known: {known})")]
    UnknownCountry { code: String, known: String },

    /// An operation received an empty collection it cannot work on.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// A numeric or structural precondition was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The regressor has no variance; the fit is undefined.
    #[error("degenerate regression: {0}")]
    DegenerateRegression(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(
        file: &str,
        row: usize,
        column: &str,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            file: file.to_string(),
            row,
            column: column.to_string(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
