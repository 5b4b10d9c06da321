use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid size, index, or syntax in caller-supplied input.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A generating set contained the unit monomial.
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    /// The operation is undefined for the given ideal or graph.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two ideals live in polynomial rings with different variable counts.
    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    /// A configured size guard was exceeded.
    #[error("resource limit exceeded: {what} = {actual} exceeds bound {limit}")]
    Resource {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by exceeding a resource guard (CLI exit code 3).
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}
