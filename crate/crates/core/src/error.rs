use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: argument outside the domain ({detail})")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: {value} exceeds the supported range (limit {limit})")]
    OutOfRange { op: &'static str, value: f64, limit: f64 },

    #[error("hardy_z: accuracy not achievable at t = {t} (ceiling {ceiling})")]
    AccuracyNotAchievable { t: f64, ceiling: f64 },

    #[error("zero census failed: {0}")]
    Certification(String),

    #[error("quadrature did not reach tolerance: {0}")]
    Convergence(String),

    #[error("tail bound {tail:e} exceeds partial sum {partial:e}; raise the table height")]
    HeightTooLow { partial: f64, tail: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integral diverges: {0}")]
    Unbounded(String),

    #[error("root not bracketed: {0}")]
    RootNotBracketed(String),

    #[error("certificate coverage: {0}")]
    Coverage(String),

    #[error("sieve limit {limit} exceeded by x = {x}")]
    LimitExceeded { x: f64, limit: u64 },

    #[error("malformed zero table: {0}")]
    Parse(String),

    #[error("configuration: {0}")]
    Config(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}
