use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// The per-node queue has load ρ ≥ 1; steady-state metrics do not exist.
    #[error("unstable queue: q_s = {q_s} does not exceed arrival probability p_a = {p_a} (rho = {rho})")]
    UnstableQueue { q_s: f64, p_a: f64, rho: f64 },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("invalid configuration: {field}: {reason}")]
    InvalidConfig { field: String, reason: String },

    #[error("{metric}: {source}")]
    Metric {
        metric: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn in_metric(self, metric: &'static str) -> Self {
        Error::Metric {
            metric,
            source: Box::new(self),
        }
    }
}
