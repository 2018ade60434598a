use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A denominator factor vanished or fell below the genericity margin.
    #[error("singular parameter: {detail}{}", point_suffix(.point))]
    SingularParameter {
        detail: String,
        point: Option<Vec<i64>>,
    },

    #[error("operation requires {required} arithmetic")]
    UnsupportedMode { required: &'static str },

    #[error("no convergence: shell contributions did not decay by radius {radius} (last relative shell {last_relative:e})")]
    NoConvergence { radius: u32, last_relative: f64 },

    #[error("convergence condition violated: modulus {modulus:e} exceeds {limit}")]
    ConvergenceConditionViolated { modulus: f64, limit: f64 },

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("sampling exhausted after {attempts} attempts")]
    SamplingExhausted { attempts: u32 },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

fn point_suffix(point: &Option<Vec<i64>>) -> String {
    match point {
        Some(y) => format!(" at {y:?}"),
        None => String::new(),
    }
}

/// Serializable discriminant of [`Error`], used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    SingularParameter,
    UnsupportedMode,
    NoConvergence,
    ConvergenceConditionViolated,
    SchemaMismatch,
    InvalidContext,
    Parse,
    SamplingExhausted,
    Config,
    Io,
}

impl Error {
    pub fn singular(detail: impl Into<String>) -> Self {
        Error::SingularParameter {
            detail: detail.into(),
            point: None,
        }
    }

    /// Attaches a lattice point to a singularity that does not carry one yet.
    pub fn at_point(self, y: &[i64]) -> Self {
        match self {
            Error::SingularParameter {
                detail,
                point: None,
            } => Error::SingularParameter {
                detail,
                point: Some(y.to_vec()),
            },
            other => other,
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::SingularParameter { .. } => ErrorKind::SingularParameter,
            Error::UnsupportedMode { .. } => ErrorKind::UnsupportedMode,
            Error::NoConvergence { .. } => ErrorKind::NoConvergence,
            Error::ConvergenceConditionViolated { .. } => ErrorKind::ConvergenceConditionViolated,
            Error::SchemaMismatch(_) => ErrorKind::SchemaMismatch,
            Error::InvalidContext(_) => ErrorKind::InvalidContext,
            Error::Parse(_) => ErrorKind::Parse,
            Error::SamplingExhausted { .. } => ErrorKind::SamplingExhausted,
            Error::Config(_) => ErrorKind::Config,
            Error::Io(_) => ErrorKind::Io,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
