//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not positive definite ({context})")]
    NotPositiveDefinite { context: &'static str },

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    Dimension {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("degrees of freedom {dof} out of range (need > {min}) in {context}")]
    DegreesOfFreedom {
        dof: f64,
        min: f64,
        context: &'static str,
    },

    #[error("biomarker group {biomarker} / treatment {treatment} has no subjects")]
    MissingCell { biomarker: usize, treatment: usize },

    #[error("trial horizon too small: group ({biomarker}, {treatment}) ended with {got} subjects, need {need}")]
    InfeasibleDesign {
        biomarker: usize,
        treatment: usize,
        got: usize,
        need: usize,
    },

    #[error("masking group {group} would leave biomarker {biomarker} with no outcome data")]
    InfeasibleMask { group: usize, biomarker: usize },

    #[error("non-finite log-likelihood at sweep {sweep}")]
    NonFiniteLikelihood { sweep: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown scenario name: {0}")]
    UnknownScenario(String),

    #[error("i/o error for {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path} line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
