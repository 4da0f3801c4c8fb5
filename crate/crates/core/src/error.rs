use thiserror::Error;

use crate::tables::AdmissibilityReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid gram data: {0}")]
    InvalidGram(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("table flavors differ: {0} vs {1}")]
    FlavorMismatch(String, String),

    #[error("resource bound exceeded: {0}")]
    Resource(String),

    #[error("table is not admissible ({} violation(s))", .0.violations.len())]
    Inadmissible(AdmissibilityReport),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A state the classification theorems rule out was reached.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
