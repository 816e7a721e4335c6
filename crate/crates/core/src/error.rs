use thiserror::Error;

use crate::hypergraph::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe size mismatch: {left} vs {right} variables")]
    UniverseMismatch { left: usize, right: usize },
    #[error("universe of {0} variables exceeds the supported maximum of 64")]
    UniverseTooLarge(usize),
    #[error("variable x{index} outside a universe of {size} variables")]
    VariableOutOfRange { index: usize, size: usize },
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
    #[error("alpha undefined for the zero ideal")]
    AlphaUndefined,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("cost guard exceeded: {what} is {value}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(#[from] Violation),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("hypergraph is not {0}-uniform")]
    NotUniform(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cover program: {0}")]
    InvalidProgram(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("conformance check failed: {0}")]
    Conformance(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::GuardExceeded { what, value, limit })
    } else {
        Ok(())
    }
}
