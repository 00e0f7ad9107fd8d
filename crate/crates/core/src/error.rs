use std::time::Duration;

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not regular: vertex {vertex} has degree {found}, expected {expected}")]
    NotRegular {
        vertex: usize,
        found: usize,
        expected: usize,
    },

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("team count mismatch: expected {expected}, found {found}")]
    TeamCountMismatch { expected: usize, found: usize },

    #[error("HAP table has {days} days but the graph is {degree}-regular")]
    DayCountMismatch { days: usize, degree: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("not a problem vector: {0}")]
    NotAProblemVector(String),

    #[error("budget exceeded after {elapsed:?} ({nodes} nodes): {what}")]
    BudgetExceeded {
        what: String,
        elapsed: Duration,
        nodes: u64,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
