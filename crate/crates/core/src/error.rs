use crate::report::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch { what: &'static str, expected: usize, found: usize },

    /// A dense object would exceed the coefficient budget.
    #[error("resource limit: {what} needs {needed} coefficients, budget is {budget}")]
    ResourceExceeded { what: String, needed: u128, budget: usize },

    /// An input failed the structural check its operation requires.
    #[error("precondition failed: {what} ({} violations)", report.total_violations)]
    PreconditionFailed { what: &'static str, report: Box<Report> },

    /// A constructed object failed the axioms it should satisfy.
    #[error("construction failed its own check: {what} ({} violations)", report.total_violations)]
    PostconditionFailed { what: &'static str, report: Box<Report> },

    #[error("{what} is not invertible")]
    NotInvertible { what: &'static str },

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A linear system that the construction needs has no solution.
    #[error("no solution: {0}")]
    Unsolvable(String),
}

impl Error {
    pub(crate) fn precondition(what: &'static str, report: Report) -> Self {
        Error::PreconditionFailed { what, report: Box::new(report) }
    }

    pub(crate) fn postcondition(what: &'static str, report: Report) -> Self {
        Error::PostconditionFailed { what, report: Box::new(report) }
    }
}
