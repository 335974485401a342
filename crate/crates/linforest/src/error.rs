//! Crate-wide error type.

/// Errors produced by graph construction, parsing, formula evaluation and search.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A graph operation would exceed the 62-vertex capacity.
    #[error("vertex capacity exceeded: {requested} > {max}")]
    Capacity { requested: usize, max: usize },

    /// An argument is structurally invalid (bad index, unsorted orders, overlap).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A precondition of a formula or construction does not hold.
    #[error("domain violation: {0}")]
    Domain(String),

    /// Malformed graph6 input. `offset` is the byte position of the problem.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    /// Malformed edge-list input. `line` is 1-based.
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    /// The search budget ran out before an exact answer was reached.
    /// This is an explicit indeterminate outcome, never a wrong verdict.
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    /// A computation was refused because it would not finish at desk scale.
    #[error("scale refusal: {0}")]
    ScaleRefusal(String),

    /// An internal self-check failed. Indicates a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
