use thiserror::Error;

/// Violations of the array model's invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid move: {field} = {value} out of range (allowed {min}..={max})")]
    InvalidMove {
        field: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid cells: {0}")]
    Cells(String),

    #[error("mode error: {0}")]
    Mode(String),
}

/// A parse failure with its location in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    At {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("move token {index} ({token:?}): {message}")]
    MoveToken {
        index: usize,
        token: String,
        message: String,
    },

    #[error("line {line}: {source}")]
    Model {
        line: usize,
        #[source]
        source: ModelError,
    },
}

/// A precondition of an analysis routine does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Model(#[from] ModelError),
}
