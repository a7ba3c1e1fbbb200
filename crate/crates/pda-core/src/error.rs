use thiserror::Error;

/// Errors raised while reading or validating input documents.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("planarity failure: {0}")]
    Planarity(String),
}

impl ParseError {
    pub(crate) fn from_json(err: serde_json::Error) -> Self {
        ParseError::Syntax {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }

    pub(crate) fn semantic(msg: impl Into<String>) -> Self {
        ParseError::Semantic(msg.into())
    }
}

/// Errors raised by algebraic operations and checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("expression error at offset {offset}: {message}")]
    Expression { offset: usize, message: String },
    #[error("differential of `{generator}` {message}")]
    Invariant { generator: String, message: String },
    #[error("substitution rejected: {0}")]
    Tame(String),
    #[error("missing grading for chord `{0}` in integer grading mode")]
    MissingGrading(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Errors from disk enumeration.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiskError {
    #[error("face multiplicity limit must be at least 1")]
    ZeroLimit,
}

/// Errors from move verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("splitting failure at `{0}`: no matching b-word term with coefficient 1")]
    Splitting(String),
    #[error("action ordering violated: {0}")]
    Ordering(String),
    #[error("chain map failure at stage {stage} on `{generator}`")]
    ChainMap { stage: usize, generator: String },
}
