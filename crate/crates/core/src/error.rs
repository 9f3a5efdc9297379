use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown ring `{0}`")]
    UnknownRing(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("cannot parse element `{text}`: {reason}")]
    ElementSyntax { text: String, reason: String },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("operation `{op}` is not supported over {ring}")]
    Unsupported { op: &'static str, ring: String },

    #[error("morphism is not well defined: {0}")]
    NotWellDefined(String),

    #[error("enumeration budget exceeded: {required} candidate tuples needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("inconsistent arity: {0}")]
    Arity(String),

    #[error("signal space error: {0}")]
    SignalSpace(String),

    #[error("invalid input: {0}")]
    Input(String),
}
