use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unregistered decoration `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` is declared twice")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("the set of omega labels must be nonempty")]
    EmptyOmega,
    #[error("X-kind label `{0}` cannot decorate an internal vertex")]
    NotOmega(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("filtration degree of the zero element is undefined")]
    ZeroElement,
    #[error("no generator image for `{0}`")]
    MissingGenerator(String),
    #[error("no operator for `{0}`")]
    MissingOperator(String),
    #[error("generator image of `{0}` does not satisfy the primitive condition")]
    NotPrimitive(String),
    #[error("unknown weight symbol `{0}`")]
    UnknownSymbol(String),
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("invalid json: {0}")]
    Json(String),
}
