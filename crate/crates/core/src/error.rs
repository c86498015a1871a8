use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch for `{symbol}`: expected {expected}, got {got}")]
    Arity {
        symbol: String,
        expected: usize,
        got: usize,
    },
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
    #[error("invalid signature: {0}")]
    Signature(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("monomial already carries twisting exponents: {0}")]
    AlreadyDecorated(String),
    #[error("identity is not multilinear: {0}")]
    NotMultilinear(String),
    #[error("empty word")]
    EmptyWord,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("map is not a morphism: {0}")]
    NotMorphism(String),
    #[error("defining identities of class `{class}` fail: {detail}")]
    ClassIdentity { class: String, detail: String },
    #[error("bounds too small: {0}")]
    Bounds(String),
    #[error("insufficient cutoff: need {need}, have {have}")]
    Cutoff { need: usize, have: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
