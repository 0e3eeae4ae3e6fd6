use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus {0} is not supported here")]
    UnsupportedGenus(usize),
    #[error("weight vector has {got} entries, triangulation has {want} edges")]
    DimensionMismatch { got: usize, want: usize },
    #[error("invalid normal coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("edge {0} is not flippable")]
    NotFlippable(usize),
    #[error("curve is not connected ({0} components)")]
    Disconnected(usize),
    #[error("cannot twist about this curve: {0}")]
    UnsupportedTwist(String),
    #[error("unknown curve name `{0}`")]
    UnknownCurve(String),
    #[error("atlas contract violated: {0}")]
    ContractViolation(String),
    #[error("intersection number not computable for this pair: {0}")]
    IntersectionUnsupported(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("proof script error at step {step}: {message}")]
    Script { step: usize, message: String },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
