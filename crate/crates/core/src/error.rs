use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ideal has no cached Gröbner basis")]
    NoBasis,
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("component {index} is not homogeneous of degree {expected}")]
    DegreeMismatch { index: usize, expected: u32 },
    #[error("hyperplanes {subset:?} violate normal crossing: dependent forms with a common point")]
    NormalCrossing { subset: Vec<usize> },
    #[error("foliation is not logarithmic along hyperplane {index}")]
    NotLogarithmic { index: usize },
    #[error("singular scheme is positive-dimensional in chart {chart}")]
    PositiveDimensional { chart: usize },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("local length did not stabilise below power {0}")]
    NoStabilization(u32),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
