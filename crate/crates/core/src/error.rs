use thiserror::Error;

/// Errors raised by path parsing, class operations, counting and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid step {found:?} at position {index}; expected 'U' or 'D'")]
    InvalidStep { index: usize, found: char },

    #[error("path goes below the x-axis at step {index}")]
    BelowAxis { index: usize },

    #[error("path ends at height {height} instead of 0")]
    Unbalanced { height: usize },

    #[error("the empty path has no block factorization")]
    EmptyPath,

    #[error("path height {height} exceeds 2")]
    HeightExceeded { height: usize },

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("r and s must be positive, got {r}/{s}")]
    NonPositiveParam { r: u64, s: u64 },

    #[error("{r}/{s} is not in lowest terms")]
    NotCoprime { r: u64, s: u64 },

    #[error("cannot parse rational parameter {0:?}; expected R/S")]
    ParamSyntax(String),

    #[error("s = {s} is not of the form t*{r} + 1")]
    NoTParam { r: u64, s: u64 },

    #[error("index {j} outside 1..={r}")]
    IndexOutOfRange { j: usize, r: u64 },

    #[error("path {path} is not a member of {class}")]
    NotMember { class: String, path: String },

    #[error("path {path} is not in the image of phi")]
    NotInImage { path: String },

    #[error("part {part} is not in the part set")]
    PartNotInSet { part: usize },

    #[error("cannot parse composition {0:?}")]
    CompositionSyntax(String),

    #[error("series denominator must have constant term 1")]
    SeriesDenominator,

    #[error("coefficient {index} is negative and cannot be a count")]
    NegativeCoefficient { index: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("closed form disagrees with direct search: {0}")]
    FormulaMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
