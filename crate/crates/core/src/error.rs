use thiserror::Error;

/// Errors raised while building or evaluating polynomial families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A factor in a denominator vanished for the supplied parameters.
    #[error("non-generic parameters: vanishing factor {factor}")]
    NonGeneric { factor: String },

    #[error("cell ({row},{col}) lies outside the diagram of {shape}")]
    CellOutside { row: usize, col: usize, shape: String },

    #[error("{outer}/{inner} is not a horizontal strip")]
    NotHorizontalStrip { outer: String, inner: String },

    #[error("incompatible parameters: {0}")]
    Incompatible(String),

    #[error("weight is not a Laurent polynomial: {0}")]
    NonPolynomialWeight(String),

    #[error("pole at s = 1 after cancellation in {0}")]
    PoleAtOne(String),

    #[error("degree bound violated: {0}")]
    DegreeBound(String),

    #[error("square-root consistency violated: {0}")]
    SquareRoot(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn nongeneric(factor: impl Into<String>) -> Self {
        Error::NonGeneric {
            factor: factor.into(),
        }
    }
}
