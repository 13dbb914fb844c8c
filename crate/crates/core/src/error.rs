use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid chord ({a}, {b}) for a polygon with {n} vertices")]
    InvalidChord { n: usize, a: usize, b: usize },

    #[error("duplicate forbidden chord ({a}, {b})")]
    DuplicateChord { a: usize, b: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("not packable: {0}")]
    NotPackable(String),

    #[error("construction fault: {0}")]
    ConstructionFault(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("search refused: {0}")]
    SearchRefused(String),

    #[error("closed skewness formula does not apply: the instance admits no triangulation")]
    FormulaInapplicable,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
