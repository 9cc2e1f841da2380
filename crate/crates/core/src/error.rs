use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("sequence is not in the image of the Young embedding: {0}")]
    NotInImage(String),
    /// Subduction hit a leading monomial that is not a product of generator
    /// leading monomials.
    #[error("monomial {0} is not in the initial algebra")]
    NotInInitialAlgebra(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures of the mathematics rather than of the input.
    pub fn is_mathematical(&self) -> bool {
        matches!(self, Error::NotInInitialAlgebra(_) | Error::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
