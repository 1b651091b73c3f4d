use thiserror::Error;

use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("basis mismatch: expected {expected}-basis element, found {found}-basis")]
    BasisMismatch { expected: char, found: char },

    #[error("length {length} exceeds the configured budget {budget}")]
    BudgetExceeded { length: usize, budget: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("element {0} does not lie in the ideal spanned by a-value >= 2")]
    NotInIdeal(String),

    #[error("element {0} is not of the form rt(srt)^m w^p")]
    NotInH1(String),

    #[error("monomial element is not symmetric under m -> -m")]
    NotSymmetric,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed for {what}: expected {expected}, got {actual}")]
    Mismatch {
        what: String,
        expected: String,
        actual: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
