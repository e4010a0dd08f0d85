use thiserror::Error;

use crate::poly::LaurentPoly;

/// Errors raised by the algebra kernel and the checkers built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operand has negative exponents; shift it to an ordinary polynomial first")]
    NegativeExponent,

    #[error("substitution q -> q^0 is not allowed")]
    ZeroSubstitution,

    #[error("zero polynomial is not a valid input here")]
    ZeroInput,

    #[error("not invertible modulo Phi_{n}^{m}: gcd with Phi_{n} is {gcd}")]
    NotInvertible { n: u64, m: u32, gcd: LaurentPoly },

    #[error("denominator {den} shares a factor with Phi_{n}")]
    NonCoprimeDenominator { n: u64, den: LaurentPoly },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
