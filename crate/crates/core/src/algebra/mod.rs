//! Exact arithmetic: the prime field, monomials with their `N^n`
//! multidegree, monomial orders and sparse polynomials.

mod field;
mod monomial;
mod order;
mod polynomial;
mod ring;
mod text;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
pub use ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u32),
    #[error("monomials over {0} and {1} variables cannot be combined")]
    VariableCountMismatch(usize, usize),
    #[error("exponent exceeds 2^16")]
    ExponentOverflow,
    #[error("{0} variables exceed the supported maximum")]
    TooManyVariables(usize),
    #[error("zero polynomial has no multidegree or support")]
    ZeroPolynomial,
    #[error("polynomial is not multi-homogeneous")]
    NotMultiHomogeneous,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
