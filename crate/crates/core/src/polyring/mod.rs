//! Exact scalars, sparse multivariate polynomials, their text grammar, and
//! matrices over polynomial rings.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod univariate;

pub use field::{Field, FieldElem};
pub use linalg::Mat;
pub use matrix::PolyMatrix;
pub use poly::{Monomial, Poly, Ring, RingContext};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed exponent `{0}`: exponents are non-negative integers")]
    MalformedExponent(String),
    #[error("denominator {0} is not invertible in the ground field")]
    NonInvertibleDenominator(String),
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("operands live in different rings")]
    ContextMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("ring has no variable weights configured")]
    NoWeights,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("operation needs a univariate ring")]
    NotUnivariate,
    #[error("division by zero")]
    DivisionByZero,
}
