//! Exact coefficients, sparse monomials and polynomials, monomial orders.

mod coeff;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coefficient, Field};
pub use monomial::Monomial;
pub use order::{BaseOrder, MonomialOrder};
pub use parse::{parse_monomial, parse_polynomial, ParseError};
pub use polynomial::Polynomial;
pub use ring::{PolyRing, VarBlock, VariableContext};

pub(crate) use ring::is_valid_name;

#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different rings")]
    ContextMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("order covers {order_vars} variables but the ring has {ring_vars}")]
    OrderMismatch { order_vars: usize, ring_vars: usize },
    #[error("invalid variable name '{0}'")]
    InvalidVariableName(String),
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("blocks do not cover the variables")]
    BlocksDoNotCover,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },
}
