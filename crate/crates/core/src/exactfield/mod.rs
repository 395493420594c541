//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! The ambient field of every geometric object in this crate is a fixed
//! `Q(zeta_m)`; elements are vectors of arbitrary-precision rationals on the
//! power basis of `zeta_m`, reduced modulo the `m`-th cyclotomic polynomial.
//! Rationals are backed by [`num::BigRational`] (always gcd-reduced with a
//! positive denominator); everything on top is implemented here.

mod cyclo;
mod parse;
mod poly;

pub use cyclo::CycloElem;
pub use parse::{cyclo_to_string, parse_cyclo, rational_to_string};
pub use poly::{cyclotomic_poly, euler_phi};

use thiserror::Error;

/// Canonical arbitrary-precision rational (reduced, positive denominator).
pub type Rational = num::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed cyclotomic orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("exponent {exponent} exceeds the supported limit {limit}")]
    OrderError { exponent: u64, limit: u64 },
    #[error("cyclotomic order must be a positive integer")]
    InvalidOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: verifies the operands live in the same field
/// and that divisors are nonzero. The operator impls on [`CycloElem`] assume
/// both and panic otherwise.
pub fn field_arith(a: &CycloElem, b: &CycloElem, op: FieldOp) -> Result<CycloElem, FieldError> {
    if a.order() != b.order() {
        return Err(FieldError::OrderMismatch(a.order(), b.order()));
    }
    match op {
        FieldOp::Add => Ok(a + b),
        FieldOp::Sub => Ok(a - b),
        FieldOp::Mul => Ok(a * b),
        FieldOp::Div => {
            if b.is_zero() {
                Err(FieldError::DivisionByZero)
            } else {
                Ok(a * &b.inv()?)
            }
        }
    }
}
