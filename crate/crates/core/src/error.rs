//! Errors shared by the arithmetic layers.

use thiserror::Error;

/// Errors raised by polynomial and monomial arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("monomial dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operands live in different rings (p or variable list differs)")]
    RingMismatch,

    #[error("operands carry different monomial orders")]
    OrderMismatch,

    #[error("exponent overflow: result does not fit the configured exponent width")]
    ExponentOverflow,
}
