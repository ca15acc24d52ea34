//! Error types shared across the algebra layer.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    /// A computation hit its resource budget. Carries enough context to
    /// diagnose the failure: the stage that ran out, the highest S-polynomial
    /// degree reached and the basis size at that point.
    #[error("budget exceeded in {stage}: degree reached {degree_reached}, basis size {basis_size}, {elapsed_ms} ms elapsed")]
    BudgetExceeded {
        stage: String,
        degree_reached: u32,
        basis_size: usize,
        elapsed_ms: u64,
    },

    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    RingMismatch { left: usize, right: usize },

    #[error("saturation by the zero polynomial is undefined")]
    SaturateByZero,
}

/// Syntax errors from the polynomial and document parsers, annotated with a
/// byte offset into the input.
#[derive(Debug, Clone, Error)]
#[error("parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}
