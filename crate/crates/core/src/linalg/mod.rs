//! Exact dense linear algebra over the rationals and prime fields.

mod matrix;
pub mod poly;
mod scalar;

pub use matrix::{Matrix, QuotientSpace};
pub use scalar::{FieldSpec, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("{0}")]
    Parse(String),
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
}
