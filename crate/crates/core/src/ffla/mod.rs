//! Exact dense linear algebra over prime fields.
//!
//! [`GFMatrix`] stores GF(2) matrices bit-packed (64 entries per word, row
//! operations are word XORs) and every other prime one byte per entry.
//! Elimination always pivots on the leftmost available nonzero column, so
//! reduced forms are canonical and reproducible.

mod echelon;
mod field;
mod matrix;

use thiserror::Error;

pub use echelon::{intersect_rowspaces, solve_in_rowspace, Rref};
pub use field::{is_prime, is_supported_prime, GFScalar, MAX_MODULUS};
pub use matrix::GFMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FflaError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("modulus mismatch: GF({left}) vs GF({right})")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("vector length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector is not in the row space")]
    NotInSpan,
}
