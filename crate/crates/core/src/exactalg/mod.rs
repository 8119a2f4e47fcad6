//! Exact integer matrix algebra: products, determinants, Smith normal form,
//! kernels, cokernels and compound matrices.
//!
//! Everything works over arbitrary-precision integers; nothing here rounds or
//! reduces modulo a prime.

mod compound;
mod matrix;
mod smith;

pub use compound::{binomial, compound_matrix, k_subsets};
pub use matrix::IntMatrix;
pub use smith::{cokernel, kernel_basis, smith_normal_form, ClassMap, SmithForm};
pub(crate) use smith::cokernel_from_smith;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("compound order {k} exceeds matrix size {n}")]
    CompoundOrder { k: usize, n: usize },
}
