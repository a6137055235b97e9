//! Bit-packed binary matrices over GF(2) with parity-check semantics.
//!
//! The central type is [`BinaryMatrix`], an `m x n` bit matrix stored row
//! major in 64-bit words with a cached count of one-entries. Row additions
//! (XOR) preserve the row space and therefore the code the matrix checks.
//! Alist reading and writing lives in [`alist`].

mod alist;
mod basis;
mod error;
mod matrix;

mod random;

pub use alist::{parse_alist, write_alist, AlistDocument};
pub use basis::RowBasis;
pub use error::{AlistError, MatrixError};
pub use matrix::{BinaryMatrix, WORD_BITS};
