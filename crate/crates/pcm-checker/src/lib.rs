//! Fast codeword checking against a parity-check matrix.
//!
//! A received word `y` is a codeword iff every syndrome component, the XOR
//! of the `y_j` at the one-positions of a matrix row, is zero. The sparse
//! row lists make the work proportional to the number of ones in the
//! matrix, and [`check_batch`] tests 64 bit-transposed words per XOR lane.

mod batch;
mod bench;
mod sparse;

use std::fmt;

pub use batch::{pack_batch, unpack_batch, SyndromeBatch, WordBatch, BATCH_WIDTH};
pub use bench::{bench_check, BenchResult};
pub use sparse::SparseRows;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthMismatch {
    pub expected: usize,
    pub actual: usize,
}

impl fmt::Display for LengthMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word length {} does not match the {} matrix columns",
            self.actual, self.expected
        )
    }
}

impl std::error::Error for LengthMismatch {}

/// Syndromes of all words in the batch: syndrome word `i`, bit `b` is
/// component `v_i` of word `b`.
pub fn check_batch(rows: &SparseRows, batch: &WordBatch) -> Result<SyndromeBatch, LengthMismatch> {
    if batch.lanes().len() != rows.cols() {
        return Err(LengthMismatch {
            expected: rows.cols(),
            actual: batch.lanes().len(),
        });
    }
    let lanes = batch.lanes();
    let mut words = Vec::with_capacity(rows.num_rows());
    let mut xor_ops = 0usize;
    for row in rows.iter() {
        let mut acc = 0u64;
        for &j in row {
            acc ^= lanes[j as usize];
        }
        xor_ops += row.len();
        words.push(acc);
    }
    Ok(SyndromeBatch::new(words, batch.count(), xor_ops))
}
