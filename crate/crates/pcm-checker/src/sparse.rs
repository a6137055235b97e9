use pcm_core::BinaryMatrix;

use crate::LengthMismatch;

/// Per-row ascending column indices of the ones in a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRows {
    cols: usize,
    rows: Vec<Vec<u32>>,
}

impl SparseRows {
    pub fn from_matrix(h: &BinaryMatrix) -> Self {
        let rows = (0..h.rows())
            .map(|i| h.row_indices(i).iter().map(|&j| j as u32).collect())
            .collect();
        SparseRows {
            cols: h.cols(),
            rows,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Total index count; equals the ones of the source matrix.
    pub fn ones(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.rows.iter()
    }

    /// Rebuilds the dense matrix the sparse rows came from.
    pub fn to_matrix(&self) -> BinaryMatrix {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&j| j as usize).collect())
            .collect();
        BinaryMatrix::from_rows(self.cols, &rows)
    }

    /// Syndrome of a single word and whether it is a codeword.
    pub fn check_word(&self, word: &[bool]) -> Result<(bool, Vec<bool>), LengthMismatch> {
        if word.len() != self.cols {
            return Err(LengthMismatch {
                expected: self.cols,
                actual: word.len(),
            });
        }
        let syndrome: Vec<bool> = self
            .rows
            .iter()
            .map(|row| row.iter().fold(false, |acc, &j| acc ^ word[j as usize]))
            .collect();
        let ok = syndrome.iter().all(|&b| !b);
        Ok((ok, syndrome))
    }
}
