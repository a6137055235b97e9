use std::fmt;

use crate::basis::RowBasis;
use crate::error::MatrixError;

/// Bits per storage word.
pub const WORD_BITS: usize = 64;

/// A dense `m x n` matrix over GF(2), rows packed into 64-bit words.
///
/// Padding bits past column `n - 1` in the last word of each row are kept
/// zero, so `popcount` over whole words is exact. The total number of
/// one-entries is cached and updated incrementally by [`row_add`].
///
/// [`row_add`]: BinaryMatrix::row_add
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
    ones: usize,
}

impl BinaryMatrix {
    /// All-zero matrix with `rows x cols` logical bits.
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
        assert!(rows <= cols, "a parity-check matrix needs m <= n");
        let words_per_row = cols.div_ceil(WORD_BITS);
        BinaryMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
            ones: 0,
        }
    }

    /// Builds a matrix from per-row column index lists.
    pub fn from_rows(cols: usize, rows: &[Vec<usize>]) -> Self {
        let mut h = BinaryMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                h.set(i, j, true);
            }
        }
        h
    }

    /// Builds a matrix from strings of `'0'`/`'1'`, one per row.
    pub fn from_bit_strings(rows: &[&str]) -> Self {
        let cols = rows[0].len();
        let mut h = BinaryMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, c) in row.bytes().enumerate() {
                match c {
                    b'0' => {}
                    b'1' => h.set(i, j, true),
                    _ => panic!("bit strings may only contain '0' and '1'"),
                }
            }
        }
        h
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Total number of one-entries (the energy of the search state).
    pub fn ones(&self) -> usize {
        self.ones
    }

    /// Recounts the ones bit by word; equals [`ones`](Self::ones) at all times.
    pub fn recount_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        let w = self.data[row * self.words_per_row + col / WORD_BITS];
        w >> (col % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        let idx = row * self.words_per_row + col / WORD_BITS;
        let mask = 1u64 << (col % WORD_BITS);
        let old = self.data[idx] & mask != 0;
        if value && !old {
            self.data[idx] |= mask;
            self.ones += 1;
        } else if !value && old {
            self.data[idx] &= !mask;
            self.ones -= 1;
        }
    }

    /// Packed words of row `i`.
    pub fn row(&self, i: usize) -> &[u64] {
        let start = i * self.words_per_row;
        &self.data[start..start + self.words_per_row]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Column indices of the ones in row `i`, ascending.
    pub fn row_indices(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.row_weight(i));
        for (w, &word) in self.row(i).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), MatrixError> {
        for index in [i, j] {
            if index >= self.rows {
                return Err(MatrixError::RowOutOfRange {
                    index,
                    rows: self.rows,
                });
            }
        }
        if i == j {
            return Err(MatrixError::SameRow(i));
        }
        Ok(())
    }

    /// XORs row `i` into row `j` and returns the change in ones.
    ///
    /// The cached energy is updated by the returned delta.
    pub fn row_add(&mut self, i: usize, j: usize) -> Result<isize, MatrixError> {
        self.check_pair(i, j)?;
        let ib = i * self.words_per_row;
        let jb = j * self.words_per_row;
        let mut delta = 0isize;
        for w in 0..self.words_per_row {
            let old = self.data[jb + w];
            let new = old ^ self.data[ib + w];
            delta += new.count_ones() as isize - old.count_ones() as isize;
            self.data[jb + w] = new;
        }
        self.ones = (self.ones as isize + delta) as usize;
        Ok(delta)
    }

    /// Change in ones that [`row_add`](Self::row_add)`(i, j)` would cause,
    /// without mutating.
    pub fn transition_delta(&self, i: usize, j: usize) -> Result<isize, MatrixError> {
        self.check_pair(i, j)?;
        let ib = i * self.words_per_row;
        let jb = j * self.words_per_row;
        let mut delta = 0isize;
        for w in 0..self.words_per_row {
            let old = self.data[jb + w];
            let new = old ^ self.data[ib + w];
            delta += new.count_ones() as isize - old.count_ones() as isize;
        }
        Ok(delta)
    }

    /// Row-echelon basis of the row space.
    pub fn row_basis(&self) -> RowBasis {
        let mut basis = RowBasis::new(self.cols);
        for i in 0..self.rows {
            basis.insert(self.row(i));
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.row_basis().rank()
    }

    pub fn is_full_row_rank(&self) -> bool {
        self.rank() == self.rows
    }

    /// True iff both matrices check the same code (equal row spaces).
    pub fn same_code(&self, other: &BinaryMatrix) -> Result<bool, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let ours = self.row_basis();
        if ours.rank() != other.rank() {
            return Ok(false);
        }
        Ok((0..other.rows).all(|i| ours.contains(other.row(i))))
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} ({} ones)", self.rows, self.cols, self.ones)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
