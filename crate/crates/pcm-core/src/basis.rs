use crate::matrix::WORD_BITS;

/// Pivot-reduced basis of a GF(2) row space.
///
/// Each stored vector has a distinct pivot (lowest set bit position) and
/// membership testing reduces against pivots until the candidate is zero
/// or stuck.
#[derive(Debug, Clone)]
pub struct RowBasis {
    cols: usize,
    words: usize,
    // (pivot, packed vector), unordered
    vectors: Vec<(usize, Vec<u64>)>,
}

impl RowBasis {
    pub fn new(cols: usize) -> Self {
        RowBasis {
            cols,
            words: cols.div_ceil(WORD_BITS),
            vectors: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    fn pivot_of(v: &[u64]) -> Option<usize> {
        for (w, &word) in v.iter().enumerate() {
            if word != 0 {
                return Some(w * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    fn reduce(&self, v: &mut [u64]) {
        loop {
            let pivot = match Self::pivot_of(v) {
                Some(p) => p,
                None => return,
            };
            match self.vectors.iter().find(|(p, _)| *p == pivot) {
                Some((_, basis_vec)) => {
                    for (dst, src) in v.iter_mut().zip(basis_vec) {
                        *dst ^= src;
                    }
                }
                None => return,
            }
        }
    }

    /// Adds `row` to the basis; returns false if it was already in the span.
    pub fn insert(&mut self, row: &[u64]) -> bool {
        assert_eq!(row.len(), self.words);
        let mut v = row.to_vec();
        self.reduce(&mut v);
        match Self::pivot_of(&v) {
            Some(pivot) => {
                self.vectors.push((pivot, v));
                true
            }
            None => false,
        }
    }

    /// True iff `row` lies in the span of the basis.
    pub fn contains(&self, row: &[u64]) -> bool {
        assert_eq!(row.len(), self.words);
        let mut v = row.to_vec();
        self.reduce(&mut v);
        Self::pivot_of(&v).is_none()
    }
}
