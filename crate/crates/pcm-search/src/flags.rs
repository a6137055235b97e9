/// One dirty bit per row, with a cached count of dirty rows.
///
/// A clean row has been certified to admit no improving single addition in
/// either orientation; rows start dirty and are re-dirtied whenever they
/// receive an addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirtyFlags {
    words: Vec<u64>,
    len: usize,
    dirty: usize,
}

impl DirtyFlags {
    pub fn all_dirty(len: usize) -> Self {
        let mut words = vec![u64::MAX; len.div_ceil(64)];
        if len % 64 != 0 {
            *words.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
        }
        DirtyFlags {
            words,
            len,
            dirty: len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dirty_count(&self) -> usize {
        self.dirty
    }

    pub fn is_dirty(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set_dirty(&mut self, i: usize) {
        assert!(i < self.len);
        if !self.is_dirty(i) {
            self.words[i / 64] |= 1 << (i % 64);
            self.dirty += 1;
        }
    }

    pub fn set_clean(&mut self, i: usize) {
        assert!(i < self.len);
        if self.is_dirty(i) {
            self.words[i / 64] &= !(1 << (i % 64));
            self.dirty -= 1;
        }
    }

    /// Row index of the `k`-th dirty row (0-based among dirty rows).
    pub fn nth_dirty(&self, k: usize) -> usize {
        assert!(k < self.dirty);
        let mut remaining = k;
        for (w, &word) in self.words.iter().enumerate() {
            let count = word.count_ones() as usize;
            if remaining < count {
                let mut bits = word;
                for _ in 0..remaining {
                    bits &= bits - 1;
                }
                return w * 64 + bits.trailing_zeros() as usize;
            }
            remaining -= count;
        }
        unreachable!("dirty count out of sync");
    }
}
