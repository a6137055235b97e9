use crate::LengthMismatch;

/// Logical lanes per batch, fixed regardless of the native word size.
pub const BATCH_WIDTH: usize = 64;

/// Up to 64 received words, bit-transposed: lane `j` holds symbol `y_j`
/// of every word, word `b` in bit `b`. Slots past `count` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordBatch {
    lanes: Vec<u64>,
    count: usize,
}

impl WordBatch {
    pub fn lanes(&self) -> &[u64] {
        &self.lanes
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// Packs up to 64 equal-length words into the transposed layout.
pub fn pack_batch(words: &[Vec<bool>]) -> Result<WordBatch, LengthMismatch> {
    assert!(words.len() <= BATCH_WIDTH, "a batch holds at most 64 words");
    assert!(!words.is_empty(), "empty batch");
    let n = words[0].len();
    let mut lanes = vec![0u64; n];
    for (b, word) in words.iter().enumerate() {
        if word.len() != n {
            return Err(LengthMismatch {
                expected: n,
                actual: word.len(),
            });
        }
        for (j, &bit) in word.iter().enumerate() {
            if bit {
                lanes[j] |= 1 << b;
            }
        }
    }
    Ok(WordBatch {
        lanes,
        count: words.len(),
    })
}

/// Inverse of [`pack_batch`], recovering the `count` packed words.
pub fn unpack_batch(batch: &WordBatch) -> Vec<Vec<bool>> {
    (0..batch.count)
        .map(|b| batch.lanes.iter().map(|lane| lane >> b & 1 == 1).collect())
        .collect()
}

/// Syndromes for a whole batch: word `i`, bit `b` is syndrome component
/// `v_i` of received word `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeBatch {
    words: Vec<u64>,
    count: usize,
    xor_ops: usize,
}

impl SyndromeBatch {
    pub(crate) fn new(words: Vec<u64>, count: usize, xor_ops: usize) -> Self {
        SyndromeBatch {
            words,
            count,
            xor_ops,
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Lane XORs performed to produce this batch; equals the matrix ones.
    pub fn xor_ops(&self) -> usize {
        self.xor_ops
    }

    /// True iff received word `b` is a codeword.
    pub fn is_codeword(&self, b: usize) -> bool {
        assert!(b < self.count);
        self.words.iter().all(|w| w >> b & 1 == 0)
    }

    /// Syndrome bits of received word `b`.
    pub fn syndrome(&self, b: usize) -> Vec<bool> {
        assert!(b < self.count);
        self.words.iter().map(|w| w >> b & 1 == 1).collect()
    }
}
