//! Exact minimum-ones parity-check matrices for small codes.
//!
//! Every alternative PCM of a code is made of independent vectors from the
//! row space of the original (the dual code). Enumerating all `2^m - 1`
//! nonzero dual codewords and greedily picking independent ones by
//! ascending Hamming weight is exact: independent sets of dual codewords
//! form a matroid, so the weight-greedy basis has minimal total weight.

use std::collections::BTreeMap;
use std::fmt;

use pcm_core::{BinaryMatrix, RowBasis};

/// Largest `m` the enumerating oracle accepts by default (`2^24` vectors).
pub const DEFAULT_BUDGET: usize = 24;

/// Hard cap on `m`; the per-vector counters are 32-bit.
const MAX_BUDGET: usize = 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    BudgetExceeded { rows: usize, budget: usize },
    RankDeficientInput { rank: usize, rows: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { rows, budget } => {
                write!(f, "matrix has {rows} rows, above the oracle budget of {budget}")
            }
            OracleError::RankDeficientInput { rank, rows } => {
                write!(f, "matrix has rank {rank} < {rows} rows")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Iterator over all `2^m - 1` nonzero row-space vectors of a full-rank
/// matrix, Gray-code ordered so consecutive vectors differ by one row XOR.
pub struct DualEnumeration {
    rows: Vec<Vec<u64>>,
    acc: Vec<u64>,
    counter: u64,
    total: u64,
}

impl DualEnumeration {
    /// The rows of `h` must be linearly independent for the enumeration to
    /// be duplicate-free.
    pub fn new(h: &BinaryMatrix) -> Self {
        let rows: Vec<Vec<u64>> = (0..h.rows()).map(|i| h.row(i).to_vec()).collect();
        let words = h.words_per_row();
        DualEnumeration {
            rows,
            acc: vec![0; words],
            counter: 0,
            total: (1u64 << h.rows()) - 1,
        }
    }
}

impl Iterator for DualEnumeration {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.counter == self.total {
            return None;
        }
        self.counter += 1;
        let flip = self.counter.trailing_zeros() as usize;
        for (dst, src) in self.acc.iter_mut().zip(&self.rows[flip]) {
            *dst ^= src;
        }
        Some(self.acc.clone())
    }
}

/// An exact sparsest PCM and the dual weight distribution.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub min_total_ones: usize,
    pub witness: BinaryMatrix,
    /// Hamming weight -> number of nonzero dual codewords of that weight.
    pub weight_histogram: BTreeMap<usize, usize>,
}

/// Globally minimal total ones over all PCMs of the code of `h`.
///
/// Enumerates the dual code, buckets vectors by weight, and greedily
/// selects `m` independent vectors by ascending weight (ties broken by
/// enumeration order). Exact by the matroid exchange property.
pub fn min_weight_basis(h: &BinaryMatrix, budget: usize) -> Result<OracleResult, OracleError> {
    let m = h.rows();
    let budget = budget.min(MAX_BUDGET);
    if m > budget {
        return Err(OracleError::BudgetExceeded { rows: m, budget });
    }
    let rank = h.rank();
    if rank != m {
        return Err(OracleError::RankDeficientInput { rank, rows: m });
    }

    let words = h.words_per_row();
    let rows: Vec<&[u64]> = (0..m).map(|i| h.row(i)).collect();

    // pass 1: weights only, bucketed by weight, bucket entries keep the
    // Gray counter so the vector can be rebuilt on demand
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); h.cols() + 1];
    let mut acc = vec![0u64; words];
    for counter in 1..1u64 << m {
        let flip = counter.trailing_zeros() as usize;
        let mut weight = 0usize;
        for (dst, src) in acc.iter_mut().zip(rows[flip]) {
            *dst ^= src;
            weight += dst.count_ones() as usize;
        }
        buckets[weight].push(counter as u32);
    }

    let weight_histogram: BTreeMap<usize, usize> = buckets
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_empty())
        .map(|(w, b)| (w, b.len()))
        .collect();

    // pass 2: weight-ascending greedy independent selection
    let mut basis = RowBasis::new(h.cols());
    let mut witness_rows: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut total = 0usize;
    'outer: for (weight, bucket) in buckets.iter().enumerate() {
        for &counter in bucket {
            let vector = rebuild(&rows, words, counter);
            if basis.insert(&vector) {
                total += weight;
                witness_rows.push(bit_indices(&vector));
                if witness_rows.len() == m {
                    break 'outer;
                }
            }
        }
    }
    debug_assert_eq!(witness_rows.len(), m);

    Ok(OracleResult {
        min_total_ones: total,
        witness: BinaryMatrix::from_rows(h.cols(), &witness_rows),
        weight_histogram,
    })
}

/// Vector for Gray counter `c`: XOR of the rows in subset `c ^ (c >> 1)`.
fn rebuild(rows: &[&[u64]], words: usize, counter: u32) -> Vec<u64> {
    let mut subset = counter ^ (counter >> 1);
    let mut v = vec![0u64; words];
    while subset != 0 {
        let i = subset.trailing_zeros() as usize;
        for (dst, src) in v.iter_mut().zip(rows[i]) {
            *dst ^= src;
        }
        subset &= subset - 1;
    }
    v
}

fn bit_indices(v: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in v.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            out.push(w * 64 + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
    out
}

const EXHAUSTIVE_MAX_ROWS: usize = 12;

/// Independent brute-force check of [`min_weight_basis`] for `m <= 12`:
/// branch-and-bound over all independent `m`-subsets of the weight-sorted
/// dual code.
pub fn exhaustive_min_small(h: &BinaryMatrix) -> Result<usize, OracleError> {
    let m = h.rows();
    if m > EXHAUSTIVE_MAX_ROWS {
        return Err(OracleError::BudgetExceeded {
            rows: m,
            budget: EXHAUSTIVE_MAX_ROWS,
        });
    }
    let rank = h.rank();
    if rank != m {
        return Err(OracleError::RankDeficientInput { rank, rows: m });
    }

    let mut vectors: Vec<(usize, Vec<u64>)> = DualEnumeration::new(h)
        .map(|v| (v.iter().map(|w| w.count_ones() as usize).sum(), v))
        .collect();
    vectors.sort_by_key(|(w, _)| *w);
    let mut prefix = vec![0usize; vectors.len() + 1];
    for (i, (w, _)) in vectors.iter().enumerate() {
        prefix[i + 1] = prefix[i] + w;
    }

    let mut best = usize::MAX;
    let mut stack_basis = RowBasis::new(h.cols());
    search(&vectors, &prefix, 0, 0, m, &mut stack_basis, &mut best);
    Ok(best)
}

fn search(
    vectors: &[(usize, Vec<u64>)],
    prefix: &[usize],
    start: usize,
    total: usize,
    need: usize,
    basis: &mut RowBasis,
    best: &mut usize,
) {
    if need == 0 {
        *best = (*best).min(total);
        return;
    }
    for idx in start..vectors.len() {
        if vectors.len() - idx < need {
            break;
        }
        // weights are sorted, so the next `need` entries bound any choice
        // from this suffix from below
        let bound = total + prefix[idx + need] - prefix[idx];
        if bound >= *best {
            break;
        }
        let (weight, vector) = &vectors[idx];
        if basis.contains(vector) {
            continue;
        }
        let mut extended = basis.clone();
        extended.insert(vector);
        search(
            vectors,
            prefix,
            idx + 1,
            total + weight,
            need - 1,
            &mut extended,
            best,
        );
    }
}
