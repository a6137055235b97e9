use std::time::Instant;

use rand::Rng;

use crate::batch::{pack_batch, WordBatch, BATCH_WIDTH};
use crate::check_batch;
use crate::sparse::SparseRows;

/// Timing of [`check_batch`](crate::check_batch) over random words.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchResult {
    /// Ones in the matrix being checked against.
    pub ones: usize,
    /// Words checked per timed repetition.
    pub words: usize,
    /// Median-of-repetitions mean time per word, in nanoseconds.
    pub mean_ns_per_word: f64,
}

const REPETITIONS: usize = 5;

/// Times checking `word_count` random words against the matrix.
///
/// One warm-up pass, then the median of 5 timed repetitions over the same
/// batches on a monotonic clock; checking time has high variance, so a
/// single pass is not trusted. Returns `None` when `word_count` is zero.
///
/// # Panics
/// `word_count` must be a multiple of 64.
pub fn bench_check<R: Rng + ?Sized>(
    rows: &SparseRows,
    word_count: usize,
    rng: &mut R,
) -> Option<BenchResult> {
    assert_eq!(word_count % BATCH_WIDTH, 0, "word count must be a multiple of 64");
    if word_count == 0 {
        return None;
    }
    let n = rows.cols();
    let batches: Vec<WordBatch> = (0..word_count / BATCH_WIDTH)
        .map(|_| {
            let words: Vec<Vec<bool>> = (0..BATCH_WIDTH)
                .map(|_| (0..n).map(|_| rng.gen_bool(0.5)).collect())
                .collect();
            pack_batch(&words).expect("uniform length")
        })
        .collect();

    let run = || {
        let start = Instant::now();
        let mut sink = 0u64;
        for batch in &batches {
            let syndromes = check_batch(rows, batch).expect("matching width");
            sink ^= syndromes.words().iter().fold(0, |a, w| a ^ w);
        }
        std::hint::black_box(sink);
        start.elapsed().as_secs_f64()
    };

    run(); // warm-up
    let mut times: Vec<f64> = (0..REPETITIONS).map(|_| run()).collect();
    times.sort_by(|a, b| a.total_cmp(b));
    let median = times[REPETITIONS / 2];

    Some(BenchResult {
        ones: rows.ones(),
        words: word_count,
        mean_ns_per_word: median * 1e9 / word_count as f64,
    })
}
