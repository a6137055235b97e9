use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::engine::SearchReport;
use crate::error::SearchError;

/// Seed for replica `index` derived from `base` (splitmix64 mixing, so
/// adjacent indices give unrelated streams).
pub fn replica_seed(base: u64, index: usize) -> u64 {
    let mut z = base
        .wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(index as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Runs `replicas` independent searches, at most `threads` at a time, and
/// returns the reports in replica order. Each replica owns its matrix and
/// RNG; the only coordination is collecting results at the end.
pub fn run_replicas<F>(
    replicas: usize,
    base_seed: u64,
    threads: usize,
    job: F,
) -> Result<Vec<SearchReport>, SearchError>
where
    F: Fn(usize, u64) -> Result<SearchReport, SearchError> + Sync,
{
    assert!(replicas >= 1);
    let threads = threads.max(1).min(replicas);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<SearchReport, SearchError>>>> =
        Mutex::new((0..replicas).map(|_| None).collect());

    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= replicas {
                    break;
                }
                let outcome = job(index, replica_seed(base_seed, index));
                results.lock().unwrap()[index] = Some(outcome);
            });
        }
    });

    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("every replica ran"))
        .collect()
}

/// Index of the lowest-energy report.
pub fn best_replica(reports: &[SearchReport]) -> usize {
    reports
        .iter()
        .enumerate()
        .min_by_key(|(_, r)| r.best_energy)
        .map(|(i, _)| i)
        .expect("at least one report")
}
