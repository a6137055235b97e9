use std::time::{Duration, Instant};

use pcm_core::BinaryMatrix;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::SearchError;
use crate::flags::DirtyFlags;
use crate::temperature::Schedule;
use crate::trace::{RunTrace, TraceConfig, TraceSample};

/// A proposed row addition: origin `i` into destination `j`, changing the
/// number of ones by `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitionProposal {
    pub origin: usize,
    pub dest: usize,
    pub delta: isize,
}

/// Metropolis test with the exact integer rewrite: draw `R` uniform in
/// `[1, 2^30]` and accept iff `d <= T * (30 ln 2 - ln R)`, which is the
/// comparison of `R / 2^30` against `e^(-d/T)` without the division.
/// Downhill and flat moves are always accepted.
pub fn accept<R: Rng + ?Sized>(delta: isize, temperature: f64, rng: &mut R) -> bool {
    if delta <= 0 {
        return true;
    }
    let r = rng.gen_range(1u64..=1 << 30);
    delta as f64 <= temperature * (30.0 * std::f64::consts::LN_2 - (r as f64).ln())
}

/// Picks the next transition to consider.
///
/// With no dirty rows this is a uniform random ordered pair. Otherwise a
/// uniformly chosen dirty row `i` is tested against all other rows `j` in a
/// fresh random permutation, scoring both adding `i` into `j` and `j` into
/// `i`; the first improving `j` wins, with the smaller delta choosing the
/// orientation. If nothing improves, `i` is certified clean and a random
/// pair is returned instead.
///
/// Never mutates the matrix; only the clean certification touches `flags`.
pub fn analyze<R: Rng + ?Sized>(
    h: &BinaryMatrix,
    flags: &mut DirtyFlags,
    rng: &mut R,
) -> Result<TransitionProposal, SearchError> {
    let m = h.rows();
    if m < 2 {
        return Err(SearchError::TooFewRows(m));
    }
    debug_assert_eq!(flags.len(), m);

    if flags.dirty_count() > 0 {
        let i = flags.nth_dirty(rng.gen_range(0..flags.dirty_count()));
        let mut others: Vec<usize> = (0..m).filter(|&j| j != i).collect();
        others.shuffle(rng);
        for &j in &others {
            let fwd = h.transition_delta(i, j).expect("i != j");
            let rev = h.transition_delta(j, i).expect("i != j");
            if fwd.min(rev) < 0 {
                // ties keep i as the origin
                return Ok(if rev < fwd {
                    TransitionProposal { origin: j, dest: i, delta: rev }
                } else {
                    TransitionProposal { origin: i, dest: j, delta: fwd }
                });
            }
        }
        flags.set_clean(i);
    }

    let i = rng.gen_range(0..m);
    let mut j = rng.gen_range(0..m - 1);
    if j >= i {
        j += 1;
    }
    let delta = h.transition_delta(i, j).expect("i != j");
    Ok(TransitionProposal { origin: i, dest: j, delta })
}

/// Performs the proposed addition and re-dirties the destination row.
/// The origin row keeps whatever flag it had.
pub fn apply_transition(
    h: &mut BinaryMatrix,
    flags: &mut DirtyFlags,
    proposal: &TransitionProposal,
) -> Result<(), SearchError> {
    let actual = h
        .transition_delta(proposal.origin, proposal.dest)
        .expect("proposal rows are distinct and in range");
    if actual != proposal.delta {
        return Err(SearchError::StaleProposal {
            expected: proposal.delta,
            actual,
        });
    }
    h.row_add(proposal.origin, proposal.dest).expect("checked above");
    flags.set_dirty(proposal.dest);
    Ok(())
}

/// Outcome of a search run. `best_matrix` is the lowest-energy matrix ever
/// visited, which may differ from the state the run ended in.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub best_matrix: BinaryMatrix,
    pub final_matrix: BinaryMatrix,
    pub best_energy: usize,
    pub initial_energy: usize,
    pub iterations: u64,
    pub elapsed: Duration,
    pub trace: RunTrace,
    pub seed: u64,
}

fn require_full_rank(h: &BinaryMatrix) -> Result<(), SearchError> {
    let rank = h.rank();
    if rank != h.rows() {
        return Err(SearchError::RankDeficientInput {
            rank,
            rows: h.rows(),
        });
    }
    Ok(())
}

/// Simulated annealing from `T0` down to `F`.
///
/// Runs `schedule.plateaus()` temperature plateaus of
/// `iters_per_temp` iterations; each iteration proposes, Metropolis-tests
/// and (on acceptance) applies one row addition. All rows start dirty.
pub fn anneal(
    h: &BinaryMatrix,
    schedule: &Schedule,
    seed: u64,
    trace_config: &TraceConfig,
) -> Result<SearchReport, SearchError> {
    require_full_rank(h)?;
    if h.rows() < 2 {
        return Err(SearchError::TooFewRows(h.rows()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = h.clone();
    let mut flags = DirtyFlags::all_dirty(h.rows());
    let mut best = state.clone();
    let mut best_energy = state.ones();
    let initial_energy = state.ones();
    let mut iterations = 0u64;
    let mut trace = RunTrace {
        samples: Vec::new(),
        sample_interval: trace_config.plateau_interval * schedule.iters_per_temp(),
    };

    for plateau in 0..schedule.plateaus() {
        let temperature = schedule.temperature_at(plateau);
        for _ in 0..schedule.iters_per_temp() {
            iterations += 1;
            let proposal = analyze(&state, &mut flags, &mut rng)?;
            if accept(proposal.delta, temperature, &mut rng) {
                apply_transition(&mut state, &mut flags, &proposal)?;
                if state.ones() < best_energy {
                    best = state.clone();
                    best_energy = state.ones();
                    if trace_config.enabled && trace_config.record_improvements {
                        trace.samples.push(TraceSample {
                            elapsed_s: start.elapsed().as_secs_f64(),
                            energy: best_energy,
                            temperature,
                        });
                    }
                }
            }
        }
        if trace_config.enabled
            && trace_config.plateau_interval > 0
            && plateau % trace_config.plateau_interval == 0
        {
            trace.samples.push(TraceSample {
                elapsed_s: start.elapsed().as_secs_f64(),
                energy: state.ones(),
                temperature,
            });
        }
    }

    Ok(SearchReport {
        best_energy,
        initial_energy,
        best_matrix: best,
        final_matrix: state,
        iterations,
        elapsed: start.elapsed(),
        trace,
        seed,
    })
}

/// Greedy local search: additions are applied only if they do not increase
/// the ones count. Zero-delta moves let the walk drift across plateaus,
/// which regularly uncovers strictly improving moves that no single
/// addition could reach.
///
/// Terminates once every row is certified clean and `max_stall`
/// consecutive proposals produced no strict improvement. Passing
/// `max_stall = 0` uses the default of `10 * m`.
pub fn greedy(
    h: &BinaryMatrix,
    max_stall: usize,
    seed: u64,
    trace_config: &TraceConfig,
) -> Result<SearchReport, SearchError> {
    require_full_rank(h)?;
    if h.rows() < 2 {
        return Err(SearchError::TooFewRows(h.rows()));
    }
    let max_stall = if max_stall == 0 { 10 * h.rows() } else { max_stall };
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = h.clone();
    let mut flags = DirtyFlags::all_dirty(h.rows());
    let initial_energy = state.ones();
    let mut iterations = 0u64;
    let mut stall = 0usize;
    let sample_interval = trace_config.plateau_interval * 100;
    let mut trace = RunTrace {
        samples: Vec::new(),
        sample_interval,
    };

    loop {
        iterations += 1;
        let proposal = analyze(&state, &mut flags, &mut rng)?;
        if proposal.delta < 0 {
            apply_transition(&mut state, &mut flags, &proposal)?;
            stall = 0;
            if trace_config.enabled && trace_config.record_improvements {
                trace.samples.push(TraceSample {
                    elapsed_s: start.elapsed().as_secs_f64(),
                    energy: state.ones(),
                    temperature: 0.0,
                });
            }
        } else {
            if proposal.delta == 0 {
                apply_transition(&mut state, &mut flags, &proposal)?;
            }
            stall += 1;
            if stall >= max_stall && flags.dirty_count() == 0 {
                break;
            }
        }
        if trace_config.enabled
            && sample_interval > 0
            && iterations % sample_interval as u64 == 0
        {
            trace.samples.push(TraceSample {
                elapsed_s: start.elapsed().as_secs_f64(),
                energy: state.ones(),
                temperature: 0.0,
            });
        }
    }

    let best_energy = state.ones();
    Ok(SearchReport {
        best_matrix: state.clone(),
        final_matrix: state,
        best_energy,
        initial_energy,
        iterations,
        elapsed: start.elapsed(),
        trace,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temperature::TemperatureSpec;

    fn bch_15_7() -> BinaryMatrix {
        BinaryMatrix::from_bit_strings(&[
            "101110011000000",
            "011010001000000",
            "001101000100000",
            "000110100010000",
            "000011010001000",
            "000001101000100",
            "000000110100010",
            "000000011010001",
        ])
    }

    #[test]
    fn accept_always_takes_downhill_and_flat() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            assert!(accept(0, 0.001, &mut rng));
            assert!(accept(-3, 0.001, &mut rng));
        }
    }

    #[test]
    fn accept_rate_matches_boltzmann_factor() {
        // d=2 at the temperature anchored to 4% acceptance of d=2
        let t = crate::temperature::temperature_for(2.0, 0.04);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let trials = 1_000_000;
        let hits = (0..trials).filter(|_| accept(2, t, &mut rng)).count();
        let rate = hits as f64 / trials as f64;
        assert!((rate - 0.04).abs() < 0.005, "rate = {rate}");
    }

    #[test]
    fn analyze_finds_the_worked_example_move() {
        let h = bch_15_7();
        let flags = DirtyFlags::all_dirty(8);
        // try seeds until row 1 is the chosen dirty origin; the proposal
        // must then be the 34 -> 32 move into row 0
        for seed in 0..200 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut f = flags.clone();
            let p = analyze(&h, &mut f, &mut rng).unwrap();
            if p.delta < 0 {
                // the only improving addition in this matrix is row 1 into row 0
                assert_eq!((p.origin, p.dest, p.delta), (1, 0, -2));
                return;
            }
        }
        panic!("no seed produced the improving move");
    }

    #[test]
    fn optimal_matrix_goes_all_clean() {
        let mut h = bch_15_7();
        h.row_add(1, 0).unwrap(); // 32 ones, the optimum
        let mut flags = DirtyFlags::all_dirty(8);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // every analyze on the optimal matrix either cleans a row or
        // returns a non-improving random pair
        for _ in 0..200 {
            if flags.dirty_count() == 0 {
                break;
            }
            let p = analyze(&h, &mut flags, &mut rng).unwrap();
            assert!(p.delta >= 0, "no improving move exists at the optimum");
        }
        assert_eq!(flags.dirty_count(), 0);
    }

    #[test]
    fn apply_rejects_stale_proposals() {
        let mut h = bch_15_7();
        let mut flags = DirtyFlags::all_dirty(8);
        let proposal = TransitionProposal {
            origin: 1,
            dest: 0,
            delta: -2,
        };
        h.row_add(2, 0).unwrap(); // invalidates the proposal
        let err = apply_transition(&mut h, &mut flags, &proposal).unwrap_err();
        assert!(matches!(err, SearchError::StaleProposal { .. }));
    }

    #[test]
    fn apply_dirties_destination_only() {
        let mut h = bch_15_7();
        let mut flags = DirtyFlags::all_dirty(8);
        for i in 0..8 {
            flags.set_clean(i);
        }
        let proposal = TransitionProposal {
            origin: 1,
            dest: 0,
            delta: h.transition_delta(1, 0).unwrap(),
        };
        apply_transition(&mut h, &mut flags, &proposal).unwrap();
        assert!(flags.is_dirty(0));
        assert!(!flags.is_dirty(1));
        assert_eq!(flags.dirty_count(), 1);
    }

    #[test]
    fn greedy_solves_the_worked_example() {
        let h = bch_15_7();
        let report = greedy(&h, 0, 11, &TraceConfig::disabled()).unwrap();
        assert_eq!(report.best_energy, 32);
        assert_eq!(report.initial_energy, 34);
        assert!(h.same_code(&report.best_matrix).unwrap());
    }

    #[test]
    fn greedy_on_optimum_returns_input_energy() {
        let mut h = bch_15_7();
        h.row_add(1, 0).unwrap();
        let report = greedy(&h, 0, 5, &TraceConfig::disabled()).unwrap();
        assert_eq!(report.best_energy, 32);
        assert_eq!(report.best_matrix, h);
    }

    #[test]
    fn anneal_solves_the_worked_example() {
        let h = bch_15_7();
        let start = TemperatureSpec::new(0.05, 0.01).unwrap();
        let finish = TemperatureSpec::new(0.01, 0.01).unwrap();
        let schedule = Schedule::new(start, finish, 15, 200, 100).unwrap();
        let report = anneal(&h, &schedule, 17, &TraceConfig::default()).unwrap();
        assert_eq!(report.best_energy, 32);
        assert!(h.same_code(&report.best_matrix).unwrap());
        assert_eq!(report.iterations, 201 * 100);
    }

    #[test]
    fn constant_temperature_schedule_runs() {
        let h = bch_15_7();
        let schedule = Schedule::from_temperatures(0.5, 0.5, 1, 100).unwrap();
        let report = anneal(&h, &schedule, 1, &TraceConfig::disabled()).unwrap();
        assert_eq!(report.iterations, 100);
        assert!(report.best_energy <= 34);
    }

    #[test]
    fn rank_deficient_inputs_are_refused() {
        let h = BinaryMatrix::from_bit_strings(&["1100", "0110", "1010"]);
        let schedule = Schedule::from_temperatures(1.0, 0.5, 10, 10).unwrap();
        assert!(matches!(
            anneal(&h, &schedule, 0, &TraceConfig::disabled()),
            Err(SearchError::RankDeficientInput { rank: 2, rows: 3 })
        ));
        assert!(matches!(
            greedy(&h, 0, 0, &TraceConfig::disabled()),
            Err(SearchError::RankDeficientInput { .. })
        ));
    }

    #[test]
    fn identical_seeds_are_deterministic() {
        let h = bch_15_7();
        let schedule = Schedule::from_temperatures(0.62, 0.31, 50, 100).unwrap();
        let a = anneal(&h, &schedule, 99, &TraceConfig::disabled()).unwrap();
        let b = anneal(&h, &schedule, 99, &TraceConfig::disabled()).unwrap();
        assert_eq!(a.best_matrix, b.best_matrix);
        assert_eq!(a.final_matrix, b.final_matrix);
        assert_eq!(a.best_energy, b.best_energy);
        assert_eq!(a.iterations, b.iterations);
    }
}
