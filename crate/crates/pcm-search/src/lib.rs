//! Sparsification of parity-check matrices by row additions.
//!
//! The search state is a [`pcm_core::BinaryMatrix`]; moves add one row into
//! another, which never changes the code. [`greedy`] only takes improving
//! moves; [`anneal`] runs Metropolis acceptance under a geometric cooling
//! [`Schedule`]. Temperatures are specified as [`TemperatureSpec`] pairs
//! `(f, p)`: accept an uphill step of `f * N` ones with probability `p`.

mod engine;
mod error;
mod flags;
mod replicas;
mod temperature;
mod trace;

pub use engine::{accept, analyze, anneal, apply_transition, greedy, SearchReport, TransitionProposal};
pub use error::SearchError;
pub use flags::DirtyFlags;
pub use replicas::{best_replica, replica_seed, run_replicas};
pub use temperature::{
    probability_for, temperature_for, Schedule, TemperatureSpec, DEFAULT_ITERS_PER_TEMP,
};
pub use trace::{trace_from_csv, trace_to_csv, RunTrace, TraceConfig, TraceSample};
