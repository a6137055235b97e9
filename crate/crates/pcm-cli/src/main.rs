//! `pcm` — parity-check matrix sparsification workbench.
//!
//! Subcommands: `stats` (matrix facts), `sparsify` (greedy or annealed
//! ones-minimization), `oracle` (exact minimum for small codes), `check`
//! (syndrome-check a file of words), `bench` (checking throughput).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;

use pcm_core::{parse_alist, write_alist, BinaryMatrix};
use pcm_oracle::{min_weight_basis, OracleError, DEFAULT_BUDGET};
use pcm_search::{
    anneal, best_replica, greedy, run_replicas, trace_to_csv, Schedule, SearchError, SearchReport,
    TemperatureSpec, TraceConfig, DEFAULT_ITERS_PER_TEMP,
};

mod report;
mod words;

use report::Summary;

const EXIT_INTERNAL: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_BAD_CONFIG: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "pcm", version, about = "Sparsify and check binary parity-check matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dimensions, ones and rank of an alist matrix.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
    /// Minimize ones by row additions; writes the best matrix found.
    Sparsify(SparsifyArgs),
    /// Exact minimum ones over all equivalent matrices (small m only).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Where to write the minimal witness matrix (alist).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Largest row count the enumeration accepts.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Syndrome-check words (one ASCII 0/1 row per line) against a matrix.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// File of words to check.
        #[arg(long)]
        words: PathBuf,
    },
    /// Time batch syndrome checking over random words.
    Bench {
        #[arg(long)]
        input: PathBuf,
        /// How many words to check per repetition (multiple of 64).
        #[arg(long)]
        words: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Greedy,
    Anneal,
}

#[derive(Args)]
struct SparsifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Where to write the sparsified matrix (alist).
    #[arg(long)]
    output: PathBuf,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Start temperature: fraction of n accepted with probability --p0.
    #[arg(long)]
    f0: Option<f64>,
    #[arg(long)]
    p0: Option<f64>,
    /// Finish temperature: fraction of n accepted with probability --p1.
    #[arg(long)]
    f1: Option<f64>,
    #[arg(long)]
    p1: Option<f64>,
    /// Raw start temperature, overriding --f0/--p0.
    #[arg(long, conflicts_with_all = ["f0", "p0"])]
    t0: Option<f64>,
    /// Raw finish temperature, overriding --f1/--p1.
    #[arg(long, conflicts_with_all = ["f1", "p1"])]
    t_final: Option<f64>,
    /// Cooling steps between start and finish temperature.
    #[arg(long)]
    steps: Option<usize>,
    /// Iterations per temperature plateau.
    #[arg(long, default_value_t = DEFAULT_ITERS_PER_TEMP)]
    iters: usize,
    /// Independent restarts; the best result wins.
    #[arg(long, default_value_t = 1)]
    replicas: usize,
    /// Base seed; omitted means a fresh one, echoed in the summary.
    #[arg(long)]
    seed: Option<u64>,
    /// Trace CSV path; replica index is inserted before the extension.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Greedy only: random proposals tolerated without improvement.
    #[arg(long, default_value_t = 0)]
    max_stall: usize,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }

    fn config(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_BAD_CONFIG,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::RankDeficientInput { .. } | SearchError::TooFewRows(_) => {
                CliError::input(e.to_string())
            }
            SearchError::InvalidTemperatureSpec { .. }
            | SearchError::NonCooling { .. }
            | SearchError::InvalidSchedule(_) => CliError::config(e.to_string()),
            other => CliError::internal(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => CliError {
                code: EXIT_BUDGET,
                message: e.to_string(),
            },
            OracleError::RankDeficientInput { .. } => CliError::input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pcm: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Stats { input } => {
            let h = load_matrix(&input)?;
            println!("m={} n={} ones={} rank={}", h.rows(), h.cols(), h.ones(), h.rank());
            Ok(())
        }
        Command::Sparsify(args) => sparsify(args),
        Command::Oracle {
            input,
            output,
            budget,
        } => {
            let h = load_matrix(&input)?;
            let result = min_weight_basis(&h, budget)?;
            if let Some(path) = output {
                write_output(&path, &write_alist(&result.witness))?;
            }
            println!(
                "min_ones={} m={} n={}",
                result.min_total_ones,
                h.rows(),
                h.cols()
            );
            Ok(())
        }
        Command::Check { input, words } => {
            let h = load_matrix(&input)?;
            let text = std::fs::read_to_string(&words)
                .map_err(|e| CliError::input(format!("{}: {e}", words.display())))?;
            let outcome = words::check_words_text(&h, &text).map_err(CliError::input)?;
            print!("{}", outcome.render());
            Ok(())
        }
        Command::Bench { input, words, seed } => {
            let h = load_matrix(&input)?;
            if words == 0 || words % 64 != 0 {
                return Err(CliError::config(format!(
                    "--words must be a positive multiple of 64, got {words}"
                )));
            }
            let seed = seed.unwrap_or_else(rand::random);
            let rows = pcm_checker::SparseRows::from_matrix(&h);
            let mut rng = StdRng::seed_from_u64(seed);
            let result = pcm_checker::bench_check(&rows, words, &mut rng)
                .expect("word count checked above");
            println!("ones,mean_ns_per_word,words");
            println!("{},{:.4},{}", result.ones, result.mean_ns_per_word, result.words);
            Ok(())
        }
    }
}

fn sparsify(args: SparsifyArgs) -> Result<(), CliError> {
    let h = load_matrix(&args.input)?;
    if args.replicas < 1 {
        return Err(CliError::config("--replicas must be at least 1"));
    }
    let seed = args.seed.unwrap_or_else(rand::random);
    let threads = thread_count(args.replicas)?;

    let schedule = match args.mode {
        Mode::Anneal => Some(build_schedule(&args, h.cols())?),
        Mode::Greedy => None,
    };

    let trace_config = if args.trace.is_some() {
        TraceConfig::default()
    } else {
        TraceConfig::disabled()
    };

    let reports = run_replicas(args.replicas, seed, threads, |_, replica_seed| {
        match &schedule {
            Some(s) => anneal(&h, s, replica_seed, &trace_config),
            None => greedy(&h, args.max_stall, replica_seed, &trace_config),
        }
    })?;

    let winner = best_replica(&reports);
    let best = &reports[winner];
    write_output(&args.output, &write_alist(&best.best_matrix))?;
    if let Some(trace_path) = &args.trace {
        for (i, report) in reports.iter().enumerate() {
            write_output(&trace_path_for(trace_path, i), &trace_to_csv(&report.trace))?;
        }
    }

    let mut summary = Summary::new();
    summary.push("mode", match args.mode {
        Mode::Greedy => "greedy",
        Mode::Anneal => "anneal",
    });
    summary.push("input", args.input.display());
    summary.push("output", args.output.display());
    summary.push("m", h.rows());
    summary.push("n", h.cols());
    summary.push("initial_ones", best.initial_energy);
    summary.push("replicas", args.replicas);
    summary.push("seed", seed);
    if let Some(s) = &schedule {
        summary.push("t0", format!("{:.4}", s.start_temperature()));
        summary.push("t_final", format!("{:.4}", s.finish_temperature()));
        summary.push("steps", s.steps());
        summary.push("iters_per_temp", s.iters_per_temp());
    }
    for (i, report) in reports.iter().enumerate() {
        summary.push(&format!("replica_{i}_best"), report.best_energy);
    }
    summary.push("best_replica", winner);
    summary.push("best_ones", best.best_energy);
    summary.push(
        "percent_of_initial",
        format!("{:.1}%", percent_of_initial(best)),
    );
    summary.push("wall_time_s", format!("{:.3}", total_wall_time(&reports)));
    print!("{}", summary.render());
    Ok(())
}

fn percent_of_initial(report: &SearchReport) -> f64 {
    100.0 * report.best_energy as f64 / report.initial_energy as f64
}

fn total_wall_time(reports: &[SearchReport]) -> f64 {
    reports
        .iter()
        .map(|r| r.elapsed.as_secs_f64())
        .fold(0.0, f64::max)
}

fn build_schedule(args: &SparsifyArgs, cols: usize) -> Result<Schedule, CliError> {
    let start = match (args.t0, args.f0, args.p0) {
        (Some(t), None, None) => RawOrSpec::Raw(t),
        (None, Some(f), Some(p)) => RawOrSpec::Spec(TemperatureSpec::new(f, p)?),
        _ => {
            return Err(CliError::config(
                "anneal needs a start temperature: --f0 with --p0, or --t0",
            ))
        }
    };
    let finish = match (args.t_final, args.f1, args.p1) {
        (Some(t), None, None) => RawOrSpec::Raw(t),
        (None, Some(f), Some(p)) => RawOrSpec::Spec(TemperatureSpec::new(f, p)?),
        _ => {
            return Err(CliError::config(
                "anneal needs a finish temperature: --f1 with --p1, or --t-final",
            ))
        }
    };
    let steps = args
        .steps
        .ok_or_else(|| CliError::config("anneal needs --steps"))?;
    let schedule = Schedule::from_temperatures(
        start.temperature(cols),
        finish.temperature(cols),
        steps,
        args.iters,
    )?;
    Ok(schedule)
}

enum RawOrSpec {
    Raw(f64),
    Spec(TemperatureSpec),
}

impl RawOrSpec {
    fn temperature(&self, cols: usize) -> f64 {
        match self {
            RawOrSpec::Raw(t) => *t,
            RawOrSpec::Spec(spec) => spec.temperature(cols),
        }
    }
}

fn thread_count(replicas: usize) -> Result<usize, CliError> {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = match std::env::var("PCM_THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::config(format!("PCM_THREADS must be a positive integer, got {v:?}")))?,
        Err(_) => available,
    };
    Ok(cap.min(replicas).max(1))
}

fn load_matrix(path: &Path) -> Result<BinaryMatrix, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let doc = parse_alist(&bytes)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(doc.to_matrix())
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::internal(format!("{}: {e}", path.display())))
}

/// `trace.csv` with replica 2 becomes `trace.r2.csv`.
fn trace_path_for(base: &Path, replica: usize) -> PathBuf {
    let stem = base
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("trace");
    let name = match base.extension().and_then(|s| s.to_str()) {
        Some(ext) => format!("{stem}.r{replica}.{ext}"),
        None => format!("{stem}.r{replica}"),
    };
    base.with_file_name(name)
}
