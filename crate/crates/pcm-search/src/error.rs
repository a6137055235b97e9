use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SearchError {
    /// f must be positive and p strictly inside (0, 1).
    InvalidTemperatureSpec { f: f64, p: f64 },
    /// The start temperature is below the finish temperature, so the
    /// schedule would heat instead of cool.
    NonCooling { start: f64, finish: f64 },
    InvalidSchedule(String),
    /// Proposals need at least two rows.
    TooFewRows(usize),
    /// The proposal's delta no longer matches the matrix it is applied to.
    StaleProposal { expected: isize, actual: isize },
    /// Search refuses matrices with dependent rows: a dependent row could
    /// be zeroed out, silently shrinking the matrix.
    RankDeficientInput { rank: usize, rows: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::InvalidTemperatureSpec { f: frac, p } => {
                write!(f, "invalid temperature spec: f={frac}, p={p} (need f > 0, 0 < p < 1)")
            }
            SearchError::NonCooling { start, finish } => {
                write!(f, "non-cooling schedule: T0={start} < F={finish}")
            }
            SearchError::InvalidSchedule(msg) => write!(f, "invalid schedule: {msg}"),
            SearchError::TooFewRows(m) => write!(f, "need at least 2 rows, matrix has {m}"),
            SearchError::StaleProposal { expected, actual } => {
                write!(f, "stale proposal: delta was {expected}, matrix now gives {actual}")
            }
            SearchError::RankDeficientInput { rank, rows } => {
                write!(f, "input matrix has rank {rank} < {rows} rows")
            }
        }
    }
}

impl std::error::Error for SearchError {}
