/// One sampled point of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample {
    pub elapsed_s: f64,
    pub energy: usize,
    pub temperature: f64,
}

/// Timestamped (elapsed, energy, temperature) samples of a run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunTrace {
    pub samples: Vec<TraceSample>,
    /// Iterations between periodic samples (0 when periodic sampling is off).
    pub sample_interval: usize,
}

/// What to sample: every `plateau_interval` plateaus plus, optionally,
/// every energy improvement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceConfig {
    pub enabled: bool,
    /// 0 disables periodic plateau sampling.
    pub plateau_interval: usize,
    pub record_improvements: bool,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig {
            enabled: true,
            plateau_interval: 1,
            record_improvements: true,
        }
    }
}

impl TraceConfig {
    pub fn disabled() -> Self {
        TraceConfig {
            enabled: false,
            plateau_interval: 0,
            record_improvements: false,
        }
    }
}

/// Renders a trace as CSV with a fixed header and 6 significant digits.
pub fn trace_to_csv(trace: &RunTrace) -> String {
    let mut out = String::from("elapsed_s,energy,temperature\n");
    for s in &trace.samples {
        out.push_str(&format!(
            "{},{},{}\n",
            sig6(s.elapsed_s),
            s.energy,
            sig6(s.temperature)
        ));
    }
    out
}

/// Parses text produced by [`trace_to_csv`].
pub fn trace_from_csv(text: &str) -> Option<RunTrace> {
    let mut lines = text.lines();
    if lines.next()? != "elapsed_s,energy,temperature" {
        return None;
    }
    let mut samples = Vec::new();
    for line in lines {
        let mut parts = line.split(',');
        let sample = TraceSample {
            elapsed_s: parts.next()?.parse().ok()?,
            energy: parts.next()?.parse().ok()?,
            temperature: parts.next()?.parse().ok()?,
        };
        if parts.next().is_some() {
            return None;
        }
        samples.push(sample);
    }
    Some(RunTrace {
        samples,
        sample_interval: 0,
    })
}

/// Plain decimal with 6 significant digits.
fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
