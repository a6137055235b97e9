use crate::error::SearchError;

/// A temperature given as the uphill step `d` accepted with probability `p`.
///
/// Solving `p = e^(-d/T)` for the boundary case gives `T = -d / ln p`.
pub fn temperature_for(d: f64, p: f64) -> f64 {
    -d / p.ln()
}

/// Acceptance probability the temperature defined by `(d1, p1)` assigns to
/// an uphill step `d2`: `p2 = p1^(d2/d1)`.
pub fn probability_for(d1: f64, p1: f64, d2: f64) -> f64 {
    p1.powf(d2 / d1)
}

/// A temperature specified as a column fraction `f` and probability `p`.
///
/// The uphill step the temperature is anchored to scales with the matrix:
/// `d = f * N` where `N` is the column count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureSpec {
    f: f64,
    p: f64,
}

impl TemperatureSpec {
    pub fn new(f: f64, p: f64) -> Result<Self, SearchError> {
        if !(f > 0.0) || !(p > 0.0 && p < 1.0) {
            return Err(SearchError::InvalidTemperatureSpec { f, p });
        }
        Ok(TemperatureSpec { f, p })
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn delta(&self, cols: usize) -> f64 {
        self.f * cols as f64
    }

    pub fn temperature(&self, cols: usize) -> f64 {
        temperature_for(self.delta(cols), self.p)
    }

    /// Probability of accepting an uphill delta `d2` at this temperature.
    pub fn probability_at(&self, cols: usize, d2: f64) -> f64 {
        probability_for(self.delta(cols), self.p, d2)
    }
}

/// Geometric cooling plan: `steps + 1` plateaus of `iters_per_temp`
/// iterations each, from `t0` down to `t_final` with factor
/// `alpha = (F/T0)^(1/s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schedule {
    t0: f64,
    t_final: f64,
    steps: usize,
    iters_per_temp: usize,
}

/// Iterations per plateau used throughout.
pub const DEFAULT_ITERS_PER_TEMP: usize = 100;

impl Schedule {
    pub fn new(
        start: TemperatureSpec,
        finish: TemperatureSpec,
        cols: usize,
        steps: usize,
        iters_per_temp: usize,
    ) -> Result<Self, SearchError> {
        Self::from_temperatures(
            start.temperature(cols),
            finish.temperature(cols),
            steps,
            iters_per_temp,
        )
    }

    /// Raw-temperature constructor; the `(f, p)` form is preferred.
    pub fn from_temperatures(
        t0: f64,
        t_final: f64,
        steps: usize,
        iters_per_temp: usize,
    ) -> Result<Self, SearchError> {
        if !(t_final > 0.0) || !t0.is_finite() {
            return Err(SearchError::InvalidSchedule(format!(
                "temperatures must be positive and finite, got T0={t0}, F={t_final}"
            )));
        }
        if t0 < t_final {
            return Err(SearchError::NonCooling {
                start: t0,
                finish: t_final,
            });
        }
        if steps < 1 {
            return Err(SearchError::InvalidSchedule("steps must be >= 1".into()));
        }
        if iters_per_temp < 1 {
            return Err(SearchError::InvalidSchedule(
                "iters_per_temp must be >= 1".into(),
            ));
        }
        Ok(Schedule {
            t0,
            t_final,
            steps,
            iters_per_temp,
        })
    }

    pub fn start_temperature(&self) -> f64 {
        self.t0
    }

    pub fn finish_temperature(&self) -> f64 {
        self.t_final
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn iters_per_temp(&self) -> usize {
        self.iters_per_temp
    }

    pub fn alpha(&self) -> f64 {
        (self.t_final / self.t0).powf(1.0 / self.steps as f64)
    }

    /// Number of plateaus executed: one per step plus the final one at `F`.
    ///
    /// The constant-temperature schedule (`T0 = F`) runs a single plateau.
    pub fn plateaus(&self) -> usize {
        if self.t0 == self.t_final {
            1
        } else {
            self.steps + 1
        }
    }

    /// Temperature of plateau `t` (0-based): `T0 * alpha^t`.
    pub fn temperature_at(&self, plateau: usize) -> f64 {
        self.t0 * self.alpha().powi(plateau as i32)
    }
}
