use crate::error::{Error, Result};
use std::time::{Duration, Instant};

/// Resource caps for the Gröbner engine. Exceeding one is reported as
/// `Error::BudgetExceeded`, never as a mathematical verdict.
#[derive(Clone, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    limit: Option<Duration>,
    max_terms: Option<usize>,
}

/// Environment variable overriding the default time budget, in seconds.
pub const BUDGET_ENV: &str = "PRESMAT_BUDGET_SECS";

impl Default for Budget {
    /// 60 s and 10^6 stored terms, or the seconds given by `PRESMAT_BUDGET_SECS`.
    fn default() -> Self {
        let secs = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|s| *s > 0.0)
            .unwrap_or(60.0);
        Budget::new(Some(Duration::from_secs_f64(secs)), Some(1_000_000))
    }
}

impl Budget {
    pub fn new(limit: Option<Duration>, max_terms: Option<usize>) -> Self {
        Budget { deadline: limit.map(|d| Instant::now() + d), limit, max_terms }
    }

    pub fn unlimited() -> Self {
        Budget::new(None, None)
    }

    pub fn seconds(secs: f64) -> Self {
        Budget::new(Some(Duration::from_secs_f64(secs)), None)
    }

    pub fn with_max_terms(mut self, n: usize) -> Self {
        self.max_terms = Some(n);
        self
    }

    pub fn limit(&self) -> Option<Duration> {
        self.limit
    }

    pub fn check(&self, stage: &str, size: impl FnOnce() -> usize) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExceeded {
                    stage: stage.to_string(),
                    detail: format!("time limit of {:.1}s", self.limit.unwrap_or_default().as_secs_f64()),
                });
            }
        }
        if let Some(max) = self.max_terms {
            let n = size();
            if n > max {
                return Err(Error::BudgetExceeded {
                    stage: stage.to_string(),
                    detail: format!("{n} stored terms exceed the cap of {max}"),
                });
            }
        }
        Ok(())
    }
}
