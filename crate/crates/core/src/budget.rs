//! Wall-clock and node-count limits for the long-running searches.
//!
//! Running out of budget never produces a verdict; callers surface it as
//! [`Error::BudgetExceeded`] and report the run as undecided.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Clock checks are amortized over this many ticks.
const CLOCK_STRIDE: u64 = 1024;

#[derive(Debug)]
pub struct Budget {
    start: Instant,
    time_limit: Option<Duration>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            start: Instant::now(),
            time_limit: None,
            node_limit: None,
            nodes: AtomicU64::new(0),
        }
    }

    pub fn seconds(secs: u64) -> Self {
        Budget::unlimited().with_time_limit(Duration::from_secs(secs))
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Counts one unit of work and fails once either limit is exhausted.
    pub fn tick(&self, what: &str) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(limit) = self.node_limit {
            if n > limit {
                return Err(self.exceeded(what));
            }
        }
        if n.is_multiple_of(CLOCK_STRIDE) {
            self.check_time(what)?;
        }
        Ok(())
    }

    /// Time left, if there is a time limit.
    pub fn remaining(&self) -> Option<Duration> {
        self.time_limit.map(|l| l.saturating_sub(self.start.elapsed()))
    }

    /// A fresh budget limited to `fraction` of the time left (unlimited if
    /// this one is).
    pub fn share(&self, fraction: f64) -> Budget {
        let b = Budget::unlimited();
        match self.remaining() {
            Some(left) => b.with_time_limit(left.mul_f64(fraction)),
            None => b,
        }
    }

    pub fn check_time(&self, what: &str) -> Result<()> {
        match self.time_limit {
            Some(limit) if self.start.elapsed() > limit => Err(self.exceeded(what)),
            _ => Ok(()),
        }
    }

    pub(crate) fn exceeded(&self, what: &str) -> Error {
        Error::BudgetExceeded {
            what: what.to_string(),
            elapsed: self.elapsed(),
            nodes: self.nodes(),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_trips() {
        let b = Budget::unlimited().with_node_limit(3);
        assert!(b.tick("x").is_ok());
        assert!(b.tick("x").is_ok());
        assert!(b.tick("x").is_ok());
        let err = b.tick("x").unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn zero_time_limit_trips_on_check() {
        let b = Budget::unlimited().with_time_limit(Duration::ZERO);
        std::thread::sleep(Duration::from_millis(2));
        assert!(b.check_time("x").is_err());
    }
}
