//! Outcome bookkeeping for the acceptance suite in `tests/acceptance.rs`.

use std::fmt;
use std::time::Duration;

/// Result of one numbered criterion.
#[derive(Debug)]
pub struct Outcome {
    pub number: u32,
    pub title: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} [{:.2?}] {}",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed,
            self.detail
        )
    }
}
