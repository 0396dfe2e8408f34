//! Runs numbered acceptance criteria and prints one line for each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Line {
    pub number: u32,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {} [{mark}] {}: {} ({:.2?})", self.number, self.title, self.detail, self.elapsed)
    }
}

#[derive(Default)]
pub struct Report {
    pub lines: Vec<Line>,
}

impl Report {
    /// Runs `check`, fails it if it panics or exceeds `limit`, and prints the line.
    pub fn run(&mut self, number: u32, title: &str, limit: Option<Duration>, check: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if let Some(limit) = limit {
            if elapsed > limit {
                passed = false;
                detail = format!("{detail}; over the {limit:?} limit");
            }
        }
        let line = Line { number, title: title.into(), passed, detail, elapsed };
        println!("{line}");
        self.lines.push(line);
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn summary(&self) -> String {
        let passed = self.lines.iter().filter(|l| l.passed).count();
        format!("{passed} of {} criteria pass", self.lines.len())
    }
}
