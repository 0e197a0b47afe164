use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Symbolic,
    NumericFallback,
}

/// Outcome of one verification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub mode: Mode,
    /// Canonical printing of the first nonzero residual, if any.
    pub residual: Option<String>,
    pub details: Vec<String>,
    /// Wall-clock time; kept out of reports so they stay byte-identical.
    #[serde(skip)]
    pub millis: u128,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            mode: Mode::Symbolic,
            residual: None,
            details: Vec::new(),
            millis: 0,
        }
    }

    /// Records a failure; keeps only the first residual.
    pub fn fail(&mut self, what: impl Into<String>, residual: Option<String>) {
        self.passed = false;
        self.details.push(what.into());
        if self.residual.is_none() {
            self.residual = residual;
        }
    }

    pub fn note(&mut self, what: impl Into<String>) {
        self.details.push(what.into());
    }

    /// Runs `f` on a fresh report and stamps the elapsed time.
    pub fn timed<F: FnOnce(&mut CheckReport)>(name: &str, f: F) -> CheckReport {
        let start = Instant::now();
        let mut r = CheckReport::new(name);
        f(&mut r);
        r.millis = start.elapsed().as_millis();
        r
    }
}
