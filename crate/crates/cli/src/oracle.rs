//! Identity suites for the degree engine.

use std::fmt;

use hookgrowth::degree::{count_syt_bruteforce, sum_squares_identity, verify_hook_dominance};
use hookgrowth::partition::enumerate_partitions;
use hookgrowth::{degree, Result};

use crate::{usage, CliError};

/// Largest `--max-n` accepted at all.
pub const MAX_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    /// Sizes checked were `1..=upto`.
    pub upto: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        write!(
            f,
            "{:<16} n <= {:<2} {:>6} checks  {status}",
            self.name, self.upto, self.checked
        )?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}

/// Runs every suite up to `max_n`, each clamped to its own guard.
pub fn run_oracles(max_n: usize) -> std::result::Result<Vec<SuiteOutcome>, CliError> {
    if max_n > MAX_N {
        return Err(usage(format!(
            "--max-n {max_n} exceeds the guard {MAX_N} (tableau counts stop at 8, the tableau sweep at 7)"
        )));
    }
    let suite = |name, guard: usize, check: &dyn Fn(usize) -> Result<Vec<String>>| {
        let upto = max_n.min(guard);
        let mut failures = Vec::new();
        let mut checked = 0;
        for n in 1..=upto {
            let found = check(n)?;
            checked += 1;
            failures.extend(found);
        }
        Ok::<_, CliError>(SuiteOutcome {
            name,
            upto,
            checked,
            failures,
        })
    };
    Ok(vec![
        suite("sum-of-squares", 12, &|n| {
            Ok(if sum_squares_identity(n)? {
                vec![]
            } else {
                vec![format!("n = {n}")]
            })
        })?,
        suite("tableau-count", 8, &|n| {
            let mut bad = Vec::new();
            for lam in enumerate_partitions(n, None, None) {
                if degree(&lam) != count_syt_bruteforce(&lam)? {
                    bad.push(lam.to_string());
                }
            }
            Ok(bad)
        })?,
        suite("conjugation", 12, &|n| {
            Ok(enumerate_partitions(n, None, None)
                .filter(|lam| degree(lam) != degree(&lam.conjugate()))
                .map(|lam| lam.to_string())
                .collect())
        })?,
        suite("hook-dominance", 7, &|n| {
            let mut bad = Vec::new();
            for lam in enumerate_partitions(n, None, None) {
                if !verify_hook_dominance(&lam)? {
                    bad.push(lam.to_string());
                }
            }
            Ok(bad)
        })?,
    ])
}
