//! Character degrees `f^λ` by the hook-length formula, together with the
//! brute-force tableau oracles and classical identities that check it.

use num_bigint::BigUint;

use crate::bigmath::{factorial, ln_biguint, product_of};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::tableau::StandardTableaux;

/// Guard for [`count_syt_bruteforce`] and [`sum_squares_identity`].
pub const BRUTE_FORCE_LIMIT: usize = 12;
/// Guard for [`verify_hook_dominance`], which visits every tableau.
pub const TABLEAU_SWEEP_LIMIT: usize = 10;

/// Product of all hook numbers of `λ`.
pub fn hook_product(lambda: &Partition) -> BigUint {
    let hooks: Vec<u64> = lambda
        .hook_lengths()
        .into_iter()
        .flatten()
        .map(|h| h as u64)
        .collect();
    product_of(&hooks)
}

/// `f^λ = n! / Π h_ij`. The empty partition has degree 1.
pub fn degree(lambda: &Partition) -> BigUint {
    let hooks = hook_product(lambda);
    let num = factorial(lambda.size() as u64);
    debug_assert!(
        (&num % &hooks) == BigUint::from(0u8),
        "hook formula is exact"
    );
    num / hooks
}

/// `ln f^λ` from the exact integer.
pub fn log_degree(lambda: &Partition) -> f64 {
    ln_biguint(&degree(lambda))
}

/// Counts standard tableaux by growing every filling one entry at a time.
pub fn count_syt_bruteforce(lambda: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force tableau count",
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let target = lambda.parts();
    let mut rows = vec![0usize; target.len()];
    Ok(BigUint::from(grow(target, &mut rows, n)))
}

fn grow(target: &[usize], rows: &mut [usize], left: usize) -> u64 {
    if left == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..rows.len() {
        let fits_row = rows[i] < target[i];
        let fits_col = i == 0 || rows[i - 1] > rows[i];
        if fits_row && fits_col {
            rows[i] += 1;
            total += grow(target, rows, left - 1);
            rows[i] -= 1;
        }
    }
    total
}

/// Checks `n + 1 - t_ij >= h_ij` over every standard tableau of `λ`.
pub fn verify_hook_dominance(lambda: &Partition) -> Result<bool> {
    let n = lambda.size();
    if n > TABLEAU_SWEEP_LIMIT {
        return Err(Error::TooLarge {
            what: "tableau sweep",
            n,
            limit: TABLEAU_SWEEP_LIMIT,
        });
    }
    let hooks = lambda.hook_lengths();
    Ok(StandardTableaux::new(lambda).all(|t| {
        t.cells()
            .all(|(cell, entry)| n + 1 - entry >= hooks[cell.row - 1][cell.col - 1])
    }))
}

/// `Σ_{λ ⊢ n} (f^λ)^2 == n!`.
pub fn sum_squares_identity(n: usize) -> Result<bool> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "sum of squares identity",
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let sum: BigUint = enumerate_partitions(n, None, None)
        .map(|p| {
            let f = degree(&p);
            &f * &f
        })
        .sum();
    Ok(sum == factorial(n as u64))
}

/// Two-sided Stirling bounds on `n!` with the `1/(12n)` corrections, in the
/// log domain, plus the weak form `n! >= n^n e^{-n}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RobbinsBounds {
    pub ln_lower: f64,
    pub ln_upper: f64,
    pub ln_weak: f64,
}

impl RobbinsBounds {
    pub fn lower(&self) -> f64 {
        self.ln_lower.exp()
    }

    pub fn upper(&self) -> f64 {
        self.ln_upper.exp()
    }

    /// Whether `ln_value` (typically `ln n!`) sits inside both bounds.
    pub fn brackets(&self, ln_value: f64) -> bool {
        let slack = 1e-12 * ln_value.abs().max(1.0);
        self.ln_lower <= ln_value + slack && ln_value <= self.ln_upper + slack
    }
}

pub fn robbins_bounds(n: u64) -> RobbinsBounds {
    assert!(n >= 1, "Stirling bounds need n >= 1");
    let nf = n as f64;
    let base = 0.5 * (2.0 * std::f64::consts::PI * nf).ln() + nf * nf.ln() - nf;
    RobbinsBounds {
        ln_lower: base + 1.0 / (12.0 * nf + 1.0),
        ln_upper: base + 1.0 / (12.0 * nf),
        ln_weak: nf * nf.ln() - nf,
    }
}
