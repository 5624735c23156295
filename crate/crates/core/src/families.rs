//! Partition families for sweeps: deterministic shapes and exact-uniform
//! samplers over shapes with a prescribed Durfee square.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::sampling::{gaussian_binomial, weighted_index, PartitionSampler};

/// `⌊n / α⌋`, the largest admissible first row or column.
pub fn row_cap(n: usize, alpha: &Rational) -> usize {
    (&Rational::from(n) / alpha)
        .floor()
        .to_usize()
        .expect("n / alpha is a non-negative machine integer")
}

/// `⌈√n⌉` parts differing by at most one, longer parts first.
pub fn balanced(n: usize) -> Partition {
    if n == 0 {
        return Partition::empty();
    }
    let mut k = n.isqrt();
    if k * k < n {
        k += 1;
    }
    let (q, r) = (n / k, n % k);
    let parts = (0..k).map(|i| q + usize::from(i < r)).collect();
    Partition::new(parts).expect("balanced parts are positive and sorted")
}

/// The strict staircase with the most rows: `δ` rows for the largest `δ`
/// with `δ(3δ+1)/2 <= n`, starting from `(2δ, 2δ-1, ..., δ+1)` and
/// spreading the remainder evenly from the top so rows stay distinct.
///
/// Its Durfee square is `δ` and its rows strictly decrease down to `δ + 1`.
pub fn staircase(n: usize) -> Partition {
    let mut delta = 0;
    while (delta + 1) * (3 * delta + 4) / 2 <= n {
        delta += 1;
    }
    if delta == 0 {
        return balanced(n);
    }
    let rest = n - delta * (3 * delta + 1) / 2;
    let (q, r) = (rest / delta, rest % delta);
    let parts = (1..=delta)
        .map(|i| 2 * delta + 1 - i + q + usize::from(i <= r))
        .collect();
    Partition::new(parts).expect("staircase rows are positive and sorted")
}

/// Exact-uniform sampler over `λ ⊢ n` with Durfee square `δ` and
/// `λ_1, λ'_1 <= ⌊n/α⌋`.
///
/// In strict mode it also requires `λ_1 > ... > λ_δ > δ`. A shape is split
/// into the square, an arm of `δ` rows to its right and a leg below it; in
/// strict mode the arm is a staircase `(δ, δ-1, ..., 1)` plus a partition
/// with at most `δ` parts. The split of the remaining cells between arm and
/// leg is drawn with exact probability proportional to the number of
/// completions.
#[derive(Debug)]
pub struct DurfeeSampler {
    delta: usize,
    strict: bool,
    arm_max: usize,
    leg_max: usize,
    weights: Vec<BigUint>,
}

impl DurfeeSampler {
    /// Shapes meeting the typing hypotheses for this `δ`.
    pub fn strict(n: usize, delta: usize, alpha: &Rational) -> Result<Self> {
        Self::build(n, delta, alpha, true)
    }

    /// Any shape with this Durfee square and row and column caps.
    pub fn plain(n: usize, delta: usize, alpha: &Rational) -> Result<Self> {
        Self::build(n, delta, alpha, false)
    }

    fn build(n: usize, delta: usize, alpha: &Rational, strict: bool) -> Result<Self> {
        let cap = row_cap(n, alpha);
        let base = if strict {
            delta * delta + delta * (delta + 1) / 2
        } else {
            delta * delta
        };
        let arm_reserved = if strict { 2 * delta } else { delta };
        let empty = || Error::EmptyConstrainedSet {
            n,
            max_part: cap,
            max_parts: cap,
        };
        if delta == 0 || n < base || cap < arm_reserved || cap < delta {
            return Err(empty());
        }
        let (arm_max, leg_max) = (cap - arm_reserved, cap - delta);
        let rest = n - base;
        let arm = gaussian_binomial(arm_max, delta, rest);
        let leg = gaussian_binomial(delta, leg_max, rest);
        let weights: Vec<BigUint> = (0..=rest).map(|x| &arm[x] * &leg[rest - x]).collect();
        if weights.iter().all(|w| w == &BigUint::ZERO) {
            return Err(empty());
        }
        Ok(DurfeeSampler {
            delta,
            strict,
            arm_max,
            leg_max,
            weights,
        })
    }

    /// Number of shapes in the family.
    pub fn count(&self) -> BigUint {
        self.weights.iter().sum()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Partition {
        let d = self.delta;
        let x = weighted_index(&self.weights, rng).expect("family is non-empty");
        let rest = self.weights.len() - 1;
        let draw = |size, max_part, max_parts, rng: &mut R| {
            PartitionSampler::new(size, max_part, max_parts)
                .expect("positive weight implies a completion")
                .sample(rng)
        };
        let arm = draw(x, self.arm_max, d, rng);
        let leg = draw(rest - x, d, self.leg_max, rng);
        let mut parts: Vec<usize> = (1..=d)
            .map(|i| {
                let stair = if self.strict { d + 1 - i } else { 0 };
                d + stair + arm.part(i)
            })
            .collect();
        parts.extend_from_slice(leg.parts());
        Partition::new(parts).expect("square, arm and leg form a diagram")
    }
}
