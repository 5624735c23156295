//! Exact counting and uniform sampling of partitions inside a box.
//!
//! Partitions of `r` with at most `b` parts, each at most `a`, are counted by
//! the coefficient of `q^r` in the Gaussian binomial `[a+b choose b]_q`. A
//! sample is drawn by picking a uniform rank below the exact count and
//! unranking it along the box recurrence
//!
//! ```text
//! G(a, b, r) = G(a, b-1, r) + G(a-1, b, r-b)
//! ```
//!
//! (fewer than `b` parts, or exactly `b` parts with one column stripped).
//! Each step moves to a neighbouring Gaussian polynomial, obtained from the
//! current one by multiplying and dividing by `1 - q^c` truncated at degree
//! `n`, so no three-dimensional table is ever materialised.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Coefficients `0..=degree` of `[a+b choose b]_q`.
pub fn gaussian_binomial(a: usize, b: usize, degree: usize) -> Vec<BigUint> {
    to_unsigned(gaussian_poly(a, b, degree))
}

fn gaussian_poly(a: usize, b: usize, degree: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); degree + 1];
    poly[0] = BigInt::one();
    let (a, b) = if b > a { (b, a) } else { (a, b) };
    for i in 1..=b {
        mul_one_minus_q(&mut poly, a + i);
        div_one_minus_q(&mut poly, i);
    }
    poly
}

fn to_unsigned(poly: Vec<BigInt>) -> Vec<BigUint> {
    poly.into_iter()
        .map(|c| {
            c.to_biguint()
                .expect("Gaussian coefficients are non-negative")
        })
        .collect()
}

/// In place `poly *= (1 - q^c)`, truncated.
fn mul_one_minus_q(poly: &mut [BigInt], c: usize) {
    if c == 0 {
        poly.iter_mut().for_each(|x| x.set_zero());
        return;
    }
    for r in (c..poly.len()).rev() {
        let (lo, hi) = poly.split_at_mut(r);
        hi[0] -= &lo[r - c];
    }
}

/// In place `poly /= (1 - q^c)` as a power series, truncated.
fn div_one_minus_q(poly: &mut [BigInt], c: usize) {
    debug_assert!(c > 0);
    for r in c..poly.len() {
        let (lo, hi) = poly.split_at_mut(r);
        hi[0] += &lo[r - c];
    }
}

/// Number of partitions of `n` with parts `<= max_part` and at most
/// `max_parts` parts.
pub fn count_partitions(n: usize, max_part: usize, max_parts: usize) -> BigUint {
    let a = max_part.min(n);
    let b = max_parts.min(n);
    gaussian_binomial(a, b, n).swap_remove(n)
}

/// Exact-uniform sampler over partitions of `n` in a `max_parts x max_part`
/// box.
#[derive(Debug)]
pub struct PartitionSampler {
    n: usize,
    max_part: usize,
    max_parts: usize,
    total: BigUint,
    cache: HashMap<(usize, usize), Rc<Vec<BigInt>>>,
    cached_coeffs: usize,
}

/// Upper bound on cached coefficients; past it the walk recomputes.
const CACHE_LIMIT: usize = 1 << 21;

impl PartitionSampler {
    pub fn new(n: usize, max_part: usize, max_parts: usize) -> Result<Self> {
        let a = max_part.min(n);
        let b = max_parts.min(n);
        let root = gaussian_poly(a, b, n);
        let total = root[n]
            .to_biguint()
            .expect("Gaussian coefficients are non-negative");
        if total.is_zero() {
            return Err(Error::EmptyConstrainedSet {
                n,
                max_part,
                max_parts,
            });
        }
        let mut cache = HashMap::new();
        cache.insert((a, b), Rc::new(root));
        Ok(PartitionSampler {
            n,
            max_part: a,
            max_parts: b,
            total,
            cache,
            cached_coeffs: n + 1,
        })
    }

    /// Size of the constrained set.
    pub fn count(&self) -> &BigUint {
        &self.total
    }

    pub fn sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Partition {
        let rank = rng.gen_biguint_below(&self.total);
        self.unrank(&rank)
    }

    /// The partition with the given rank, `0 <= rank < count()`.
    ///
    /// Ranks enumerate "fewer parts" before "all rows present" at every
    /// step of the box recurrence.
    pub fn unrank(&mut self, rank: &BigUint) -> Partition {
        assert!(rank < &self.total, "rank out of range");
        let mut rank = BigInt::from_biguint(Sign::Plus, rank.clone());
        let (mut a, mut b, mut r) = (self.max_part, self.max_parts, self.n);
        let mut rows = vec![0usize; b];
        let mut poly = self.poly(a, b, None);
        while r > 0 {
            debug_assert!(a > 0 && b > 0, "non-empty remainder in an empty box");
            let fewer = self.poly(a, b - 1, Some((&poly, Step::DropRow)));
            if rank < fewer[r] {
                b -= 1;
                poly = fewer;
            } else {
                rank -= &fewer[r];
                let full = self.poly(a - 1, b, Some((&poly, Step::DropColumn)));
                rows[..b].iter_mut().for_each(|x| *x += 1);
                r -= b;
                a -= 1;
                poly = full;
            }
        }
        Partition::from_sorted_unchecked(rows)
    }

    fn poly(
        &mut self,
        a: usize,
        b: usize,
        parent: Option<(&Rc<Vec<BigInt>>, Step)>,
    ) -> Rc<Vec<BigInt>> {
        if let Some(p) = self.cache.get(&(a, b)) {
            return Rc::clone(p);
        }
        let poly = match parent {
            Some((parent, step)) => {
                let mut p = parent.as_ref().clone();
                // parent is G(a', b') with a' + b' = a + b + 1
                let c = match step {
                    Step::DropRow => b + 1,
                    Step::DropColumn => a + 1,
                };
                mul_one_minus_q(&mut p, c);
                div_one_minus_q(&mut p, a + b + 1);
                p
            }
            None => gaussian_poly(a, b, self.n),
        };
        let poly = Rc::new(poly);
        if self.cached_coeffs < CACHE_LIMIT {
            self.cached_coeffs += poly.len();
            self.cache.insert((a, b), Rc::clone(&poly));
        }
        poly
    }
}

#[derive(Clone, Copy, Debug)]
enum Step {
    DropRow,
    DropColumn,
}

/// One exact-uniform draw from the box-constrained partitions of `n`,
/// deterministic in `seed`.
pub fn sample_partition(
    n: usize,
    max_part: usize,
    max_parts: usize,
    seed: u64,
) -> Result<Partition> {
    let mut sampler = PartitionSampler::new(n, max_part, max_parts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sampler.sample(&mut rng))
}

/// Picks `x` with probability proportional to `weights[x]` using an exact
/// big-integer draw.
pub(crate) fn weighted_index<R: Rng + ?Sized>(weights: &[BigUint], rng: &mut R) -> Option<usize> {
    let total: BigUint = weights.iter().sum();
    if total.is_zero() {
        return None;
    }
    let mut rank = rng.gen_biguint_below(&total);
    for (i, w) in weights.iter().enumerate() {
        if &rank < w {
            return Some(i);
        }
        rank -= w;
    }
    unreachable!("rank below total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn counts_match_enumeration() {
        for n in 0..=14 {
            for a in 0..=n + 1 {
                for b in 0..=n + 1 {
                    let brute = enumerate_partitions(n, Some(a), Some(b)).count();
                    assert_eq!(
                        count_partitions(n, a, b),
                        BigUint::from(brute),
                        "n={n} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn unranking_is_a_bijection() {
        for (n, a, b) in [(8, 8, 8), (10, 4, 5), (12, 5, 3), (6, 2, 3), (0, 0, 0)] {
            let mut sampler = PartitionSampler::new(n, a, b).unwrap();
            let total: usize = sampler.count().try_into().unwrap();
            let mut seen: Vec<Partition> = (0..total)
                .map(|k| sampler.unrank(&BigUint::from(k)))
                .collect();
            for q in &seen {
                assert_eq!(q.size(), n);
                assert!(q.first_part() <= a && q.len() <= b);
            }
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), total);
        }
    }

    #[test]
    fn forced_sample() {
        let q = sample_partition(6, 2, 3, 99).unwrap();
        assert_eq!(q.parts(), &[2, 2, 2]);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = sample_partition(10, 10, 10, 42).unwrap();
        let b = sample_partition(10, 10, 10, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_set_is_an_error() {
        assert_eq!(
            sample_partition(7, 2, 3, 1),
            Err(Error::EmptyConstrainedSet {
                n: 7,
                max_part: 2,
                max_parts: 3
            })
        );
    }

    #[test]
    fn gaussian_symmetry() {
        let g = gaussian_binomial(5, 7, 35);
        for r in 0..=35 {
            assert_eq!(g[r], g[35 - r]);
        }
        let total: BigUint = g.iter().sum();
        assert_eq!(total, crate::bigmath::binomial(12, 5));
    }
}
