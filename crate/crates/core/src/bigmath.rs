//! Big-integer helpers shared by the degree pipeline and the certificates.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Natural logarithm of a big integer from its top 64 bits and bit length.
///
/// Returns `-inf` for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return (x.to_u64().expect("fits in u64") as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits after shift");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Product of `lo..=hi` by binary splitting; empty ranges give 1.
pub fn range_product(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 16 {
        let mut acc = BigUint::one();
        for k in lo..=hi {
            acc *= k;
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

pub fn factorial(n: u64) -> BigUint {
    range_product(1, n)
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    range_product(n - k + 1, n)
}

/// Product of a list of small factors by binary splitting.
pub fn product_of(factors: &[u64]) -> BigUint {
    match factors.len() {
        0 => BigUint::one(),
        1 => BigUint::from(factors[0]),
        len if len <= 16 => factors.iter().fold(BigUint::one(), |acc, &f| acc * f),
        len => {
            let (a, b) = factors.split_at(len / 2);
            product_of(a) * product_of(b)
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    falling_factorial(n, k) / factorial(k)
}
