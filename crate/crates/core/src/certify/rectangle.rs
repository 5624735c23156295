//! Degrees of rectangular diagrams `(b^a)`.

use num_bigint::BigUint;

use super::{BoundCertificate, BoundName, Certifier, Comparison, Mode, Verdict};
use crate::bigmath::{binomial, factorial, ln_biguint};
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;

impl Certifier {
    /// Checks `f^(b^a) >= n!/(b!)^a * 4^(-n)` exactly (main verdict) and
    /// `f^(b^a) >= (a/4)^n` as a supporting comparison, with `n = ab` and
    /// `a <= b` after transposing.
    pub fn rectangle_bound(&self, a: usize, b: usize) -> Result<BoundCertificate> {
        if a == 0 || b == 0 {
            return Err(Error::hypothesis("rectangle sides must be positive"));
        }
        let transposed = b < a;
        let (a, b) = if transposed { (b, a) } else { (a, b) };
        let n = a * b;
        let shape = Partition::rectangle(a, b);
        let f = degree(&shape);
        let n_fact = factorial(n as u64);
        let b_fact_pow = factorial(b as u64).pow(a as u32);

        // f = n!/(b!)^a * Π_{t<a} binom(b+t, t)^{-1}
        let binomials: BigUint = (1..a as u64).map(|t| binomial(b as u64 + t, t)).product();
        if &f * &b_fact_pow * &binomials != n_fact {
            return Err(Error::internal(format!(
                "hook formula for ({b}^{a}) disagrees with the binomial product"
            )));
        }

        let four_pow = BigUint::from(4u8).pow(n as u32);
        let holds = &f * &b_fact_pow * &four_pow >= n_fact;
        let lhs_log = ln_biguint(&f);
        let rhs_log = ln_biguint(&n_fact) - ln_biguint(&b_fact_pow) - n as f64 * 4f64.ln();
        let main = Comparison {
            name: "rectangle".into(),
            lhs_log,
            rhs_log,
            margin: lhs_log - rhs_log,
            mode: Mode::Exact,
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        };
        let base = Rational::new(a, 4);
        let power = self.compare_power("a_over_4_pow_n", &f, &base, &Rational::from(n));

        let mut cert = BoundCertificate::from_main(BoundName::Rectangle, &shape, None, main)
            .param("a", a)
            .param("b", b)
            .param("n", n)
            .param("transposed", transposed);
        cert.checks.push(power);
        Ok(cert)
    }
}
