//! Degrees of diagrams with a large Durfee square, through the square itself.

use serde::{Deserialize, Serialize};

use super::{BoundCertificate, BoundName, Certifier, Comparison, LOG_TOLERANCE};
use crate::bigmath::ln_biguint;
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::{contains, Partition};
use crate::rational::Rational;

/// The density threshold `δ^2 / n >= ε`.
///
/// Callers pass an exact rational; the theorem dispatch derives `ε` from a
/// logarithm and passes a real, compared with the usual relative tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Epsilon {
    Exact(Rational),
    Real(f64),
}

impl Epsilon {
    pub fn to_f64(&self) -> f64 {
        match self {
            Epsilon::Exact(r) => r.to_f64(),
            Epsilon::Real(x) => *x,
        }
    }

    fn admits(&self, square: usize, n: usize) -> bool {
        match self {
            Epsilon::Exact(eps) => eps * n <= square,
            Epsilon::Real(eps) => (square as f64) >= eps * n as f64 * (1.0 - LOG_TOLERANCE),
        }
    }
}

impl Certifier {
    /// Compares `f^μ` for the Durfee square `μ = (δ^δ)` against `γ^n`.
    ///
    /// The main verdict is whether `f^μ >= γ^n` holds at this `n`, which is
    /// only promised for large `n`. Supporting checks record `f^λ >= f^μ`
    /// and `f^μ >= β^(δ^2)` with `β = γ^(1/ε)`.
    pub fn overexponential_bound(
        &self,
        lambda: &Partition,
        eps: &Epsilon,
        gamma: &Rational,
    ) -> Result<BoundCertificate> {
        let n = lambda.size();
        if n == 0 {
            return Err(Error::hypothesis("the overexponential bound needs n >= 1"));
        }
        if !gamma.is_positive() {
            return Err(Error::hypothesis(format!(
                "gamma = {gamma} must be positive"
            )));
        }
        if eps.to_f64() <= 0.0 {
            return Err(Error::hypothesis("epsilon must be positive"));
        }
        let delta = lambda.diagonal();
        let square = delta * delta;
        if !eps.admits(square, n) {
            return Err(Error::hypothesis(format!(
                "delta^2/n = {square}/{n} is below epsilon = {}",
                eps.to_f64()
            )));
        }
        let mu = Partition::rectangle(delta, delta);
        if !contains(&mu, lambda) {
            return Err(Error::internal("Durfee square is not contained in lambda"));
        }
        let f_lambda = degree(lambda);
        let f_mu = degree(&mu);

        let main = self.compare_power("overexponential", &f_mu, gamma, &Rational::from(n));
        let containment = Comparison::exact_integers("containment", &f_lambda, &f_mu);
        let ln_beta = gamma.ln() / eps.to_f64();
        let mu_log = ln_biguint(&f_mu);
        let beta_rhs = ln_beta * square as f64;
        let beta = Comparison {
            name: "square_vs_beta_pow_k".into(),
            lhs_log: mu_log,
            rhs_log: beta_rhs,
            margin: mu_log - beta_rhs,
            mode: super::Mode::LogDomain,
            verdict: super::log_verdict(mu_log, beta_rhs),
        };

        let mut cert = BoundCertificate::from_main(
            BoundName::Overexponential,
            lambda,
            Some(Rational::from(n)),
            main,
        )
        .rational_param("gamma", gamma)
        .param("delta", delta)
        .param("k", square)
        .param("ln_beta", ln_beta);
        cert = match eps {
            Epsilon::Exact(e) => cert.rational_param("epsilon", e),
            Epsilon::Real(e) => cert.param("epsilon", *e),
        };
        cert.checks = vec![containment, beta];
        Ok(cert)
    }
}
