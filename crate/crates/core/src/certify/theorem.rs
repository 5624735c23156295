//! `f^λ >= β^n` for `1 < β < α`, dispatched on the size of the Durfee
//! square.

use serde::{Deserialize, Serialize};

use super::overexp::Epsilon;
use super::{
    check_alpha, check_row_column_bounds, rho, BoundCertificate, BoundName, Certifier,
    LOG_TOLERANCE,
};
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;

/// Which part of the argument covers `n`:
///
/// * `M1`: `δ < 18α`, handled by the hook-strip bound with `k = l = δ`;
/// * `M2`: `δ >= 18α` and `γn <= 5/2 δ^2 + αρ`, handled by the Durfee
///   square;
/// * `M3`: the remaining `n`, handled by the reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GrowthClass {
    M1,
    M2,
    M3,
}

impl std::fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GrowthClass::M1 => "M1",
            GrowthClass::M2 => "M2",
            GrowthClass::M3 => "M3",
        })
    }
}

/// The quantities the class is decided from.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub class: GrowthClass,
    /// `(ln α - ln β) / ln α`.
    pub gamma: f64,
    pub delta: usize,
    /// `5/2 δ^2 + αρ`, only computed when `δ >= 18α`.
    pub threshold: Option<f64>,
}

pub fn gamma(alpha: &Rational, beta: &Rational) -> f64 {
    let la = alpha.ln();
    (la - beta.ln()) / la
}

/// Classifies `λ ⊢ n`. Ties `γn = 5/2 δ^2 + αρ` (within the log tolerance)
/// go to `M2`.
pub fn classify(lambda: &Partition, alpha: &Rational, beta: &Rational) -> Classification {
    let n = lambda.size();
    let delta = lambda.diagonal();
    let gamma = gamma(alpha, beta);
    if alpha * 18usize > delta {
        return Classification {
            class: GrowthClass::M1,
            gamma,
            delta,
            threshold: None,
        };
    }
    let rho = Rational::from_integer(num_bigint::BigInt::from(rho(delta, alpha)));
    let threshold = (&Rational::new(5 * delta * delta, 2) + &(alpha * &rho)).to_f64();
    let lhs = gamma * n as f64;
    let class = if lhs <= threshold + LOG_TOLERANCE * threshold.abs().max(lhs.abs()) {
        GrowthClass::M2
    } else {
        GrowthClass::M3
    };
    Classification {
        class,
        gamma,
        delta,
        threshold: Some(threshold),
    }
}

/// `ε = γ (5/2 + α)^{-1}` for integral `α`, else `γ (3 + α/(α - [α]))^{-1}`.
pub fn m2_epsilon(alpha: &Rational, gamma: f64) -> f64 {
    let denom = if alpha.is_integer() {
        2.5 + alpha.to_f64()
    } else {
        3.0 + (alpha / &alpha.fract_part()).to_f64()
    };
    gamma / denom
}

impl Certifier {
    /// Compares `f^λ` with `β^n` and attaches the certificate of the bound
    /// that covers `λ`'s class. A hypothesis failure inside the dispatched
    /// bound is recorded under `dispatch_error` instead of aborting.
    pub fn theorem_classify(
        &self,
        lambda: &Partition,
        alpha: &Rational,
        beta: &Rational,
    ) -> Result<BoundCertificate> {
        check_alpha(alpha)?;
        if beta <= &Rational::one() || beta >= alpha {
            return Err(Error::hypothesis(format!(
                "beta = {beta} must lie strictly between 1 and alpha = {alpha}"
            )));
        }
        let n = lambda.size();
        if n == 0 {
            return Err(Error::hypothesis("the theorem needs n >= 1"));
        }
        check_row_column_bounds(lambda, alpha)?;
        let class = classify(lambda, alpha, beta);
        let f = degree(lambda);
        let main = self.compare_power("theorem", &f, beta, &Rational::from(n));

        let mut cert =
            BoundCertificate::from_main(BoundName::Theorem, lambda, Some(Rational::from(n)), main)
                .rational_param("alpha", alpha)
                .rational_param("beta", beta)
                .param("gamma", class.gamma)
                .param("delta", class.delta);
        if let Some(t) = class.threshold {
            cert = cert.param("threshold", t);
        }
        let dispatched = match class.class {
            GrowthClass::M1 => self
                .strip_bound(lambda, class.delta, class.delta, alpha)
                .map(|s| s.certificate),
            GrowthClass::M2 => {
                let eps = m2_epsilon(alpha, class.gamma);
                cert = cert.param("epsilon", eps);
                self.overexponential_bound(lambda, &Epsilon::Real(eps), beta)
            }
            GrowthClass::M3 => self.general_bound(lambda, alpha),
        };
        match dispatched {
            Ok(d) => cert.dispatched = Some(Box::new(d)),
            Err(e) if e.is_hypothesis() => cert = cert.param("dispatch_error", e.to_string()),
            Err(e) => return Err(e),
        }
        cert.class = Some(class.class);
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::Verdict;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn balanced_hundred_is_m1() {
        let lam = Partition::rectangle(10, 10);
        let c = Certifier::default()
            .theorem_classify(&lam, &r("2"), &r("3/2"))
            .unwrap();
        assert_eq!(c.class, Some(GrowthClass::M1));
        assert_eq!(c.verdict, Verdict::Pass);
        let strip = c.dispatched.as_ref().unwrap();
        assert_eq!(strip.bound_name, BoundName::Strip);
        // m = (3δ - 1)δ / 2
        assert_eq!(strip.parameters["m"], 145);
    }

    #[test]
    fn single_row_is_rejected() {
        let lam = Partition::new(vec![12]).unwrap();
        let err = Certifier::default()
            .theorem_classify(&lam, &r("2"), &r("3/2"))
            .unwrap_err();
        assert!(err.is_hypothesis());
        let lam = Partition::rectangle(10, 10);
        assert!(Certifier::default()
            .theorem_classify(&lam, &r("2"), &r("2"))
            .is_err());
    }

    #[test]
    fn staircase_610() {
        let lam = Partition::new((21..=40).rev().collect()).unwrap();
        let (alpha, beta) = (r("11/10"), r("21/20"));
        let c = Certifier::default()
            .theorem_classify(&lam, &alpha, &beta)
            .unwrap();
        let g = gamma(&alpha, &beta);
        // δ = 20 >= 19.8; threshold 1000 + 1.1 * 4001
        let threshold = 1000.0 + 1.1 * 4001.0;
        let expect = if g * 610.0 <= threshold {
            GrowthClass::M2
        } else {
            GrowthClass::M3
        };
        assert_eq!(c.class, Some(expect));
        assert_eq!(c.verdict, Verdict::Pass);
        assert!(c.revalidates());
    }
}
