//! Executable certificates for lower bounds on `f^λ`.
//!
//! Every bound is turned into an inequality between two products of integer
//! powers. When the cleared-denominator operands fit in the bit budget the
//! inequality is decided exactly; otherwise both sides are compared in the
//! log domain with a relative tolerance of `1e-9`, and results inside the
//! band are reported as [`Verdict::Marginal`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bigmath::ln_biguint;
use crate::partition::Partition;
use crate::rational::Rational;

mod overexp;
mod rectangle;
mod reduction;
mod strip;
mod theorem;
mod typing;

pub use overexp::Epsilon;
pub use reduction::{lambda_tilde, reduce, trace_reduction, ReductionTrace};
pub use strip::{strip_exponent, strip_sequence, StripCertificate};
pub use theorem::{classify, gamma, m2_epsilon, Classification, GrowthClass};
pub use typing::{cell_typing, check_typing_hypotheses, CellRecord, CellType, CellTyping};

/// Default cap on the size of exactly compared operands.
pub const DEFAULT_EXACT_BITS: u64 = 1 << 20;

/// Relative width of the log-domain indecision band.
pub const LOG_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "log-domain")]
    LogDomain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "MARGINAL")]
    Marginal,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    /// The weaker of two verdicts.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Marginal => "MARGINAL",
            Verdict::Fail => "FAIL",
        })
    }
}

/// A product `Π base^exp` of non-negative integers.
#[derive(Clone, Debug, Default)]
pub struct PowerProduct {
    factors: Vec<(BigUint, u64)>,
}

impl PowerProduct {
    pub fn new() -> Self {
        PowerProduct::default()
    }

    pub fn times(mut self, base: impl Into<BigUint>, exp: u64) -> Self {
        let base = base.into();
        if exp > 0 && !base.is_one() {
            self.factors.push((base, exp));
        }
        self
    }

    /// Upper estimate of the bit length of the evaluated product.
    pub fn bits(&self) -> u64 {
        self.factors
            .iter()
            .map(|(b, e)| b.bits().saturating_mul(*e))
            .fold(0u64, u64::saturating_add)
    }

    pub fn ln(&self) -> f64 {
        self.factors
            .iter()
            .map(|(b, e)| ln_biguint(b) * *e as f64)
            .sum()
    }

    pub fn eval(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (b, e)| {
            let e = u32::try_from(*e).expect("exponent checked against the bit budget");
            acc * b.pow(e)
        })
    }
}

/// `base^exponent` for a positive rational base and rational exponent,
/// cleared so that `lhs * lhs_extra >= rhs` is the same statement as
/// `lhs >= base^exponent` after raising both sides to `root`.
#[derive(Clone, Debug)]
pub(crate) struct ClearedPower {
    pub lhs_extra: PowerProduct,
    pub rhs: PowerProduct,
    pub root: u64,
}

pub(crate) fn cleared_power(base: &Rational, exponent: &Rational) -> ClearedPower {
    let (p, q) = base.to_biguint_parts();
    let root = exponent
        .denom()
        .to_u64()
        .expect("exponent denominator fits in u64");
    let u = exponent
        .numer()
        .abs()
        .to_u64()
        .expect("exponent numerator fits in u64");
    let (up, down) = if exponent.is_negative() {
        (q, p)
    } else {
        (p, q)
    };
    ClearedPower {
        lhs_extra: PowerProduct::new().times(down, u),
        rhs: PowerProduct::new().times(up, u),
        root,
    }
}

/// One decided inequality `lhs >= rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub name: String,
    pub lhs_log: f64,
    pub rhs_log: f64,
    pub margin: f64,
    pub mode: Mode,
    pub verdict: Verdict,
}

impl Comparison {
    /// Decides `lhs >= rhs` given the exact cleared forms and the log values
    /// of the original sides.
    pub fn decide(
        name: impl Into<String>,
        lhs_log: f64,
        rhs_log: f64,
        lhs: &PowerProduct,
        rhs: &PowerProduct,
        budget: u64,
    ) -> Comparison {
        let exact = lhs.bits() <= budget && rhs.bits() <= budget;
        let margin = lhs_log - rhs_log;
        let (mode, verdict) = if exact {
            let v = if lhs.eval() >= rhs.eval() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            (Mode::Exact, v)
        } else {
            (Mode::LogDomain, log_verdict(lhs_log, rhs_log))
        };
        Comparison {
            name: name.into(),
            lhs_log,
            rhs_log,
            margin,
            mode,
            verdict,
        }
    }

    /// Exact comparison of two already evaluated integers.
    pub fn exact_integers(name: impl Into<String>, lhs: &BigUint, rhs: &BigUint) -> Comparison {
        let (lhs_log, rhs_log) = (ln_biguint(lhs), ln_biguint(rhs));
        Comparison {
            name: name.into(),
            lhs_log,
            rhs_log,
            margin: lhs_log - rhs_log,
            mode: Mode::Exact,
            verdict: if lhs >= rhs {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        }
    }

    /// True when the stored verdict follows from the stored logs.
    pub fn revalidates(&self) -> bool {
        let recomputed = self.lhs_log - self.rhs_log;
        let scale = self.lhs_log.abs().max(self.rhs_log.abs()).max(1.0);
        if (recomputed - self.margin).abs() > 1e-12 * scale {
            return false;
        }
        let band = LOG_TOLERANCE * scale;
        match self.mode {
            Mode::LogDomain => log_verdict(self.lhs_log, self.rhs_log) == self.verdict,
            Mode::Exact => match self.verdict {
                Verdict::Pass => recomputed >= -band,
                Verdict::Fail => recomputed <= band,
                Verdict::Marginal => false,
            },
        }
    }
}

pub(crate) fn log_verdict(lhs_log: f64, rhs_log: f64) -> Verdict {
    let margin = lhs_log - rhs_log;
    if margin.abs() <= LOG_TOLERANCE * lhs_log.abs().max(rhs_log.abs()) {
        Verdict::Marginal
    } else if margin > 0.0 {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundName {
    Strip,
    Rectangle,
    Overexponential,
    Strict,
    General,
    Theorem,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Strip => "strip",
            BoundName::Rectangle => "rectangle",
            BoundName::Overexponential => "overexponential",
            BoundName::Strict => "strict",
            BoundName::General => "general",
            BoundName::Theorem => "theorem",
        }
    }
}

impl std::str::FromStr for BoundName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "strip" => BoundName::Strip,
            "rectangle" => BoundName::Rectangle,
            "overexponential" => BoundName::Overexponential,
            "strict" => BoundName::Strict,
            "general" => BoundName::General,
            "theorem" => BoundName::Theorem,
            other => return Err(format!("unknown bound {other:?}")),
        })
    }
}

/// Outcome of checking one bound instance against the exact degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub bound_name: BoundName,
    pub partition: Partition,
    pub parameters: BTreeMap<String, Value>,
    /// Exponent of the bound's base, when the bound has that shape.
    pub exponent: Option<Rational>,
    pub lhs_log: f64,
    pub rhs_log: f64,
    pub margin: f64,
    pub mode: Mode,
    pub verdict: Verdict,
    /// Supporting inequalities checked along the way.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Comparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<GrowthClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dispatched: Option<Box<BoundCertificate>>,
}

impl BoundCertificate {
    pub(crate) fn from_main(
        bound_name: BoundName,
        partition: &Partition,
        exponent: Option<Rational>,
        main: Comparison,
    ) -> Self {
        BoundCertificate {
            bound_name,
            partition: partition.clone(),
            parameters: BTreeMap::new(),
            exponent,
            lhs_log: main.lhs_log,
            rhs_log: main.rhs_log,
            margin: main.margin,
            mode: main.mode,
            verdict: main.verdict,
            checks: Vec::new(),
            class: None,
            dispatched: None,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn rational_param(self, key: &str, value: &Rational) -> Self {
        self.param(key, value.to_string())
    }

    pub fn check(&self, name: &str) -> Option<&Comparison> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The main comparison as a [`Comparison`].
    pub fn main(&self) -> Comparison {
        Comparison {
            name: self.bound_name.as_str().to_string(),
            lhs_log: self.lhs_log,
            rhs_log: self.rhs_log,
            margin: self.margin,
            mode: self.mode,
            verdict: self.verdict,
        }
    }

    /// Re-derives every verdict from the stored logs.
    pub fn revalidates(&self) -> bool {
        self.main().revalidates()
            && self.checks.iter().all(Comparison::revalidates)
            && self.dispatched.as_ref().is_none_or(|d| d.revalidates())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Runs the bound constructions under a fixed exact-mode bit budget.
#[derive(Clone, Copy, Debug)]
pub struct Certifier {
    pub exact_bit_budget: u64,
}

impl Default for Certifier {
    fn default() -> Self {
        Certifier {
            exact_bit_budget: DEFAULT_EXACT_BITS,
        }
    }
}

impl Certifier {
    pub fn with_budget(exact_bit_budget: u64) -> Self {
        Certifier { exact_bit_budget }
    }

    /// Decides `f * lhs_extra >= base^exponent` where `f` is an exact integer.
    pub(crate) fn compare_power(
        &self,
        name: &str,
        value: &BigUint,
        base: &Rational,
        exponent: &Rational,
    ) -> Comparison {
        let cleared = cleared_power(base, exponent);
        let lhs = cleared.lhs_extra.clone().times(value.clone(), cleared.root);
        let lhs_log = ln_biguint(value);
        let rhs_log = exponent.to_f64() * base.ln();
        Comparison::decide(
            name,
            lhs_log,
            rhs_log,
            &lhs,
            &cleared.rhs,
            self.exact_bit_budget,
        )
    }
}

/// `ρ = δ^2` for integral `α`, otherwise `[δ^2 / (α - [α])] + 1`.
pub fn rho(delta: usize, alpha: &Rational) -> BigUint {
    let d2 = BigUint::from(delta) * BigUint::from(delta);
    if alpha.is_integer() {
        return d2;
    }
    let frac = alpha.fract_part();
    let q = &Rational::from_integer(BigInt::from(d2)) / &frac;
    q.floor().to_biguint().expect("non-negative") + 1u32
}

pub(crate) fn check_alpha(alpha: &Rational) -> crate::Result<()> {
    if alpha <= &Rational::one() {
        return Err(crate::Error::hypothesis(format!(
            "alpha = {alpha} must exceed 1"
        )));
    }
    Ok(())
}

/// `α * x <= n`, i.e. `x <= n / α`, decided exactly.
pub(crate) fn within_fraction(x: usize, n: usize, alpha: &Rational) -> bool {
    (alpha * x) <= n
}

pub(crate) fn check_row_column_bounds(lambda: &Partition, alpha: &Rational) -> crate::Result<()> {
    let n = lambda.size();
    let first_row = lambda.first_part();
    let first_col = lambda.len();
    if !within_fraction(first_row, n, alpha) {
        return Err(crate::Error::hypothesis(format!(
            "lambda_1 = {first_row} exceeds n/alpha = {n}/{alpha}"
        )));
    }
    if !within_fraction(first_col, n, alpha) {
        return Err(crate::Error::hypothesis(format!(
            "lambda'_1 = {first_col} exceeds n/alpha = {n}/{alpha}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(10, &r("2")), BigUint::from(100u32));
        assert_eq!(rho(10, &r("11/10")), BigUint::from(1001u32));
        assert_eq!(rho(1, &r("3/2")), BigUint::from(3u32));
        // 16 / (1/3) = 48 exactly, floor + 1
        assert_eq!(rho(4, &r("7/3")), BigUint::from(49u32));
    }

    #[test]
    fn exact_power_comparisons() {
        let c = Certifier::default();
        // 2 >= (3/2)^1
        let v = c.compare_power("t", &BigUint::from(2u8), &r("3/2"), &r("1"));
        assert_eq!((v.mode, v.verdict), (Mode::Exact, Verdict::Pass));
        // 2 >= (3/2)^2 = 2.25 fails
        let v = c.compare_power("t", &BigUint::from(2u8), &r("3/2"), &r("2"));
        assert_eq!(v.verdict, Verdict::Fail);
        // 1 >= 2^(-1/2)
        let v = c.compare_power("t", &BigUint::from(1u8), &r("2"), &r("-1/2"));
        assert_eq!(v.verdict, Verdict::Pass);
        // 4 >= 8^(2/3) = 4 holds with equality
        let v = c.compare_power("t", &BigUint::from(4u8), &r("8"), &r("2/3"));
        assert_eq!(v.verdict, Verdict::Pass);
        assert!(v.revalidates());
    }

    #[test]
    fn log_domain_when_over_budget() {
        let c = Certifier::with_budget(8);
        let v = c.compare_power("t", &BigUint::from(1000u32), &r("3/2"), &r("10"));
        assert_eq!(v.mode, Mode::LogDomain);
        assert_eq!(v.verdict, Verdict::Pass);
        assert!(v.revalidates());
        let v = c.compare_power("t", &BigUint::from(1024u32), &r("2"), &r("10"));
        assert_eq!(v.verdict, Verdict::Marginal);
        assert!(v.revalidates());
    }

    #[test]
    fn tampered_verdict_fails_revalidation() {
        let c = Certifier::default();
        let mut v = c.compare_power("t", &BigUint::from(2u8), &r("3/2"), &r("2"));
        v.verdict = Verdict::Pass;
        assert!(!v.revalidates());
    }
}
