//! Shrinking an arbitrary diagram with a large Durfee square to one with
//! strictly decreasing rows, and the resulting bound
//! `f^λ >= α^(n - (5/2 δ^2 + αρ))`.

use serde::{Deserialize, Serialize};

use super::typing::{cell_typing, check_typing_hypotheses};
use super::{
    check_alpha, check_row_column_bounds, rho, BoundCertificate, BoundName, Certifier, Comparison,
};
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::{contains, Cell, Partition};
use crate::rational::Rational;

/// Every intermediate diagram of the reduction.
///
/// `lambda_tilde` is stored before any conjugation; `s` and `t` are the
/// values after it, so `s >= t`. When the padded rows of `mu` end on a cell
/// `(d, d)` with `d = δ(μ)`, `strict_shape` is `mu` without that cell and
/// `trimmed` is set; otherwise `strict_shape == mu`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub input: Partition,
    pub delta: usize,
    pub lambda_tilde: Partition,
    pub s: usize,
    pub t: usize,
    pub conjugated: bool,
    pub mu: Partition,
    pub n1: usize,
    pub n2: usize,
    pub delta_mu: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_mu: Option<usize>,
    pub strict_shape: Partition,
    pub trimmed: bool,
}

/// The two trimming rules: the first `δ` rows lose `i - 1` cells when long
/// enough and are cut to `δ` otherwise, and likewise for the first `δ`
/// columns.
pub fn lambda_tilde(lambda: &Partition) -> Partition {
    let delta = lambda.diagonal();
    let rule = |len: usize, i: usize| {
        if len + 1 >= delta + i {
            len - (i - 1)
        } else {
            delta
        }
    };
    let conj = lambda.conjugate();
    let rows: Vec<usize> = (1..=delta).map(|i| rule(lambda.part(i), i)).collect();
    let cols: Vec<usize> = (1..=delta).map(|j| rule(conj.part(j), j)).collect();
    let mut parts = rows;
    let depth = cols.first().copied().unwrap_or(0);
    parts.extend((delta + 1..=depth).map(|row| cols.iter().filter(|&&c| c >= row).count()));
    Partition::from_sorted_unchecked(parts)
}

fn last_long(lengths: impl Iterator<Item = usize>, delta: usize) -> usize {
    lengths
        .take(delta)
        .enumerate()
        .filter(|&(_, len)| len > delta)
        .map(|(i, _)| i + 1)
        .last()
        .unwrap_or(0)
}

/// The reduction without any `α` hypotheses, for tracing the construction
/// on small diagrams. Needs only `n > δ^2`.
pub fn trace_reduction(lambda: &Partition) -> Result<ReductionTrace> {
    let n = lambda.size();
    let delta = lambda.diagonal();
    if n <= delta * delta {
        return Err(Error::hypothesis(format!(
            "n = {n} must exceed delta^2 = {}",
            delta * delta
        )));
    }
    let tilde = lambda_tilde(lambda);
    let n1 = tilde.size();
    let s0 = last_long(tilde.parts().iter().copied(), delta);
    let tilde_conj = tilde.conjugate();
    let t0 = last_long(tilde_conj.parts().iter().copied(), delta);
    let conjugated = s0 < t0;
    let (work, s, t) = if conjugated {
        (tilde_conj, t0, s0)
    } else {
        (tilde.clone(), s0, t0)
    };
    if s == 0 {
        return Err(Error::internal("no row of lambda~ is longer than delta"));
    }
    let mu = if s == delta {
        work
    } else {
        let mut parts = work.parts().to_vec();
        for (k, i) in (s + 2..=delta).enumerate() {
            parts[i - 1] = delta - (k + 1);
        }
        Partition::new(parts)?
    };
    let n2 = mu.size();
    let delta_mu = mu.diagonal();

    if n1 + delta * delta < n + delta {
        return Err(Error::internal(format!(
            "n1 = {n1} is below n - delta^2 + delta"
        )));
    }
    let expected_n2 = if s < delta {
        n1 - (delta - s - 1) * (delta - s) / 2
    } else {
        n1
    };
    if n2 != expected_n2 {
        return Err(Error::internal(format!(
            "n2 = {n2}, expected {expected_n2}"
        )));
    }
    if delta_mu < delta / 2 + 1 {
        return Err(Error::internal(format!(
            "delta(mu) = {delta_mu} is below [delta/2] + 1"
        )));
    }
    if !(contains(&mu, lambda) || contains(&mu, &lambda.conjugate())) {
        return Err(Error::internal(
            "mu is contained in neither lambda nor lambda'",
        ));
    }

    let trimmed = delta_mu > 0 && mu.part(delta_mu) == delta_mu;
    let strict_shape = if trimmed {
        mu.remove_cells(&[Cell::new(delta_mu, delta_mu)])?
    } else {
        mu.clone()
    };
    Ok(ReductionTrace {
        input: lambda.clone(),
        delta,
        lambda_tilde: tilde,
        s,
        t,
        conjugated,
        mu,
        n1,
        n2,
        delta_mu,
        rho_mu: None,
        strict_shape,
        trimmed,
    })
}

/// The reduction under its hypotheses `δ >= 18α`, `λ_1, λ'_1 <= n/α` and
/// `n > δ^2`; also requires the reduced shape to meet the typing
/// hypotheses.
pub fn reduce(lambda: &Partition, alpha: &Rational) -> Result<ReductionTrace> {
    check_alpha(alpha)?;
    let delta = lambda.diagonal();
    if alpha * 18usize > delta {
        return Err(Error::hypothesis(format!(
            "delta = {delta} is below 18 alpha = {}",
            alpha * 18usize
        )));
    }
    check_row_column_bounds(lambda, alpha)?;
    let mut trace = trace_reduction(lambda)?;
    let rho_mu = rho(trace.strict_shape.diagonal(), alpha);
    trace.rho_mu = Some(
        rho_mu
            .try_into()
            .map_err(|_| Error::hypothesis("rho(mu) does not fit in a machine word"))?,
    );
    check_typing_hypotheses(&trace.strict_shape, alpha)
        .map_err(|e| Error::hypothesis(format!("reduced shape: {e}")))?;
    Ok(trace)
}

impl Certifier {
    /// Runs [`reduce`], the strict bound on the reduced shape, and lifts it
    /// to `λ` by containment.
    pub fn general_bound(&self, lambda: &Partition, alpha: &Rational) -> Result<BoundCertificate> {
        let trace = reduce(lambda, alpha)?;
        let typing = cell_typing(&trace.strict_shape, alpha)?;
        let strict = self.strict_from_typing(&typing);
        let strict_exponent = strict
            .exponent
            .clone()
            .expect("strict certificates carry an exponent");

        let n = lambda.size();
        let delta = trace.delta;
        let rho_lambda: usize = rho(delta, alpha)
            .try_into()
            .map_err(|_| Error::hypothesis("rho does not fit in a machine word"))?;
        let correction = &Rational::new(5 * delta * delta, 2) + &(alpha * rho_lambda);
        let exponent = &Rational::from(n) - &correction;

        let f = degree(lambda);
        let main = self.compare_power("general", &f, alpha, &exponent);
        let lifted = self.compare_power("lifted_strict", &f, alpha, &strict_exponent);
        let containment =
            Comparison::exact_integers("containment", &f, &degree(&trace.strict_shape));

        let mut cert =
            BoundCertificate::from_main(BoundName::General, lambda, Some(exponent.clone()), main)
                .rational_param("alpha", alpha)
                .param("delta", delta)
                .param("rho", rho_lambda)
                .param("s", trace.s)
                .param("t", trace.t)
                .param("conjugated", trace.conjugated)
                .param("n1", trace.n1)
                .param("n2", trace.n2)
                .param("delta_mu", trace.delta_mu)
                .param("trimmed", trace.trimmed)
                .param("exponent_chain_holds", exponent <= strict_exponent);
        cert.checks = vec![lifted, containment];
        cert.dispatched = Some(Box::new(strict));
        Ok(cert)
    }
}
