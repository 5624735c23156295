//! Lower bound `f^λ >= α^n / n^m` for diagrams inside a `k x l` hook.

use num_bigint::BigUint;
use serde::Serialize;

use super::{
    check_alpha, check_row_column_bounds, BoundCertificate, BoundName, Certifier, Comparison,
    PowerProduct,
};
use crate::bigmath::{factorial, ln_biguint};
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::rational::Rational;

/// The hook-strip construction for one diagram.
///
/// When `k < l` the construction runs on the conjugate diagram with the
/// roles of `k` and `l` exchanged; `conjugated` is then set and all cell
/// sets refer to the conjugate.
#[derive(Clone, Debug, Serialize)]
pub struct StripCertificate {
    pub k: usize,
    pub l: usize,
    pub conjugated: bool,
    /// `t_1..t_{k+l}`: first the lengths of columns `1..l`, then the row
    /// overhangs `λ_s - l` for `s = 1..k`.
    pub t: Vec<usize>,
    pub m: usize,
    pub cells_a: Vec<Cell>,
    pub cells_b: Vec<Cell>,
    pub cells_c: Vec<Cell>,
    /// `n ln α - m ln n`.
    pub bound_log: f64,
    pub certificate: BoundCertificate,
}

/// The `t`-sequence for `λ ∈ H(k, l)`.
pub fn strip_sequence(lambda: &Partition, k: usize, l: usize) -> Vec<usize> {
    let conj = lambda.conjugate();
    let cols = (1..=l).map(|s| conj.part(s));
    let rows = (1..=k).map(|s| lambda.part(s).saturating_sub(l));
    cols.chain(rows).collect()
}

/// `(2l + k - 1) k / 2`, the size of the staircase `(l+k-1, ..., l)`.
pub fn strip_exponent(k: usize, l: usize) -> usize {
    if k == 0 {
        return 0;
    }
    (2 * l + k - 1) * k / 2
}

impl Certifier {
    pub fn strip_bound(
        &self,
        lambda: &Partition,
        k: usize,
        l: usize,
        alpha: &Rational,
    ) -> Result<StripCertificate> {
        check_alpha(alpha)?;
        let n = lambda.size();
        if n == 0 {
            return Err(Error::hypothesis("the strip bound needs n >= 1"));
        }
        if !lambda.in_hook_class(k, l) {
            return Err(Error::hypothesis(format!(
                "lambda_{} = {} exceeds l = {l}, so lambda is not in H({k},{l})",
                k + 1,
                lambda.part(k + 1)
            )));
        }
        check_row_column_bounds(lambda, alpha)?;

        let conjugated = k < l;
        let (shape, k, l) = if conjugated {
            (lambda.conjugate(), l, k)
        } else {
            (lambda.clone(), k, l)
        };
        let t = strip_sequence(&shape, k, l);
        if t.iter().sum::<usize>() != n {
            return Err(Error::internal(format!(
                "t-sequence {t:?} does not sum to n = {n}"
            )));
        }
        let m = strip_exponent(k, l);

        let hooks = shape.hook_lengths();
        let hook = |c: Cell| hooks[c.row - 1][c.col - 1];
        let staircase = |i: usize| if i <= k { l + k - i } else { 0 };
        let (mut cells_a, mut cells_b, mut cells_c) = (Vec::new(), Vec::new(), Vec::new());
        for cell in shape.cells() {
            if cell.col <= staircase(cell.row) {
                cells_a.push(cell);
            } else if cell.row > k {
                cells_b.push(cell);
            } else {
                cells_c.push(cell);
            }
        }
        if cells_a.len() > m {
            return Err(Error::internal(format!(
                "|A| = {} > m = {m}",
                cells_a.len()
            )));
        }
        for &c in &cells_b {
            let i = c.row - k;
            if hook(c) + i > t[c.col - 1] {
                return Err(Error::internal(format!(
                    "hook {} of B-cell {c} is not below t_{} - {i} + 1",
                    hook(c),
                    c.col
                )));
            }
        }
        for &c in &cells_c {
            let j = c.col - staircase(c.row);
            if hook(c) + j > t[l + c.row - 1] + 1 {
                return Err(Error::internal(format!(
                    "hook {} of C-cell {c} exceeds t_{} - {j} + 1",
                    hook(c),
                    l + c.row
                )));
            }
        }
        let prod =
            |cells: &[Cell]| -> BigUint { cells.iter().map(|&c| BigUint::from(hook(c))).product() };
        let prod_a = prod(&cells_a);
        let n_pow_m = BigUint::from(n).pow(m as u32);
        if prod_a > n_pow_m {
            return Err(Error::internal("hook product over A exceeds n^m"));
        }
        let prod_bc = prod(&cells_b) * prod(&cells_c);
        let t_factorials: BigUint = t.iter().map(|&ti| factorial(ti as u64)).product();
        if prod_bc > t_factorials {
            return Err(Error::internal(
                "hook product over B and C exceeds the t-factorials",
            ));
        }

        let f = degree(lambda);
        let n_fact = factorial(n as u64);
        let (p, q) = alpha.to_biguint_parts();
        let ln_alpha = alpha.ln();
        let ln_n = (n as f64).ln();
        let bound_log = n as f64 * ln_alpha - m as f64 * ln_n;

        // f * n^m * q^n >= p^n
        let main = Comparison::decide(
            "strip",
            ln_biguint(&f),
            bound_log,
            &PowerProduct::new()
                .times(f.clone(), 1)
                .times(n, m as u64)
                .times(q.clone(), n as u64),
            &PowerProduct::new().times(p.clone(), n as u64),
            self.exact_bit_budget,
        );
        // f >= n! / (n^m Π t_i!)
        let intermediate = Comparison::exact_integers(
            "degree_vs_multinomial_over_n_pow_m",
            &(&f * &n_pow_m * &t_factorials),
            &n_fact,
        );
        // n! / Π t_i! >= α^n
        let multinomial = Comparison::decide(
            "multinomial_vs_alpha_pow_n",
            ln_biguint(&n_fact) - ln_biguint(&t_factorials),
            n as f64 * ln_alpha,
            &PowerProduct::new()
                .times(n_fact.clone(), 1)
                .times(q, n as u64),
            &PowerProduct::new()
                .times(t_factorials.clone(), 1)
                .times(p, n as u64),
            self.exact_bit_budget,
        );

        let mut certificate = BoundCertificate::from_main(BoundName::Strip, lambda, None, main)
            .rational_param("alpha", alpha)
            .param("k", k)
            .param("l", l)
            .param("m", m)
            .param("t", t.clone())
            .param("conjugated", conjugated);
        certificate.checks = vec![intermediate, multinomial];

        Ok(StripCertificate {
            k,
            l,
            conjugated,
            t,
            m,
            cells_a,
            cells_b,
            cells_c,
            bound_log,
            certificate,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::Verdict;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_sequence() {
        let lam = p("9,6,4,2,2,1");
        assert_eq!(strip_sequence(&lam, 4, 3), vec![6, 5, 3, 6, 3, 1, 0]);
        // α = 2 violates λ_1 = 9 <= 24/2? No: 9 <= 12 holds, λ'_1 = 6 <= 12.
        let cert = Certifier::default()
            .strip_bound(&lam, 4, 3, &r("2"))
            .unwrap();
        assert_eq!(cert.t.iter().sum::<usize>(), 24);
        assert_eq!(cert.m, 18);
        // μ = (6,5,4,3): A is λ ∩ μ
        let a: Vec<_> = cert.cells_a.iter().map(|c| (c.row, c.col)).collect();
        let mut expect = Vec::new();
        for (row, len) in [(1, 6), (2, 5), (3, 4), (4, 2)] {
            expect.extend((1..=len).map(|c| (row, c)));
        }
        assert_eq!(a, expect);
        let b: Vec<_> = cert.cells_b.iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(b, vec![(5, 1), (5, 2), (6, 1)]);
        let c: Vec<_> = cert.cells_c.iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(c, vec![(1, 7), (1, 8), (1, 9), (2, 6)]);
        assert_eq!(
            cert.cells_a.len() + cert.cells_b.len() + cert.cells_c.len(),
            24
        );
    }

    #[test]
    fn alpha_must_exceed_one() {
        let err = Certifier::default()
            .strip_bound(&p("9,6,4,2,2,1"), 4, 3, &r("1"))
            .unwrap_err();
        assert!(err.is_hypothesis());
    }

    #[test]
    fn small_square_fails_the_bound() {
        // m = (0 + 2 - 1) * 2 / 2 = 1, so the bound claims f >= 2^4 / 4 = 4,
        // while f^(2,2) = 2.
        let cert = Certifier::default()
            .strip_bound(&p("2,2"), 2, 0, &r("2"))
            .unwrap();
        assert_eq!(cert.m, 1);
        assert_eq!(cert.certificate.verdict, Verdict::Fail);
        assert!((cert.bound_log - 4f64.ln()).abs() < 1e-12);
        // the multinomial step 4!/(2!2!) = 6 >= 16 is the one that breaks
        let step = cert
            .certificate
            .check("multinomial_vs_alpha_pow_n")
            .unwrap();
        assert_eq!(step.verdict, Verdict::Fail);
        let inter = cert
            .certificate
            .check("degree_vs_multinomial_over_n_pow_m")
            .unwrap();
        assert_eq!(inter.verdict, Verdict::Pass);
    }

    #[test]
    fn conjugate_case_swaps_parameters() {
        let lam = p("3,3,2,2,1,1");
        let alpha = r("3/2");
        let direct = Certifier::default()
            .strip_bound(&lam, 1, 3, &alpha)
            .unwrap();
        assert!(direct.conjugated);
        // m = (2k + l - 1) l / 2 with the original k = 1, l = 3
        assert_eq!(direct.m, (2 + 3 - 1) * 3 / 2);
        let swapped = Certifier::default()
            .strip_bound(&lam.conjugate(), 3, 1, &alpha)
            .unwrap();
        assert_eq!(direct.m, swapped.m);
        assert_eq!(direct.certificate.verdict, swapped.certificate.verdict);
    }

    #[test]
    fn hypothesis_gates() {
        let c = Certifier::default();
        assert!(c
            .strip_bound(&p("9,6,4,2,2,1"), 1, 1, &r("2"))
            .unwrap_err()
            .is_hypothesis());
        assert!(c
            .strip_bound(&p("5,1"), 2, 2, &r("2"))
            .unwrap_err()
            .is_hypothesis());
        assert!(c
            .strip_bound(&Partition::empty(), 0, 0, &r("2"))
            .unwrap_err()
            .is_hypothesis());
    }
}
