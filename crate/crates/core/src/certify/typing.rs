//! The four-type numbering of cells behind `f^λ >= α^(n - (δ^2 + αρ))`.
//!
//! Cells are peeled from the outside in and numbered `1, 2, ...` in the
//! order they are removed:
//!
//! 1. whole corner sets, while the current diagram has at least `2α`
//!    corners (round `i` gets color `i`);
//! 2. corners outside the `δ x δ` square, while there are at least `α` of
//!    them;
//! 3. the cells of what is left outside the `(δ+ρ) x (δ+ρ)` square, shell
//!    by shell from the outermost inwards;
//! 4. everything else, with the largest numbers.
//!
//! Every type 1-3 cell should satisfy `α h_N <= N`. The first cells of
//! round 1 have `h_N = 1`, so cells numbered `N < α` cannot; those are
//! listed in [`CellTyping::small_number_exempt`] and covered by the
//! aggregate check `Π N / h_N >= α^|T1 ∪ T2 ∪ T3|` in
//! [`Certifier::strict_bound`].

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{
    check_alpha, check_row_column_bounds, rho, BoundCertificate, BoundName, Certifier, Comparison,
    PowerProduct,
};
use crate::bigmath::{falling_factorial, ln_biguint};
use crate::degree::degree;
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellType {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl CellType {
    pub fn index(self) -> usize {
        self as usize
    }

    fn from_index(i: usize) -> Option<CellType> {
        Some(match i {
            1 => CellType::One,
            2 => CellType::Two,
            3 => CellType::Three,
            4 => CellType::Four,
            _ => return None,
        })
    }
}

/// One numbered cell. `color` is the peeling round for types 1 and 2, the
/// shell index for type 3 and 0 for type 4. `hook` is the hook length in
/// the original diagram.
///
/// Serialized as `[row, col, type, color, N, h]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellRecord {
    pub cell: Cell,
    pub cell_type: CellType,
    pub color: usize,
    pub number: usize,
    pub hook: usize,
}

impl Serialize for CellRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [
            self.cell.row,
            self.cell.col,
            self.cell_type.index(),
            self.color,
            self.number,
            self.hook,
        ]
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CellRecord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [row, col, ty, color, number, hook] = <[usize; 6]>::deserialize(d)?;
        let cell_type = CellType::from_index(ty)
            .ok_or_else(|| D::Error::custom(format!("bad cell type {ty}")))?;
        Ok(CellRecord {
            cell: Cell::new(row, col),
            cell_type,
            color,
            number,
            hook,
        })
    }
}

/// The full numbering of one diagram.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellTyping {
    pub partition: Partition,
    pub alpha: Rational,
    pub delta: usize,
    pub rho: usize,
    /// Largest `τ <= δ` with `λ'_1 > ... > λ'_(τ+1) >= δ`.
    pub tau: usize,
    pub r: usize,
    pub q: usize,
    pub s_rounds: Vec<usize>,
    pub t_rounds: Vec<usize>,
    /// `|T_1|, ..., |T_4|`.
    pub counts: [usize; 4],
    /// Numbers of the type 1-3 cells with `α h_N > N`; all are below `α`.
    pub small_number_exempt: Vec<usize>,
    /// Records ordered by number.
    pub cells: Vec<CellRecord>,
}

/// Checks the hypotheses of the typing construction and returns `(δ, τ)`.
pub fn check_typing_hypotheses(lambda: &Partition, alpha: &Rational) -> Result<(usize, usize)> {
    check_alpha(alpha)?;
    if lambda.is_empty() {
        return Err(Error::hypothesis("the typing needs n >= 1"));
    }
    let delta = lambda.diagonal();
    if alpha * 9usize > delta {
        return Err(Error::hypothesis(format!(
            "delta = {delta} is below 9 alpha = {}",
            alpha * 9usize
        )));
    }
    check_row_column_bounds(lambda, alpha)?;
    for i in 1..=delta {
        let next = if i < delta { lambda.part(i + 1) } else { delta };
        if lambda.part(i) <= next {
            let what = if i < delta {
                format!("lambda_{} = {}", i + 1, next)
            } else {
                format!("delta = {delta}")
            };
            return Err(Error::hypothesis(format!(
                "rows must strictly decrease down to delta: lambda_{i} = {} is not above {what}",
                lambda.part(i)
            )));
        }
    }
    let conj = lambda.conjugate();
    let mut tau = 0;
    while tau < delta && conj.part(tau + 2) < conj.part(tau + 1) && conj.part(tau + 2) >= delta {
        tau += 1;
    }
    Ok((delta, tau))
}

/// Numbers every cell of `λ` by the four-type procedure.
pub fn cell_typing(lambda: &Partition, alpha: &Rational) -> Result<CellTyping> {
    let (delta, tau) = check_typing_hypotheses(lambda, alpha)?;
    let rho: usize = rho(delta, alpha)
        .try_into()
        .map_err(|_| Error::hypothesis("rho does not fit in a machine word"))?;
    let n = lambda.size();
    let hooks = lambda.hook_lengths();
    let hook = |c: Cell| hooks[c.row - 1][c.col - 1];
    let mut cells = Vec::with_capacity(n);
    let mut push = |cell: Cell, cell_type, color| {
        let number = cells.len() + 1;
        cells.push(CellRecord {
            cell,
            cell_type,
            color,
            number,
            hook: hook(cell),
        });
    };

    let mut current = lambda.clone();
    let two_alpha = alpha * 2usize;
    let mut s_rounds = Vec::new();
    loop {
        let corners = current.corner_cells();
        if corners.is_empty() || two_alpha > corners.len() {
            break;
        }
        let color = s_rounds.len() + 1;
        corners.iter().for_each(|&c| push(c, CellType::One, color));
        current = current.remove_cells(&corners)?;
        s_rounds.push(corners.len());
    }
    let r = s_rounds.len();

    let mut t_rounds = Vec::new();
    loop {
        let outside: Vec<Cell> = current
            .corner_cells()
            .into_iter()
            .filter(|c| c.row > delta || c.col > delta)
            .collect();
        if outside.is_empty() || alpha > &Rational::from(outside.len()) {
            break;
        }
        let color = r + t_rounds.len() + 1;
        outside.iter().for_each(|&c| push(c, CellType::Two, color));
        current = current.remove_cells(&outside)?;
        t_rounds.push(outside.len());
    }
    let q = t_rounds.len();

    let mu = current;
    let inner = delta + rho;
    let outer = mu.first_part().max(mu.len());
    for m in (inner + 1..=outer).rev() {
        for j in 1..=mu.part(m).min(m) {
            push(Cell::new(m, j), CellType::Three, m);
        }
        for i in 1..m {
            if mu.part(i) >= m {
                push(Cell::new(i, m), CellType::Three, m);
            }
        }
    }
    for c in mu.cells().filter(|c| c.row <= inner && c.col <= inner) {
        push(c, CellType::Four, 0);
    }

    let mut counts = [0usize; 4];
    for rec in &cells {
        counts[rec.cell_type.index() - 1] += 1;
    }
    let small_number_exempt = cells
        .iter()
        .filter(|rec| rec.cell_type != CellType::Four && !cell_bound_holds(alpha, rec))
        .map(|rec| rec.number)
        .collect();
    let typing = CellTyping {
        partition: lambda.clone(),
        alpha: alpha.clone(),
        delta,
        rho,
        tau,
        r,
        q,
        s_rounds,
        t_rounds,
        counts,
        small_number_exempt,
        cells,
    };
    typing.verify()?;
    Ok(typing)
}

fn cell_bound_holds(alpha: &Rational, rec: &CellRecord) -> bool {
    alpha * rec.hook <= rec.number
}

impl CellTyping {
    pub fn n(&self) -> usize {
        self.partition.size()
    }

    pub fn records_of(&self, ty: CellType) -> impl Iterator<Item = &CellRecord> {
        self.cells.iter().filter(move |rec| rec.cell_type == ty)
    }

    /// Type 1-3 cells where `α h_N <= N` does not hold as literally stated.
    pub fn cell_bound_violations(&self) -> Vec<&CellRecord> {
        self.cells
            .iter()
            .filter(|rec| rec.cell_type != CellType::Four && !cell_bound_holds(&self.alpha, rec))
            .collect()
    }

    /// `|T_1| >= 2αr + αδ`.
    pub fn type1_count_holds(&self) -> bool {
        let bound = &self.alpha * (2 * self.r + self.delta);
        bound <= self.counts[0]
    }

    /// `|T_4| <= δ^2 + αρ`.
    pub fn type4_count_holds(&self) -> bool {
        let bound = &(&self.alpha * self.rho) + &Rational::from(self.delta * self.delta);
        bound >= self.counts[3]
    }

    /// `(Π_{T_4} h, n (n-1) ... (n - |T_4| + 1))`.
    pub fn type4_products(&self) -> (BigUint, BigUint) {
        let hooks: BigUint = self
            .records_of(CellType::Four)
            .map(|rec| BigUint::from(rec.hook))
            .product();
        let falling = falling_factorial(self.n() as u64, self.counts[3] as u64);
        (hooks, falling)
    }

    /// Fills the type-4 cells row by row with `1..=|T_4|` and checks they
    /// form a diagram on which that filling is standard, with
    /// `n + 1 - t >= h` for each cell.
    pub fn type4_filling_holds(&self) -> bool {
        let mut rows: Vec<usize> = Vec::new();
        let mut t4: Vec<Cell> = self.records_of(CellType::Four).map(|r| r.cell).collect();
        t4.sort();
        for c in &t4 {
            if c.row > rows.len() {
                rows.resize(c.row, 0);
            }
            rows[c.row - 1] += 1;
            if rows[c.row - 1] != c.col {
                return false;
            }
        }
        if Partition::new(rows).is_err() {
            return false;
        }
        let n = self.n();
        let hooks = self.partition.hook_lengths();
        t4.iter()
            .enumerate()
            .all(|(k, c)| n - k >= hooks[c.row - 1][c.col - 1])
    }

    /// Rechecks every invariant from the stored records. Used after
    /// construction and on records read back from JSON.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::internal(msg));
        let lambda = &self.partition;
        let n = lambda.size();
        if self.cells.len() != n {
            return fail(format!("{} records for n = {n}", self.cells.len()));
        }
        let hooks = lambda.hook_lengths();
        let mut seen = vec![Vec::new(); lambda.len()];
        for (row, len) in seen.iter_mut().zip(lambda.parts()) {
            *row = vec![false; *len];
        }
        let mut last_type = CellType::One;
        for (k, rec) in self.cells.iter().enumerate() {
            let c = rec.cell;
            if rec.number != k + 1 {
                return fail(format!("record {k} carries number {}", rec.number));
            }
            if !lambda.contains_cell(c) || std::mem::replace(&mut seen[c.row - 1][c.col - 1], true)
            {
                return fail(format!("cell {c} is outside lambda or numbered twice"));
            }
            if rec.hook != hooks[c.row - 1][c.col - 1] {
                return fail(format!("cell {c} records hook {}", rec.hook));
            }
            if rec.cell_type < last_type {
                return fail(format!(
                    "type {:?} numbered after {last_type:?}",
                    rec.cell_type
                ));
            }
            last_type = rec.cell_type;
        }

        let mut counts = [0usize; 4];
        self.cells
            .iter()
            .for_each(|rec| counts[rec.cell_type.index() - 1] += 1);
        if counts != self.counts {
            return fail(format!(
                "counts {:?} do not match records {counts:?}",
                self.counts
            ));
        }
        let round_sizes = |ty: CellType, offset: usize, rounds: usize| {
            let mut sizes = vec![0usize; rounds];
            for rec in self.records_of(ty) {
                match rec.color.checked_sub(offset + 1) {
                    Some(i) if i < rounds => sizes[i] += 1,
                    _ => return None,
                }
            }
            Some(sizes)
        };
        if self.s_rounds.len() != self.r
            || round_sizes(CellType::One, 0, self.r).as_ref() != Some(&self.s_rounds)
        {
            return fail("type-1 rounds do not match their colors".into());
        }
        if self.t_rounds.len() != self.q
            || round_sizes(CellType::Two, self.r, self.q).as_ref() != Some(&self.t_rounds)
        {
            return fail("type-2 rounds do not match their colors".into());
        }
        if self.s_rounds.first().is_some_and(|&s1| s1 < self.delta) {
            return fail(format!("s_1 = {} is below delta", self.s_rounds[0]));
        }
        let two_alpha = &self.alpha * 2usize;
        if let Some(s) = self.s_rounds.iter().find(|&&s| two_alpha > s) {
            return fail(format!("a type-1 round has {s} < 2 alpha cells"));
        }
        if let Some(t) = self.t_rounds.iter().find(|&&t| self.alpha > t) {
            return fail(format!("a type-2 round has {t} < alpha cells"));
        }

        let violations = self.cell_bound_violations();
        let numbers: Vec<usize> = violations.iter().map(|rec| rec.number).collect();
        if numbers != self.small_number_exempt {
            return fail("exempt list does not match the records".into());
        }
        if let Some(rec) = violations.iter().find(|rec| self.alpha <= rec.number) {
            return fail(format!(
                "alpha * h_N <= N fails at N = {} (cell {}, h = {})",
                rec.number, rec.cell, rec.hook
            ));
        }
        if !self.type1_count_holds() {
            return fail(format!(
                "|T_1| = {} is below 2 alpha r + alpha delta",
                self.counts[0]
            ));
        }
        if !self.type4_count_holds() {
            return fail(format!(
                "|T_4| = {} exceeds delta^2 + alpha rho",
                self.counts[3]
            ));
        }
        let (hooks4, falling) = self.type4_products();
        if hooks4 > falling {
            return fail("type-4 hook product exceeds the falling factorial".into());
        }
        if !self.type4_filling_holds() {
            return fail("type-4 cells do not carry a standard filling with N >= h".into());
        }
        Ok(())
    }

    /// One character per cell, the cell's type.
    pub fn grid(&self) -> String {
        let mut rows: Vec<Vec<u8>> = self
            .partition
            .parts()
            .iter()
            .map(|&len| vec![b'?'; len])
            .collect();
        for rec in &self.cells {
            rows[rec.cell.row - 1][rec.cell.col - 1] = b'0' + rec.cell_type.index() as u8;
        }
        let mut out = String::new();
        for row in rows {
            let _ = writeln!(out, "{}", String::from_utf8(row).expect("ascii digits"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("typing serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

impl Certifier {
    /// `f^λ >= α^(n - (δ^2 + αρ))` through the cell typing, with the sharper
    /// exponent `n - |T_4|` and the proof's product steps as checks.
    pub fn strict_bound(&self, lambda: &Partition, alpha: &Rational) -> Result<BoundCertificate> {
        let typing = cell_typing(lambda, alpha)?;
        Ok(self.strict_from_typing(&typing))
    }

    pub(crate) fn strict_from_typing(&self, typing: &CellTyping) -> BoundCertificate {
        let lambda = &typing.partition;
        let alpha = &typing.alpha;
        let n = lambda.size();
        let f = degree(lambda);
        let correction = &Rational::from(typing.delta * typing.delta) + &(alpha * typing.rho);
        let exponent = &Rational::from(n) - &correction;
        let t4 = typing.counts[3];

        let main = self.compare_power("strict", &f, alpha, &exponent);
        let sharper = self.compare_power("sharper", &f, alpha, &Rational::from(n - t4));

        let peeled = n - t4;
        let numbers: BigUint = typing.cells[..peeled]
            .iter()
            .map(|rec| BigUint::from(rec.number))
            .product();
        let hooks: BigUint = typing.cells[..peeled]
            .iter()
            .map(|rec| BigUint::from(rec.hook))
            .product();
        let (p, q) = alpha.to_biguint_parts();
        let aggregate = Comparison::decide(
            "peeled_ratio_vs_alpha_pow",
            ln_biguint(&numbers) - ln_biguint(&hooks),
            peeled as f64 * alpha.ln(),
            &PowerProduct::new()
                .times(numbers, 1)
                .times(q, peeled as u64),
            &PowerProduct::new().times(hooks, 1).times(p, peeled as u64),
            self.exact_bit_budget,
        );
        let (hooks4, falling) = typing.type4_products();
        let type4 = Comparison::exact_integers("type4_falling_factorial", &falling, &hooks4);

        let mut cert = BoundCertificate::from_main(BoundName::Strict, lambda, Some(exponent), main)
            .rational_param("alpha", alpha)
            .param("delta", typing.delta)
            .param("rho", typing.rho)
            .param("tau", typing.tau)
            .param("r", typing.r)
            .param("q", typing.q)
            .param("t1", typing.counts[0])
            .param("t2", typing.counts[1])
            .param("t3", typing.counts[2])
            .param("t4", t4)
            .param("small_number_exempt", typing.small_number_exempt.len());
        cert.checks = vec![sharper, aggregate, type4];
        cert
    }
}
