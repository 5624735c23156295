//! Integer partitions and their Young diagrams.
//!
//! Rows and columns are 1-based throughout, matching the usual `(i, j)`
//! convention for cells. Reading a part past the end of the list yields 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The same cell in the conjugate diagram.
    pub const fn transpose(self) -> Self {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive parts, stored without trailing
/// zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the parts
    /// are weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParts(parts));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
            size: rows * cols,
        }
    }

    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, the length of the first row.
    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let mut cols = vec![0usize; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition {
            parts: cols,
            size: self.size,
        }
    }

    /// Hook number `(λ_i - j) + (λ'_j - i) + 1` of a cell.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutOfDiagram {
                row: cell.row,
                col: cell.col,
            });
        }
        let leg = self.parts[cell.row..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .count();
        Ok(self.part(cell.row) - cell.col + leg + 1)
    }

    /// All hook numbers, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (0..len)
                    .map(|c| (len - c - 1) + (conj.parts[c] - r - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Iterates the cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Side of the largest square contained in the diagram.
    pub fn diagonal(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Membership in the `k x l` hook: `λ_{k+1} <= l`.
    pub fn in_hook_class(&self, k: usize, l: usize) -> bool {
        self.part(k + 1) <= l
    }

    /// Corner cells (hook number 1), top to bottom.
    pub fn corner_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Removes a set of cells whose complement is again a diagram.
    pub fn remove_cells(&self, cells: &[Cell]) -> Result<Partition> {
        let mut per_row: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &c in cells {
            if !self.contains_cell(c) {
                return Err(Error::CellOutOfDiagram {
                    row: c.row,
                    col: c.col,
                });
            }
            per_row.entry(c.row).or_default().push(c.col);
        }
        let mut parts = self.parts.clone();
        for (row, mut cols) in per_row {
            cols.sort_unstable();
            let len = parts[row - 1];
            let keep = len - cols.len();
            // removed cells must be exactly the rightmost ones in the row
            for (offset, &col) in cols.iter().enumerate() {
                if col != keep + offset + 1 {
                    return Err(Error::NotRemovable { row, col });
                }
            }
            parts[row - 1] = keep;
        }
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] {
                // the row below sticks out past the shortened row
                return Err(Error::NotRemovable {
                    row: i,
                    col: parts[i - 1] + 1,
                });
            }
        }
        Ok(Partition::from_sorted_unchecked(parts))
    }

    /// True iff `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }
}

/// True iff `mu_i <= lambda_i` for all `i`.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.is_contained_in(lambda)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|e| Error::Parse {
                    what: "partition",
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidParts(parts));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Partitions of `n` in reverse lexicographic order, optionally bounded in
/// part size and number of parts.
pub fn enumerate_partitions(
    n: usize,
    max_part: Option<usize>,
    max_parts: Option<usize>,
) -> Partitions {
    Partitions::new(n, max_part.unwrap_or(n), max_parts.unwrap_or(n))
}

/// Iterator behind [`enumerate_partitions`].
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    max_parts: usize,
}

impl Partitions {
    fn new(n: usize, max_part: usize, max_parts: usize) -> Self {
        let current = greedy_fill(n, max_part, max_parts);
        Partitions { current, max_parts }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let mut tail = 0usize;
        for i in (0..cur.len()).rev() {
            if cur[i] > 1 {
                let slots = self.max_parts - (i + 1);
                if let Some(fill) = greedy_fill(tail + 1, cur[i] - 1, slots) {
                    cur[i] -= 1;
                    cur.truncate(i + 1);
                    cur.extend(fill);
                    return;
                }
            }
            tail += cur[i];
        }
        self.current = None;
    }
}

/// Lexicographically largest partition of `n` with parts `<= max_part` and at
/// most `slots` parts, if any.
fn greedy_fill(n: usize, max_part: usize, slots: usize) -> Option<Vec<usize>> {
    if n == 0 {
        return Some(Vec::new());
    }
    if max_part == 0 || n > max_part.saturating_mul(slots) {
        return None;
    }
    let mut out = Vec::with_capacity(n.div_ceil(max_part));
    let mut left = n;
    while left > 0 {
        let p = left.min(max_part);
        out.push(p);
        left -= p;
    }
    Some(out)
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.clone()?;
        self.advance();
        Some(Partition::from_sorted_unchecked(out))
    }
}
