//! Standard Young tableaux, enumerated exhaustively for the small-`n`
//! oracles.

use crate::partition::{Cell, Partition};

/// A standard filling of a shape with `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates rows and columns strictly increase and entries are `1..=n`.
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Option<Self> {
        let n = shape.size();
        if rows.len() != shape.len() || rows.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p) {
            return None;
        }
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                return None;
            }
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        (rows_ok && cols_ok).then_some(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entry(&self, cell: Cell) -> usize {
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &e)| (Cell::new(r + 1, c + 1), e))
        })
    }
}

/// Every standard tableau of a shape, by depth-first placement of
/// `1, 2, ..., n`.
pub struct StandardTableaux {
    shape: Partition,
    // stack of (row chosen for entry k) with the filling built so far
    choices: Vec<usize>,
    rows: Vec<Vec<usize>>,
    started: bool,
    done: bool,
}

impl StandardTableaux {
    pub fn new(shape: &Partition) -> Self {
        StandardTableaux {
            shape: shape.clone(),
            choices: Vec::with_capacity(shape.size()),
            rows: vec![Vec::new(); shape.len()],
            started: false,
            done: false,
        }
    }

    fn can_place(&self, row: usize) -> bool {
        let len = self.rows[row].len();
        len < self.shape.parts()[row] && (row == 0 || self.rows[row - 1].len() > len)
    }

    /// Places entries greedily starting at row `from` for the next entry.
    fn descend(&mut self, mut from: usize) -> bool {
        let n = self.shape.size();
        while self.choices.len() < n {
            match (from..self.rows.len()).find(|&r| self.can_place(r)) {
                Some(r) => {
                    self.rows[r].push(self.choices.len() + 1);
                    self.choices.push(r);
                    from = 0;
                }
                None => {
                    // backtrack to the previous entry and try its next row
                    let Some(r) = self.choices.pop() else {
                        return false;
                    };
                    self.rows[r].pop();
                    from = r + 1;
                }
            }
        }
        true
    }
}

impl Iterator for StandardTableaux {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.descend(0)
        } else {
            match self.choices.pop() {
                Some(r) => {
                    self.rows[r].pop();
                    self.descend(r + 1)
                }
                None => false,
            }
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(StandardTableau {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_all_fillings_of_small_shapes() {
        let shape: Partition = "3,2".parse().unwrap();
        let all: Vec<_> = StandardTableaux::new(&shape).collect();
        assert_eq!(all.len(), 5);
        for t in &all {
            assert!(StandardTableau::new(shape.clone(), t.rows.clone()).is_some());
        }
        let empty: Vec<_> = StandardTableaux::new(&Partition::empty()).collect();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn rejects_non_standard_fillings() {
        let shape: Partition = "2,1".parse().unwrap();
        assert!(StandardTableau::new(shape.clone(), vec![vec![1, 2], vec![3]]).is_some());
        assert!(StandardTableau::new(shape.clone(), vec![vec![1, 3], vec![2]]).is_some());
        assert!(StandardTableau::new(shape.clone(), vec![vec![2, 1], vec![3]]).is_none());
        assert!(StandardTableau::new(shape.clone(), vec![vec![3, 2], vec![1]]).is_none());
        assert!(StandardTableau::new(shape, vec![vec![1, 1], vec![3]]).is_none());
    }
}
