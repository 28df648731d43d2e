//! Ragged row-indexed tables of big integers.
//!
//! Each producer fixes its own row range and per-row column range; a table
//! records both offsets so `get(n, k)` speaks the producer's indexing. Tables
//! are immutable once built.

use num_bigint::BigInt;

/// A ragged triangle of `BigInt` values with explicit row/column offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularTable {
    row_offset: usize,
    col_offset: usize,
    rows: Vec<Vec<BigInt>>,
}

impl TriangularTable {
    /// Wraps rows built elsewhere. Row `i` of `rows` is addressed as
    /// `n = row_offset + i`, and within it entry `j` as `k = col_offset + j`.
    pub fn new(row_offset: usize, col_offset: usize, rows: Vec<Vec<BigInt>>) -> Self {
        TriangularTable {
            row_offset,
            col_offset,
            rows,
        }
    }

    pub fn row_offset(&self) -> usize {
        self.row_offset
    }

    pub fn col_offset(&self) -> usize {
        self.col_offset
    }

    /// Number of stored rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Index of the last stored row, or `None` when empty.
    pub fn n_max(&self) -> Option<usize> {
        (!self.rows.is_empty()).then(|| self.row_offset + self.rows.len() - 1)
    }

    /// Row `n` in the producer's indexing.
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        n.checked_sub(self.row_offset)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    /// Entry `(n, k)` in the producer's indexing.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.row(n)
            .and_then(|row| k.checked_sub(self.col_offset).and_then(|j| row.get(j)))
    }

    /// Rows paired with their `n` index, in order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| (self.row_offset + i, row.as_slice()))
    }

    /// All values read row by row, the order used by b-file emission.
    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.rows.iter().flatten()
    }
}
