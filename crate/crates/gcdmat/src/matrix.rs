//! Dense matrices of arbitrary-precision integers.
//!
//! Entries are addressed with 1-based `(i, j)` row/column indices, matching
//! the convention used throughout the identity checks. Storage is row-major.

use num_bigint::BigInt;
use num_traits::Zero;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CsvParseError {
    #[error("empty CSV input")]
    Empty,
    #[error("row {0} has {1} entries, expected {2}")]
    RaggedRow(usize, usize, usize),
    #[error("row {row}, column {col}: `{text}` is not a base-10 integer")]
    BadEntry {
        row: usize,
        col: usize,
        text: String,
    },
}

/// Dense `n_rows x n_cols` matrix of exact signed integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero matrix. Dimensions must be positive.
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        assert!(
            n_rows >= 1 && n_cols >= 1,
            "matrix dimensions must be positive"
        );
        IntMatrix {
            n_rows,
            n_cols,
            entries: vec![BigInt::zero(); n_rows * n_cols],
        }
    }

    /// Build a matrix from a function of the 1-based entry position.
    pub fn from_fn(
        n_rows: usize,
        n_cols: usize,
        mut f: impl FnMut(usize, usize) -> BigInt,
    ) -> Self {
        assert!(
            n_rows >= 1 && n_cols >= 1,
            "matrix dimensions must be positive"
        );
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for i in 1..=n_rows {
            for j in 1..=n_cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            n_rows,
            n_cols,
            entries,
        }
    }

    /// Build a square matrix from rows of machine integers (test convenience).
    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        assert!(!rows.is_empty(), "matrix dimensions must be positive");
        let n_cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        IntMatrix::from_fn(rows.len(), n_cols, |i, j| BigInt::from(rows[i - 1][j - 1]))
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            i >= 1 && i <= self.n_rows && j >= 1 && j <= self.n_cols,
            "entry ({i}, {j}) outside {}x{} matrix",
            self.n_rows,
            self.n_cols
        );
        &self.entries[(i - 1) * self.n_cols + (j - 1)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i >= 1 && i <= self.n_rows && j >= 1 && j <= self.n_cols);
        self.entries[(i - 1) * self.n_cols + (j - 1)] = value;
    }

    /// Rows as slices, top to bottom.
    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n_cols)
    }

    /// True when the matrix is diagonal (all off-diagonal entries zero).
    pub fn is_diagonal(&self) -> bool {
        self.rows()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, v)| i == j || v.is_zero()))
    }

    /// Row-major CSV: one line per row, base-10 entries, comma-separated,
    /// no header, trailing newline on every row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Parse the format produced by [`IntMatrix::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, CsvParseError> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let mut row = Vec::new();
            for (jdx, cell) in line.split(',').enumerate() {
                let cell = cell.trim();
                let value = BigInt::from_str(cell).map_err(|_| CsvParseError::BadEntry {
                    row: idx + 1,
                    col: jdx + 1,
                    text: cell.to_string(),
                })?;
                row.push(value);
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(CsvParseError::RaggedRow(idx + 1, row.len(), first.len()));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(CsvParseError::Empty);
        }
        let n_rows = rows.len();
        let n_cols = rows[0].len();
        Ok(IntMatrix {
            n_rows,
            n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}
