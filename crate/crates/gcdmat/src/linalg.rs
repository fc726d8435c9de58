//! Exact linear algebra over arbitrary-precision integers.
//!
//! Two determinant algorithms live here on purpose: fraction-free elimination
//! is the workhorse, and recursive cofactor expansion (capped at 8x8) is the
//! independent oracle the rest of the test suite compares it against.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest matrix accepted by [`det_cofactor`].
pub const COFACTOR_MAX: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}x{1} times {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("determinant requires a square matrix, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("cofactor expansion is capped at {COFACTOR_MAX}x{COFACTOR_MAX}, got {0}x{0}")]
    CofactorTooLarge(usize),
}

/// Exact matrix product.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    if a.n_cols() != b.n_rows() {
        return Err(LinalgError::DimensionMismatch(
            a.n_rows(),
            a.n_cols(),
            b.n_rows(),
            b.n_cols(),
        ));
    }
    let inner = a.n_cols();
    let mut out = IntMatrix::zeros(a.n_rows(), b.n_cols());
    for i in 1..=a.n_rows() {
        for j in 1..=b.n_cols() {
            let mut acc = BigInt::zero();
            for k in 1..=inner {
                let left = a.entry(i, k);
                if left.is_zero() {
                    continue;
                }
                acc += left * b.entry(k, j);
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Transpose; entry `(i, j)` of the result is entry `(j, i)` of the input.
pub fn transpose(a: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(a.n_cols(), a.n_rows(), |i, j| a.entry(j, i).clone())
}

fn to_grid(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    a.rows().map(|r| r.to_vec()).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate value is an exact integer: the update step divides by
/// the previous pivot, and that division leaves no remainder because each
/// working entry is a minor of the original matrix. Zero pivots are handled
/// by searching the column below and swapping rows with sign tracking; a
/// fully zero column means the determinant is zero.
pub fn det_bareiss(a: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.n_rows(), a.n_cols()));
    }
    let n = a.n_rows();
    let mut m = to_grid(a);
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -det } else { det })
}

/// Exact determinant by recursive cofactor expansion along the first row.
///
/// Exponential cost, so inputs are capped at [`COFACTOR_MAX`]; this exists
/// as an independent check on [`det_bareiss`], not as a workhorse.
pub fn det_cofactor(a: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare(a.n_rows(), a.n_cols()));
    }
    if a.n_rows() > COFACTOR_MAX {
        return Err(LinalgError::CofactorTooLarge(a.n_rows()));
    }
    let grid = to_grid(a);
    Ok(det_cofactor_grid(&grid))
}

fn det_cofactor_grid(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigInt::zero();
    for (col, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top * det_cofactor_grid(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Rank over the rationals by fraction-free elimination with exact pivot
/// tests. Columns with no usable pivot are skipped, so rectangular and
/// rank-deficient inputs are fine.
pub fn rank_ff(a: &IntMatrix) -> usize {
    let rows = a.n_rows();
    let cols = a.n_cols();
    let mut m = to_grid(a);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}
