//! Structural exploration of matrices built from a two-argument function of
//! the row index and the gcd.
//!
//! The entry at `(i, j)` is `combine(h1(i), h2(gcd(i, j)))` for two unary
//! component functions and one of three binary combiners. The report carries
//! the exact determinant, the rank over the rationals, and two structural
//! flags. Which flags count as "structure" is this crate's choice: a zero
//! first row (which forces determinant 0) and symmetry.

use crate::arith::{gcd_raw, tabulate, Builtin, FunctionTable};
use crate::linalg::{det_bareiss, rank_ff, transpose};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Default size cap for [`explore_problem1`].
pub const DEFAULT_N_CAP: usize = crate::caps::DETERMINANT;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExploreError {
    #[error("n = {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("{side} table has {have} values, need {need}")]
    TableTooShort {
        side: &'static str,
        need: usize,
        have: usize,
    },
    #[error("n must be at least 1")]
    EmptySize,
    #[error("unknown combiner `{0}` (expected add, sub, or mul)")]
    UnknownCombiner(String),
}

/// How the two component values are combined into a matrix entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combiner {
    Add,
    Sub,
    Mul,
}

impl Combiner {
    pub fn token(self) -> &'static str {
        match self {
            Combiner::Add => "add",
            Combiner::Sub => "sub",
            Combiner::Mul => "mul",
        }
    }

    fn apply(self, a: &BigInt, b: &BigInt) -> BigInt {
        match self {
            Combiner::Add => a + b,
            Combiner::Sub => a - b,
            Combiner::Mul => a * b,
        }
    }
}

impl FromStr for Combiner {
    type Err = ExploreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "add" => Ok(Combiner::Add),
            "sub" => Ok(Combiner::Sub),
            "mul" => Ok(Combiner::Mul),
            other => Err(ExploreError::UnknownCombiner(other.to_string())),
        }
    }
}

/// A component function: a builtin to tabulate, or an explicit table.
#[derive(Debug, Clone)]
pub enum FnSpec {
    Builtin(Builtin),
    Table(FunctionTable),
}

impl FnSpec {
    fn display_name(&self) -> String {
        match self {
            FnSpec::Builtin(b) => b.name().to_string(),
            FnSpec::Table(t) => t.name().unwrap_or("custom").to_string(),
        }
    }

    fn resolve(&self, n: usize, side: &'static str) -> Result<FunctionTable, ExploreError> {
        match self {
            FnSpec::Builtin(b) => Ok(tabulate(*b, n).expect("n >= 1 validated by caller")),
            FnSpec::Table(t) => {
                if t.len() < n {
                    Err(ExploreError::TableTooShort {
                        side,
                        need: n,
                        have: t.len(),
                    })
                } else {
                    t.truncated(n).map_err(|_| ExploreError::EmptySize)
                }
            }
        }
    }
}

/// Matrix family to explore: entry `(i, j)` is
/// `combiner(left(i), right(gcd(i, j)))`.
#[derive(Debug, Clone)]
pub struct ExploreSpec {
    pub left: FnSpec,
    pub right: FnSpec,
    pub combiner: Combiner,
    pub n: usize,
}

/// Exploration outcome; `matrix` is filled only when requested.
#[derive(Debug, Clone)]
pub struct ExploreReport {
    pub left_name: String,
    pub right_name: String,
    pub combiner: Combiner,
    pub n: usize,
    pub determinant: BigInt,
    pub rank: usize,
    pub first_row_zero: bool,
    pub symmetric: bool,
    pub matrix: Option<IntMatrix>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ExploreJson<'a> {
    check: &'static str,
    params: ExploreParamsJson<'a>,
    passed: bool,
    witness: Option<()>,
    elapsed_ms: f64,
    structure: StructureJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct ExploreParamsJson<'a> {
    left: &'a str,
    right: &'a str,
    op: &'static str,
    n: usize,
}

#[derive(Serialize)]
struct StructureJson {
    det: String,
    rank: usize,
    first_row_zero: bool,
    symmetric: bool,
}

impl ExploreReport {
    /// One-line JSON in the same envelope as verification reports, plus a
    /// `structure` object; big integers serialize as base-10 strings.
    pub fn to_json(&self) -> String {
        let dto = ExploreJson {
            check: "explore_problem1",
            params: ExploreParamsJson {
                left: &self.left_name,
                right: &self.right_name,
                op: self.combiner.token(),
                n: self.n,
            },
            passed: true,
            witness: None,
            elapsed_ms: crate::verify::elapsed_ms(self.elapsed),
            structure: StructureJson {
                det: self.determinant.to_string(),
                rank: self.rank,
                first_row_zero: self.first_row_zero,
                symmetric: self.symmetric,
            },
            matrix: self.matrix.as_ref().map(|m| {
                m.rows()
                    .map(|row| row.iter().map(|v| v.to_string()).collect())
                    .collect()
            }),
        };
        serde_json::to_string(&dto).expect("report serialization cannot fail")
    }
}

/// Build the matrix described by `spec` and report determinant, rank, and
/// structural flags. Uses the default cap; see [`explore_with_cap`].
pub fn explore_problem1(
    spec: &ExploreSpec,
    emit_matrix: bool,
) -> Result<ExploreReport, ExploreError> {
    explore_with_cap(spec, emit_matrix, DEFAULT_N_CAP)
}

/// Same as [`explore_problem1`] with an explicit size cap.
pub fn explore_with_cap(
    spec: &ExploreSpec,
    emit_matrix: bool,
    cap: usize,
) -> Result<ExploreReport, ExploreError> {
    let n = spec.n;
    if n == 0 {
        return Err(ExploreError::EmptySize);
    }
    if n > cap {
        return Err(ExploreError::CapExceeded { n, cap });
    }
    let start = Instant::now();
    let left = spec.left.resolve(n, "left")?;
    let right = spec.right.resolve(n, "right")?;
    let matrix = IntMatrix::from_fn(n, n, |i, j| {
        let g = gcd_raw(i as u64, j as u64) as usize;
        spec.combiner.apply(left.get(i), right.get(g))
    });
    let determinant = det_bareiss(&matrix).expect("square by construction");
    let rank = rank_ff(&matrix);
    let first_row_zero = (1..=n).all(|j| matrix.entry(1, j).is_zero());
    let symmetric = matrix == transpose(&matrix);
    Ok(ExploreReport {
        left_name: spec.left.display_name(),
        right_name: spec.right.display_name(),
        combiner: spec.combiner,
        n,
        determinant,
        rank,
        first_row_zero,
        symmetric,
        matrix: emit_matrix.then_some(matrix),
        elapsed: start.elapsed(),
    })
}
