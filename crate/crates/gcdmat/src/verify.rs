//! Named identity checks with machine-readable reports.
//!
//! Every identity the library can reproduce is registered here under a fixed
//! id. A check either compares a direct matrix against the product of its
//! factorization entry by entry, or compares an exact determinant against a
//! closed-form product. Failures carry a witness: the first mismatching entry
//! in row-major order, or the two determinant values.
//!
//! `theorem3_literal` is special: it verifies the uncorrected variant of the
//! third theorem, which disagrees with its own factorization at entry
//! `(1, 2)` whenever `g(1)` is nonzero. The check is kept so the discrepancy
//! is reproducible rather than silently corrected; it is expected to fail.

use crate::arith::{summatory, tabulate, Builtin, FunctionTable};
use crate::build::{
    build_classic_gcd, build_g_matrix, build_hform, build_indicator, build_theorem,
    build_theorem3_literal, Indicator, TheoremKind,
};
use crate::linalg::{det_bareiss, mat_mul, transpose};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Default size cap for [`verify`]; use [`verify_with_cap`] to change it.
pub const DEFAULT_N_CAP: usize = crate::caps::MATRIX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("n = {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("function table has {have} values, need {need}")]
    TableTooShort { need: usize, have: usize },
}

/// Identifier of a registered check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    SmithEq1,
    SmithGeneral,
    PolyaSzego,
    Carlitz,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem3Literal,
    Remark1,
    Remark2,
}

impl CheckId {
    /// Registry order; sweeps emit reports in this order.
    pub const ALL: [CheckId; 10] = [
        CheckId::SmithEq1,
        CheckId::SmithGeneral,
        CheckId::PolyaSzego,
        CheckId::Carlitz,
        CheckId::Theorem1,
        CheckId::Theorem2,
        CheckId::Theorem3,
        CheckId::Theorem3Literal,
        CheckId::Remark1,
        CheckId::Remark2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::SmithEq1 => "smith_eq1",
            CheckId::SmithGeneral => "smith_general",
            CheckId::PolyaSzego => "polya_szego",
            CheckId::Carlitz => "carlitz",
            CheckId::Theorem1 => "theorem1",
            CheckId::Theorem2 => "theorem2",
            CheckId::Theorem3 => "theorem3",
            CheckId::Theorem3Literal => "theorem3_literal",
            CheckId::Remark1 => "remark1",
            CheckId::Remark2 => "remark2",
        }
    }

    /// True for the one check that documents an erratum and is expected to
    /// fail for generic input.
    pub fn expected_to_fail(self) -> bool {
        self == CheckId::Theorem3Literal
    }
}

impl FromStr for CheckId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

/// Registry entry: id plus a one-line description.
#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub id: CheckId,
    pub summary: &'static str,
}

/// The fixed check registry.
pub fn list_checks() -> &'static [CheckInfo] {
    &[
        CheckInfo {
            id: CheckId::SmithEq1,
            summary: "det of the gcd matrix equals the product of totient values",
        },
        CheckInfo {
            id: CheckId::SmithGeneral,
            summary: "det of the summatory gcd matrix equals the product of g values",
        },
        CheckInfo {
            id: CheckId::PolyaSzego,
            summary: "summatory gcd matrix equals G times the transposed divides indicator",
        },
        CheckInfo {
            id: CheckId::Carlitz,
            summary: "summatory gcd matrix equals C diag(g) C^T",
        },
        CheckInfo {
            id: CheckId::Theorem1,
            summary: "S(i) - S(gcd) matrix equals C diag(g) D^T",
        },
        CheckInfo {
            id: CheckId::Theorem2,
            summary: "inclusion-exclusion matrix equals D diag(g) D^T",
        },
        CheckInfo {
            id: CheckId::Theorem3,
            summary: "corner-adjusted matrix equals D' diag(g) D'^T (corrected reading)",
        },
        CheckInfo {
            id: CheckId::Theorem3Literal,
            summary: "uncorrected third theorem; expected to fail at (1, 2) when g(1) != 0",
        },
        CheckInfo {
            id: CheckId::Remark1,
            summary: "the S(i) - S(gcd) matrix always has determinant 0",
        },
        CheckInfo {
            id: CheckId::Remark2,
            summary: "h(i) - h(gcd) matrix equals C diag(mu * h) D^T",
        },
    ]
}

/// Failure evidence attached to a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// First mismatching entry in row-major order (1-based).
    Entry {
        i: usize,
        j: usize,
        expected: BigInt,
        actual: BigInt,
    },
    /// Determinant comparison mismatch.
    Determinant { expected: BigInt, actual: BigInt },
}

/// Outcome of one check run.
#[derive(Debug, Clone)]
pub struct Report {
    pub check: CheckId,
    pub g_name: String,
    pub n: usize,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    check: &'a str,
    params: ParamsJson<'a>,
    passed: bool,
    witness: Option<WitnessJson>,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct ParamsJson<'a> {
    g: &'a str,
    n: usize,
}

#[derive(Serialize)]
struct WitnessJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    expected: String,
    actual: String,
}

impl Report {
    /// One-line JSON form; big integers are serialized as base-10 strings.
    pub fn to_json(&self) -> String {
        let witness = self.witness.as_ref().map(|w| match w {
            Witness::Entry {
                i,
                j,
                expected,
                actual,
            } => WitnessJson {
                i: Some(*i),
                j: Some(*j),
                expected: expected.to_string(),
                actual: actual.to_string(),
            },
            Witness::Determinant { expected, actual } => WitnessJson {
                i: None,
                j: None,
                expected: expected.to_string(),
                actual: actual.to_string(),
            },
        });
        let dto = ReportJson {
            check: self.check.as_str(),
            params: ParamsJson {
                g: &self.g_name,
                n: self.n,
            },
            passed: self.passed,
            witness,
            elapsed_ms: elapsed_ms(self.elapsed),
        };
        serde_json::to_string(&dto).expect("report serialization cannot fail")
    }
}

/// Milliseconds with microsecond resolution, so reports stay diff-friendly.
pub(crate) fn elapsed_ms(elapsed: Duration) -> f64 {
    (elapsed.as_secs_f64() * 1e6).round() / 1e3
}

/// First row-major mismatch between two equally sized matrices.
fn first_mismatch(expected: &IntMatrix, actual: &IntMatrix) -> Option<Witness> {
    for i in 1..=expected.n_rows() {
        for j in 1..=expected.n_cols() {
            if expected.entry(i, j) != actual.entry(i, j) {
                return Some(Witness::Entry {
                    i,
                    j,
                    expected: expected.entry(i, j).clone(),
                    actual: actual.entry(i, j).clone(),
                });
            }
        }
    }
    None
}

fn matrix_check(expected: &IntMatrix, actual: &IntMatrix) -> (bool, Option<Witness>) {
    match first_mismatch(expected, actual) {
        None => (true, None),
        Some(w) => (false, Some(w)),
    }
}

fn det_check(expected: BigInt, actual: BigInt) -> (bool, Option<Witness>) {
    if expected == actual {
        (true, None)
    } else {
        (false, Some(Witness::Determinant { expected, actual }))
    }
}

/// Run one check at size `n` under the default cap.
///
/// `g` must have at least `n` values; checks use its first `n` entries.
/// `smith_eq1` ignores `g` entirely, and `remark2` interprets it as the
/// function `h` whose difference matrix is being factored.
pub fn verify(check: CheckId, g: &FunctionTable, n: usize) -> Result<Report, VerifyError> {
    verify_with_cap(check, g, n, DEFAULT_N_CAP)
}

/// Run one check at size `n`, rejecting `n > cap`.
pub fn verify_with_cap(
    check: CheckId,
    g: &FunctionTable,
    n: usize,
    cap: usize,
) -> Result<Report, VerifyError> {
    if n > cap {
        return Err(VerifyError::CapExceeded { n, cap });
    }
    if n == 0 || g.len() < n {
        return Err(VerifyError::TableTooShort {
            need: n.max(1),
            have: g.len(),
        });
    }
    let start = Instant::now();
    let gn = g.truncated(n).expect("validated above");
    let (passed, witness) = run_check(check, &gn, n);
    Ok(Report {
        check,
        g_name: g.name().unwrap_or("custom").to_string(),
        n,
        passed,
        witness,
        elapsed: start.elapsed(),
    })
}

fn run_check(check: CheckId, g: &FunctionTable, n: usize) -> (bool, Option<Witness>) {
    match check {
        CheckId::SmithEq1 => {
            let id = tabulate(Builtin::Id, n).expect("n >= 1");
            let matrix = build_classic_gcd(&id);
            let phi = tabulate(Builtin::Phi, n).expect("n >= 1");
            let expected: BigInt = phi.values().iter().product();
            let actual = det_bareiss(&matrix).expect("square by construction");
            det_check(expected, actual)
        }
        CheckId::SmithGeneral => {
            let matrix = build_classic_gcd(&summatory(g));
            let expected: BigInt = g.values().iter().product();
            let actual = det_bareiss(&matrix).expect("square by construction");
            det_check(expected, actual)
        }
        CheckId::PolyaSzego => {
            let direct = build_classic_gcd(&summatory(g));
            let c = build_indicator(Indicator::Divides, n).expect("n >= 1");
            let product = mat_mul(&build_g_matrix(g), &transpose(&c)).expect("dimensions agree");
            matrix_check(&direct, &product)
        }
        CheckId::Carlitz => {
            let direct = build_classic_gcd(&summatory(g));
            let c = build_indicator(Indicator::Divides, n).expect("n >= 1");
            let cd = mat_mul(&c, &crate::build::build_diag(g)).expect("dimensions agree");
            let product = mat_mul(&cd, &transpose(&c)).expect("dimensions agree");
            matrix_check(&direct, &product)
        }
        CheckId::Theorem1 => factorization_check(TheoremKind::T1, g),
        CheckId::Theorem2 => factorization_check(TheoremKind::T2, g),
        CheckId::Theorem3 => factorization_check(TheoremKind::T3, g),
        CheckId::Theorem3Literal => {
            let (direct, fact) = build_theorem3_literal(g);
            matrix_check(&direct, &fact.product())
        }
        CheckId::Remark1 => {
            let (direct, _) = build_theorem(TheoremKind::T1, g);
            let actual = det_bareiss(&direct).expect("square by construction");
            det_check(BigInt::zero(), actual)
        }
        CheckId::Remark2 => {
            let (direct, fact) = build_hform(g);
            matrix_check(&direct, &fact.product())
        }
    }
}

fn factorization_check(t: TheoremKind, g: &FunctionTable) -> (bool, Option<Witness>) {
    let (direct, fact) = build_theorem(t, g);
    matrix_check(&direct, &fact.product())
}
