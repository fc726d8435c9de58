//! Constructors for the GCD-matrix families and their factorizations.
//!
//! Each direct matrix is built from its defining formula, and the matching
//! triangular factorization is built alongside it by the same function, so a
//! verification that compares the two really does compare two independent
//! computation routes of the same identity.

use crate::arith::{gcd_raw, mobius_invert, summatory, FunctionTable};
use crate::linalg::{mat_mul, transpose};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("matrix size must be at least 1")]
    EmptySize,
    #[error("unknown indicator kind `{0}` (expected C, D, or Dprime)")]
    UnknownIndicator(String),
    #[error("unknown theorem `{0}` (expected t1, t2, or t3)")]
    UnknownTheorem(String),
}

/// The divisibility indicator matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indicator {
    /// Entry `(i, j)` is 1 exactly when `j` divides `i` (lower triangular
    /// with unit diagonal).
    Divides,
    /// Entry `(i, j)` is 1 exactly when `j` does not divide `i`.
    NotDivides,
    /// Same as `NotDivides` except entry `(1, 1)` is set to 1.
    NotDividesAdjusted,
}

impl Indicator {
    /// Token used by the command-line surface.
    pub fn token(self) -> &'static str {
        match self {
            Indicator::Divides => "C",
            Indicator::NotDivides => "D",
            Indicator::NotDividesAdjusted => "Dprime",
        }
    }
}

impl FromStr for Indicator {
    type Err = BuildError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "C" => Ok(Indicator::Divides),
            "D" => Ok(Indicator::NotDivides),
            "Dprime" => Ok(Indicator::NotDividesAdjusted),
            other => Err(BuildError::UnknownIndicator(other.to_string())),
        }
    }
}

/// Selector for the three factorization theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremKind {
    /// Entries `S(i) - S(gcd(i, j))` with `S` the summatory function of `g`.
    T1,
    /// Entries `T - S(i) - S(j) + S(gcd(i, j))` with `T` the total of `g`.
    T2,
    /// The `T2` matrix with `g(1)` added at entry `(1, 1)`.
    T3,
}

impl TheoremKind {
    pub fn token(self) -> &'static str {
        match self {
            TheoremKind::T1 => "t1",
            TheoremKind::T2 => "t2",
            TheoremKind::T3 => "t3",
        }
    }
}

impl FromStr for TheoremKind {
    type Err = BuildError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t1" => Ok(TheoremKind::T1),
            "t2" => Ok(TheoremKind::T2),
            "t3" => Ok(TheoremKind::T3),
            other => Err(BuildError::UnknownTheorem(other.to_string())),
        }
    }
}

/// A claimed identity `claimed_product = left * diag * right`.
///
/// `right` is stored ready to multiply (any transpose already applied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub left: IntMatrix,
    pub diag: IntMatrix,
    pub right: IntMatrix,
    pub claimed_product: IntMatrix,
}

impl Factorization {
    /// Multiply the three factors out with the exact matrix product.
    pub fn product(&self) -> IntMatrix {
        let ld = mat_mul(&self.left, &self.diag).expect("factor dimensions agree");
        mat_mul(&ld, &self.right).expect("factor dimensions agree")
    }
}

fn gcd_idx(i: usize, j: usize) -> usize {
    gcd_raw(i as u64, j as u64) as usize
}

/// Build one of the indicator matrices at size `n`.
pub fn build_indicator(kind: Indicator, n: usize) -> Result<IntMatrix, BuildError> {
    if n == 0 {
        return Err(BuildError::EmptySize);
    }
    Ok(IntMatrix::from_fn(n, n, |i, j| {
        let divides = i.is_multiple_of(j);
        let one = match kind {
            Indicator::Divides => divides,
            Indicator::NotDivides => !divides,
            Indicator::NotDividesAdjusted => !divides || (i == 1 && j == 1),
        };
        if one {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

/// Diagonal matrix with `g(1), …, g(n)` on the main diagonal.
pub fn build_diag(g: &FunctionTable) -> IntMatrix {
    IntMatrix::from_fn(g.len(), g.len(), |i, j| {
        if i == j {
            g.get(i).clone()
        } else {
            BigInt::zero()
        }
    })
}

/// Lower-triangular matrix with entry `(i, j) = g(j)` when `j` divides `i`,
/// zero otherwise.
pub fn build_g_matrix(g: &FunctionTable) -> IntMatrix {
    IntMatrix::from_fn(g.len(), g.len(), |i, j| {
        if i.is_multiple_of(j) {
            g.get(j).clone()
        } else {
            BigInt::zero()
        }
    })
}

/// The classic GCD matrix: entry `(i, j) = f(gcd(i, j))`.
pub fn build_classic_gcd(f: &FunctionTable) -> IntMatrix {
    IntMatrix::from_fn(f.len(), f.len(), |i, j| f.get(gcd_idx(i, j)).clone())
}

/// Build the direct matrix of one of the three factorization theorems
/// together with its factorization. Size comes from the table length.
pub fn build_theorem(t: TheoremKind, g: &FunctionTable) -> (IntMatrix, Factorization) {
    let n = g.len();
    let s = summatory(g);
    let not_divides = build_indicator(Indicator::NotDivides, n).expect("n >= 1 by table invariant");

    let (direct, left) = match t {
        TheoremKind::T1 => {
            let direct = IntMatrix::from_fn(n, n, |i, j| s.get(i) - s.get(gcd_idx(i, j)));
            let c = build_indicator(Indicator::Divides, n).expect("n >= 1 by table invariant");
            (direct, c)
        }
        TheoremKind::T2 => (build_t2_direct(&s, g.total()), not_divides.clone()),
        TheoremKind::T3 => {
            let mut direct = build_t2_direct(&s, g.total());
            let corner = direct.entry(1, 1) + g.get(1);
            direct.set(1, 1, corner);
            let adjusted = build_indicator(Indicator::NotDividesAdjusted, n)
                .expect("n >= 1 by table invariant");
            (direct, adjusted)
        }
    };
    // T1 and T2 share the transposed plain indicator on the right; T3 uses
    // its adjusted left factor transposed.
    let right = match t {
        TheoremKind::T1 | TheoremKind::T2 => transpose(&not_divides),
        TheoremKind::T3 => transpose(&left),
    };
    let factorization = Factorization {
        left,
        diag: build_diag(g),
        right,
        claimed_product: direct.clone(),
    };
    (direct, factorization)
}

fn build_t2_direct(s: &FunctionTable, total: BigInt) -> IntMatrix {
    let n = s.len();
    IntMatrix::from_fn(n, n, |i, j| {
        &total - s.get(i) - s.get(j) + s.get(gcd_idx(i, j))
    })
}

/// The uncorrected variant of [`TheoremKind::T3`]: `g(1)` is added on the
/// whole first row and column, not just at `(1, 1)`. The factorization does
/// not reproduce it for `g(1) != 0`; it is kept so the discrepancy stays
/// checkable.
pub fn build_theorem3_literal(g: &FunctionTable) -> (IntMatrix, Factorization) {
    let n = g.len();
    let s = summatory(g);
    let total = g.total();
    let g1 = g.get(1).clone();
    let direct = IntMatrix::from_fn(n, n, |i, j| {
        let base = &total - s.get(i) - s.get(j) + s.get(gcd_idx(i, j));
        if i == 1 || j == 1 {
            base + &g1
        } else {
            base
        }
    });
    let d_adj =
        build_indicator(Indicator::NotDividesAdjusted, n).expect("n >= 1 by table invariant");
    let factorization = Factorization {
        left: d_adj.clone(),
        diag: build_diag(g),
        right: transpose(&d_adj),
        claimed_product: direct.clone(),
    };
    (direct, factorization)
}

/// Matrix with entries `h(i) - h(gcd(i, j))`, factored through the Möbius
/// inverse of `h`.
pub fn build_hform(h: &FunctionTable) -> (IntMatrix, Factorization) {
    let n = h.len();
    let direct = IntMatrix::from_fn(n, n, |i, j| h.get(i) - h.get(gcd_idx(i, j)));
    let c = build_indicator(Indicator::Divides, n).expect("n >= 1 by table invariant");
    let d = build_indicator(Indicator::NotDivides, n).expect("n >= 1 by table invariant");
    let factorization = Factorization {
        left: c,
        diag: build_diag(&mobius_invert(h)),
        right: transpose(&d),
        claimed_product: direct.clone(),
    };
    (direct, factorization)
}
