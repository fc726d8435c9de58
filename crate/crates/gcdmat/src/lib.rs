//! Exact construction and verification of generalized GCD matrices.
//!
//! Everything in this crate works over arbitrary-precision signed integers:
//! arithmetic functions are finite tables of exact values, matrices are dense
//! grids of [`num_bigint::BigInt`], and determinants come from fraction-free
//! elimination so no rounding happens anywhere.
//!
//! The crate is organized around five pieces:
//!
//! - [`arith`] — tabulated arithmetic functions (totient, divisor count and
//!   sum, Möbius, …) with Dirichlet convolution and Möbius inversion;
//! - [`matrix`] — the dense integer matrix type with 1-indexed access;
//! - [`build`] — constructors for divisibility indicator matrices, diagonal
//!   matrices, and the GCD-matrix families together with their triangular
//!   factorizations;
//! - [`linalg`] — exact products, transposes, two independent determinant
//!   algorithms, and rank over the rationals;
//! - [`mod@verify`] / [`explore`] — named identity checks producing
//!   machine-readable reports, and structural exploration of matrices built
//!   from a two-argument function of the row index and the gcd.

pub mod arith;
pub mod build;
pub mod explore;
pub mod linalg;
pub mod matrix;
pub mod verify;

pub use arith::{
    dirichlet_convolve, gcd, load_custom, mobius_invert, summatory, tabulate, ArithError, Builtin,
    FunctionTable,
};
pub use build::{
    build_classic_gcd, build_diag, build_g_matrix, build_hform, build_indicator, build_theorem,
    build_theorem3_literal, BuildError, Factorization, Indicator, TheoremKind,
};
pub use explore::{explore_problem1, Combiner, ExploreError, ExploreReport, ExploreSpec, FnSpec};
pub use linalg::{det_bareiss, det_cofactor, mat_mul, rank_ff, transpose, LinalgError};
pub use matrix::IntMatrix;
pub use verify::{list_checks, verify, verify_with_cap, CheckId, Report, VerifyError, Witness};

/// Default size caps. Tables are cheap, matrix products are cubic, and exact
/// determinants grow multi-precision intermediates, hence the three tiers.
pub mod caps {
    /// Largest `n` the CLI will tabulate an arithmetic function for.
    pub const TABLE: usize = 10_000;
    /// Largest `n` the CLI will build a matrix for.
    pub const MATRIX: usize = 500;
    /// Largest `n` the CLI will run a determinant (or a determinant-bearing
    /// check) for, unless overridden via `GCDMAT_N_CAP`.
    pub const DETERMINANT: usize = 200;
}
