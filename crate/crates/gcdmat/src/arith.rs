//! Arithmetic functions as exact tabulated values.
//!
//! A [`FunctionTable`] holds the values `g(1), …, g(n)` of an arithmetical
//! function as arbitrary-precision integers. All indices in the public API are
//! 1-based: `get(k)` is `g(k)`. Tables are immutable once built and every
//! operation here is pure, so they can be shared freely across threads.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("gcd requires positive arguments, got ({0}, {1})")]
    NonPositiveGcd(u64, u64),
    #[error("unknown builtin function `{0}` (expected phi, tau, sigma, mu, one, or id)")]
    UnknownFunction(String),
    #[error("a function table needs at least one value")]
    EmptyTable,
    #[error("table lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("`{path}` has only {got} lines, need {need}")]
    ShortFile {
        path: String,
        need: usize,
        got: usize,
    },
    #[error("`{path}` line {line}: `{text}` is not a base-10 integer")]
    BadLine {
        path: String,
        line: usize,
        text: String,
    },
}

/// The builtin arithmetic functions available for tabulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Euler's totient.
    Phi,
    /// Number of divisors.
    Tau,
    /// Sum of divisors.
    Sigma,
    /// Möbius function.
    Mu,
    /// Constant 1.
    One,
    /// Identity map, `id(k) = k`.
    Id,
}

impl Builtin {
    pub const ALL: [Builtin; 6] = [
        Builtin::Phi,
        Builtin::Tau,
        Builtin::Sigma,
        Builtin::Mu,
        Builtin::One,
        Builtin::Id,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Phi => "phi",
            Builtin::Tau => "tau",
            Builtin::Sigma => "sigma",
            Builtin::Mu => "mu",
            Builtin::One => "one",
            Builtin::Id => "id",
        }
    }
}

impl FromStr for Builtin {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phi" => Ok(Builtin::Phi),
            "tau" => Ok(Builtin::Tau),
            "sigma" => Ok(Builtin::Sigma),
            "mu" => Ok(Builtin::Mu),
            "one" => Ok(Builtin::One),
            "id" => Ok(Builtin::Id),
            other => Err(ArithError::UnknownFunction(other.to_string())),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact values `g(1..=n)` of an arithmetical function.
///
/// Equality compares values only; the optional name is metadata and does not
/// participate in `==`.
#[derive(Debug, Clone)]
pub struct FunctionTable {
    values: Vec<BigInt>,
    name: Option<String>,
}

impl PartialEq for FunctionTable {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for FunctionTable {}

impl FunctionTable {
    /// Build a table from explicit values; `values[k-1]` becomes `g(k)`.
    pub fn from_values(values: Vec<BigInt>) -> Result<Self, ArithError> {
        if values.is_empty() {
            return Err(ArithError::EmptyTable);
        }
        Ok(FunctionTable { values, name: None })
    }

    pub fn from_i64(values: &[i64]) -> Result<Self, ArithError> {
        Self::from_values(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The identity element of Dirichlet convolution: `e(1) = 1`, else 0.
    pub fn dirichlet_identity(n: usize) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::EmptyTable);
        }
        let mut values = vec![BigInt::zero(); n];
        values[0] = BigInt::one();
        Ok(FunctionTable {
            values,
            name: Some("e".to_string()),
        })
    }

    /// Table length `n`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: tables have at least one value.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `g(k)` for `1 <= k <= n`.
    ///
    /// Panics when `k` is 0 or past the end of the table.
    pub fn get(&self, k: usize) -> &BigInt {
        assert!(
            k >= 1 && k <= self.values.len(),
            "index {k} outside table of length {}",
            self.values.len()
        );
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// The first `n` values as a new table. `n` must be in `1..=len`.
    pub fn truncated(&self, n: usize) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::EmptyTable);
        }
        if n > self.values.len() {
            return Err(ArithError::LengthMismatch(self.values.len(), n));
        }
        Ok(FunctionTable {
            values: self.values[..n].to_vec(),
            name: self.name.clone(),
        })
    }

    /// Sum of all table values.
    pub fn total(&self) -> BigInt {
        self.values.iter().sum()
    }
}

/// Greatest common divisor of two positive integers.
pub fn gcd(a: u64, b: u64) -> Result<u64, ArithError> {
    if a == 0 || b == 0 {
        return Err(ArithError::NonPositiveGcd(a, b));
    }
    Ok(gcd_raw(a, b))
}

/// Euclid's algorithm; callers guarantee `a, b >= 1`.
pub(crate) fn gcd_raw(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// All divisors of `k`, ascending, by trial division up to the square root.
pub(crate) fn divisors(k: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            small.push(d);
            if d != k / d {
                large.push(k / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn phi_u64(k: u64) -> u64 {
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

fn mu_i64(k: u64) -> i64 {
    let mut n = k;
    let mut primes = 0u32;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn tau_u64(k: usize) -> u64 {
    divisors(k).len() as u64
}

fn sigma_u128(k: usize) -> u128 {
    divisors(k).iter().map(|&d| d as u128).sum()
}

/// Tabulate a builtin function on `1..=n`.
pub fn tabulate(f: Builtin, n: usize) -> Result<FunctionTable, ArithError> {
    if n == 0 {
        return Err(ArithError::EmptyTable);
    }
    let values = (1..=n)
        .map(|k| match f {
            Builtin::Phi => BigInt::from(phi_u64(k as u64)),
            Builtin::Tau => BigInt::from(tau_u64(k)),
            Builtin::Sigma => BigInt::from(sigma_u128(k)),
            Builtin::Mu => BigInt::from(mu_i64(k as u64)),
            Builtin::One => BigInt::one(),
            Builtin::Id => BigInt::from(k),
        })
        .collect();
    Ok(FunctionTable {
        values,
        name: Some(f.name().to_string()),
    })
}

/// The summatory function: entry `k` is the sum of `g(d)` over divisors `d` of `k`.
///
/// Computed by sieving over multiples, which keeps it independent of the
/// divisor-scan path used by [`dirichlet_convolve`].
pub fn summatory(g: &FunctionTable) -> FunctionTable {
    let n = g.len();
    let mut out = vec![BigInt::zero(); n];
    for d in 1..=n {
        let gd = g.get(d);
        let mut k = d;
        while k <= n {
            out[k - 1] += gd;
            k += d;
        }
    }
    FunctionTable {
        values: out,
        name: g.name.as_ref().map(|s| format!("{s}-summatory")),
    }
}

/// Dirichlet convolution: entry `k` is the sum of `a(d) * b(k/d)` over divisors `d` of `k`.
pub fn dirichlet_convolve(
    a: &FunctionTable,
    b: &FunctionTable,
) -> Result<FunctionTable, ArithError> {
    if a.len() != b.len() {
        return Err(ArithError::LengthMismatch(a.len(), b.len()));
    }
    let n = a.len();
    let values = (1..=n)
        .map(|k| {
            let mut acc = BigInt::zero();
            for d in divisors(k) {
                acc += a.get(d) * b.get(k / d);
            }
            acc
        })
        .collect();
    Ok(FunctionTable { values, name: None })
}

/// Möbius inversion: recover `g` with `summatory(g) = f`, i.e. `g = mu * f`.
pub fn mobius_invert(f: &FunctionTable) -> FunctionTable {
    let mu = tabulate(Builtin::Mu, f.len()).expect("table length is at least 1");
    dirichlet_convolve(&mu, f).expect("lengths match by construction")
}

/// Read the first `n` values of a custom function from a text file,
/// one base-10 integer per line (line `k` is `g(k)`).
pub fn load_custom(path: impl AsRef<Path>, n: usize) -> Result<FunctionTable, ArithError> {
    let path = path.as_ref();
    let display = path.display().to_string();
    if n == 0 {
        return Err(ArithError::EmptyTable);
    }
    let text = fs::read_to_string(path).map_err(|source| ArithError::Io {
        path: display.clone(),
        source,
    })?;
    let mut values = Vec::with_capacity(n);
    for (idx, line) in text.lines().enumerate() {
        if values.len() == n {
            break;
        }
        let trimmed = line.trim();
        let value = BigInt::from_str(trimmed).map_err(|_| ArithError::BadLine {
            path: display.clone(),
            line: idx + 1,
            text: trimmed.to_string(),
        })?;
        values.push(value);
    }
    if values.len() < n {
        return Err(ArithError::ShortFile {
            path: display,
            need: n,
            got: values.len(),
        });
    }
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "custom".to_string());
    Ok(FunctionTable {
        values,
        name: Some(name),
    })
}
