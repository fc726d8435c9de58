//! Shared helpers for the integration suites: a deterministic RNG and
//! brute-force oracles that recompute everything from first principles,
//! independent of the library's own algorithms.

#![allow(dead_code)]

use gcdmat::{FunctionTable, IntMatrix};
use num_bigint::BigInt;

/// Tiny deterministic xorshift generator so test data is reproducible
/// without pulling in an RNG dependency.
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64 { state: seed.max(1) }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

pub fn random_table(rng: &mut XorShift64, n: usize, lo: i64, hi: i64) -> FunctionTable {
    let values: Vec<i64> = (0..n).map(|_| rng.int_in(lo, hi)).collect();
    FunctionTable::from_i64(&values)
        .expect("n >= 1")
        .with_name("random")
}

pub fn random_nonzero_table(rng: &mut XorShift64, n: usize, lo: i64, hi: i64) -> FunctionTable {
    let values: Vec<i64> = (0..n)
        .map(|_| loop {
            let v = rng.int_in(lo, hi);
            if v != 0 {
                break v;
            }
        })
        .collect();
    FunctionTable::from_i64(&values)
        .expect("n >= 1")
        .with_name("random-nonzero")
}

pub fn random_matrix(rng: &mut XorShift64, n: usize, lo: i64, hi: i64) -> IntMatrix {
    IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.int_in(lo, hi)))
}

// ---- brute-force oracles ----

pub fn gcd_brute(a: u64, b: u64) -> u64 {
    (1..=a.min(b))
        .filter(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d))
        .max()
        .expect("1 always divides")
}

pub fn divisors_brute(k: usize) -> Vec<usize> {
    (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
}

pub fn phi_brute(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd_brute(k, m) == 1).count() as u64
}

pub fn sigma_brute(k: usize) -> u64 {
    divisors_brute(k).iter().map(|&d| d as u64).sum()
}

pub fn tau_brute(k: usize) -> u64 {
    divisors_brute(k).len() as u64
}

/// Sum of `g(d)` over divisors `d` of `k` (1-based table access).
pub fn summatory_brute(g: &FunctionTable, k: usize) -> BigInt {
    divisors_brute(k).iter().map(|&d| g.get(d)).sum()
}

/// Dirichlet convolution at `k` by scanning divisor pairs.
pub fn convolve_brute(a: &FunctionTable, b: &FunctionTable, k: usize) -> BigInt {
    divisors_brute(k)
        .iter()
        .map(|&d| a.get(d) * b.get(k / d))
        .sum()
}
