//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`). All comparisons are exact
//! big-integer equality; there are no tolerances anywhere.

mod common;

use common::*;
use gcdmat::{
    build_classic_gcd, build_diag, build_g_matrix, build_hform, build_indicator, build_theorem,
    build_theorem3_literal, det_bareiss, det_cofactor, mat_mul, mobius_invert, summatory, tabulate,
    transpose, verify, Builtin, CheckId, FunctionTable, Indicator, TheoremKind, Witness,
};
use num_bigint::BigInt;
use num_traits::Zero;
use std::time::Instant;

const RANDOM_TABLE_SEED: u64 = 0x5eed_1dea;

/// The four builtin tables plus 20 deterministic random tables with entries
/// in [-9, 9], all of length `n`.
fn acceptance_g_set(n: usize) -> Vec<FunctionTable> {
    let mut set: Vec<FunctionTable> = [Builtin::Phi, Builtin::One, Builtin::Id, Builtin::Mu]
        .iter()
        .map(|&b| tabulate(b, n).unwrap())
        .collect();
    let mut rng = XorShift64::new(RANDOM_TABLE_SEED);
    for k in 0..20 {
        set.push(random_table(&mut rng, n, -9, 9).with_name(format!("random-{k}")));
    }
    set
}

/// Sizes used for criteria stated as "n <= max": the maximum itself plus a
/// spread of smaller sizes for edge coverage.
fn size_grid(max: usize) -> Vec<usize> {
    [1usize, 2, 3, 7, 25, 100]
        .iter()
        .copied()
        .filter(|&n| n < max)
        .chain(std::iter::once(max))
        .collect()
}

fn run(name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(msg) => {
            println!("acceptance {name}: FAIL ({msg})");
            panic!("acceptance {name} failed: {msg}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_1_smith_classic_determinant() {
    run(
        "1 smith_eq1 (det [gcd(i,j)] = product of totients, n = 1..=50)",
        || {
            let start = Instant::now();
            let phi = tabulate(Builtin::Phi, 50).unwrap();
            for n in 1..=50usize {
                let id = tabulate(Builtin::Id, n).unwrap();
                let det = det_bareiss(&build_classic_gcd(&id)).unwrap();
                let expected: BigInt = phi.values()[..n].iter().product();
                ensure(det == expected, || {
                    format!("n = {n}: det = {det}, expected {expected}")
                })?;
            }
            let elapsed = start.elapsed();
            ensure(elapsed.as_secs_f64() < 10.0, || {
                format!("runtime {elapsed:?} exceeded the 10 s budget")
            })
        },
    );
}

#[test]
fn criterion_2_smith_general_determinant() {
    run(
        "2 smith_general (det of summatory gcd matrix = product of g, n <= 40)",
        || {
            let mut saw_zero = false;
            let mut saw_negative = false;
            // Builtins at every size up to the bound.
            for b in [Builtin::Phi, Builtin::One, Builtin::Id, Builtin::Mu] {
                for n in 1..=40usize {
                    let g = tabulate(b, n).unwrap();
                    let expected: BigInt = g.values().iter().product();
                    saw_zero |= expected.is_zero();
                    saw_negative |= expected < BigInt::zero();
                    let det = det_bareiss(&build_classic_gcd(&summatory(&g))).unwrap();
                    ensure(det == expected, || {
                        format!(
                            "g = {}, n = {n}: det = {det}, expected {expected}",
                            b.name()
                        )
                    })?;
                }
            }
            // Twenty random tables at the bound and at a deterministic spread of
            // smaller sizes.
            let mut rng = XorShift64::new(RANDOM_TABLE_SEED);
            for k in 0..20usize {
                for n in [40, 1 + (7 * k + 3) % 39] {
                    let g = random_table(&mut rng, n, -9, 9);
                    let expected: BigInt = g.values().iter().product();
                    saw_zero |= expected.is_zero();
                    saw_negative |= expected < BigInt::zero();
                    let det = det_bareiss(&build_classic_gcd(&summatory(&g))).unwrap();
                    ensure(det == expected, || {
                        format!("random table {k}, n = {n}: det = {det}, expected {expected}")
                    })?;
                }
            }
            ensure(saw_zero, || "no zero product was exercised".to_string())?;
            ensure(saw_negative, || {
                "no negative product was exercised".to_string()
            })
        },
    );
}

#[test]
fn criterion_3_carlitz_and_polya_szego() {
    run(
        "3 carlitz + polya_szego (factorizations of the summatory gcd matrix, n <= 100)",
        || {
            for n in size_grid(100) {
                let c = build_indicator(Indicator::Divides, n).unwrap();
                let ct = transpose(&c);
                for g in acceptance_g_set(n) {
                    let name = g.name().unwrap_or("?").to_string();
                    let direct = build_classic_gcd(&summatory(&g));
                    let diag = build_diag(&g);
                    let gm = build_g_matrix(&g);

                    // Pólya–Szegő bridge: G = C diag(g).
                    let cdiag = mat_mul(&c, &diag).unwrap();
                    ensure(gm == cdiag, || {
                        format!("G != C diag(g) for g = {name}, n = {n}")
                    })?;
                    // Pólya–Szegő identity: [f] = G C^T.
                    let gct = mat_mul(&gm, &ct).unwrap();
                    ensure(direct == gct, || {
                        format!("[f] != G C^T for g = {name}, n = {n}")
                    })?;
                    // Carlitz: [f] = C diag(g) C^T.
                    let carlitz = mat_mul(&cdiag, &ct).unwrap();
                    ensure(direct == carlitz, || {
                        format!("[f] != C diag(g) C^T for g = {name}, n = {n}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_4_theorem_factorizations() {
    run(
        "4 theorems 1-3 (direct matrices equal factorization products, n <= 100)",
        || {
            for n in size_grid(100) {
                for g in acceptance_g_set(n) {
                    let name = g.name().unwrap_or("?").to_string();
                    for t in [TheoremKind::T1, TheoremKind::T2, TheoremKind::T3] {
                        let (direct, fact) = build_theorem(t, &g);
                        ensure(fact.product() == direct, || {
                            format!("{} disagrees for g = {name}, n = {n}", t.token())
                        })?;
                    }
                }
            }

            // Particular cases of the first theorem, brute-forced over all pairs.
            let n = 30usize;
            let (t1_phi, _) = build_theorem(TheoremKind::T1, &tabulate(Builtin::Phi, n).unwrap());
            let (t1_id, _) = build_theorem(TheoremKind::T1, &tabulate(Builtin::Id, n).unwrap());
            let (t1_mu, _) = build_theorem(TheoremKind::T1, &tabulate(Builtin::Mu, n).unwrap());
            for i in 1..=n {
                for j in 1..=n {
                    let g = gcd_brute(i as u64, j as u64) as usize;
                    ensure(
                        t1_phi.entry(i, j) == &BigInt::from(i as u64 - g as u64),
                        || format!("T1(phi) at ({i}, {j}) != i - gcd"),
                    )?;
                    let sigma_diff = BigInt::from(sigma_brute(i)) - BigInt::from(sigma_brute(g));
                    ensure(t1_id.entry(i, j) == &sigma_diff, || {
                        format!("T1(id) at ({i}, {j}) != sigma(i) - sigma(gcd)")
                    })?;
                    // Piecewise form of e(i) - e(gcd(i, j)): 0 when i = 1,
                    // 0 when i, j > 1 share a factor, -1 otherwise.
                    let piecewise = if i == 1 || (j > 1 && g > 1) {
                        BigInt::zero()
                    } else {
                        BigInt::from(-1)
                    };
                    ensure(t1_mu.entry(i, j) == &piecewise, || {
                        format!(
                            "T1(mu) at ({i}, {j}) = {}, expected {piecewise}",
                            t1_mu.entry(i, j)
                        )
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_5_remark1_zero_determinant() {
    run(
        "5 remark1 (every theorem-1 matrix has determinant 0, n <= 20)",
        || {
            for n in 1..=20usize {
                for g in acceptance_g_set(n) {
                    let (direct, _) = build_theorem(TheoremKind::T1, &g);
                    let det = det_bareiss(&direct).unwrap();
                    ensure(det.is_zero(), || {
                        format!("det = {det} for g = {}, n = {n}", g.name().unwrap_or("?"))
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_6_remark2_hform_and_inversion() {
    run(
        "6 remark2 (h-form factorization, n <= 60; inversion round-trip, n <= 200)",
        || {
            let sizes: Vec<usize> = [1usize, 2, 3, 7, 25, 60].to_vec();
            let mut rng = XorShift64::new(RANDOM_TABLE_SEED ^ 0xa5a5);
            for &n in &sizes {
                let mut hs: Vec<FunctionTable> = [Builtin::Id, Builtin::Tau, Builtin::Sigma]
                    .iter()
                    .map(|&b| tabulate(b, n).unwrap())
                    .collect();
                for k in 0..20 {
                    hs.push(random_table(&mut rng, n, -9, 9).with_name(format!("random-h-{k}")));
                }
                for h in hs {
                    let (direct, fact) = build_hform(&h);
                    ensure(fact.product() == direct, || {
                        format!(
                            "h-form factorization disagrees for h = {}, n = {n}",
                            h.name().unwrap_or("?")
                        )
                    })?;
                }
            }

            // Möbius inversion is a two-sided inverse of the summatory map.
            let mut rng = XorShift64::new(RANDOM_TABLE_SEED ^ 0xc3c3);
            for k in 0..200usize {
                let n = 1 + (rng.next_u64() % 200) as usize;
                let g = random_table(&mut rng, n, -9, 9);
                ensure(mobius_invert(&summatory(&g)) == g, || {
                    format!("mu * (1 * g) != g for random table {k}, n = {n}")
                })?;
                ensure(summatory(&mobius_invert(&g)) == g, || {
                    format!("1 * (mu * g) != g for random table {k}, n = {n}")
                })?;
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_erratum_check() {
    run(
        "7 erratum (theorem3_literal fails at (1,2); corrected theorem3 passes, n <= 100)",
        || {
            let one = tabulate(Builtin::One, 3).unwrap();
            let report = verify(CheckId::Theorem3Literal, &one, 3).unwrap();
            ensure(!report.passed, || {
                "literal reading unexpectedly passed".to_string()
            })?;
            match report.witness {
                Some(Witness::Entry {
                    i,
                    j,
                    expected,
                    actual,
                }) => {
                    ensure((i, j) == (1, 2), || {
                        format!("witness at ({i}, {j}), expected (1, 2)")
                    })?;
                    ensure(
                        expected == BigInt::from(2) && actual == BigInt::from(1),
                        || format!("witness values ({expected}, {actual}), expected (2, 1)"),
                    )?;
                }
                other => return Err(format!("expected an entry witness, got {other:?}")),
            }

            for n in size_grid(100) {
                for g in acceptance_g_set(n) {
                    let (direct, fact) = build_theorem(TheoremKind::T3, &g);
                    ensure(fact.product() == direct, || {
                        format!(
                            "corrected theorem3 disagrees for g = {}, n = {n}",
                            g.name().unwrap_or("?")
                        )
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_8_determinant_oracle_agreement() {
    run(
        "8 oracle agreement (det_bareiss = det_cofactor, random 6x6 and derived matrices n <= 8)",
        || {
            let mut rng = XorShift64::new(RANDOM_TABLE_SEED ^ 0x0f0f);
            for k in 0..100usize {
                let m = random_matrix(&mut rng, 6, -9, 9);
                let fast = det_bareiss(&m).unwrap();
                let slow = det_cofactor(&m).unwrap();
                ensure(fast == slow, || {
                    format!("random matrix {k}: bareiss = {fast}, cofactor = {slow}")
                })?;
            }

            for n in 1..=8usize {
                let mut derived = vec![
                    build_indicator(Indicator::Divides, n).unwrap(),
                    build_indicator(Indicator::NotDivides, n).unwrap(),
                    build_indicator(Indicator::NotDividesAdjusted, n).unwrap(),
                ];
                for b in Builtin::ALL {
                    let g = tabulate(b, n).unwrap();
                    derived.push(build_diag(&g));
                    derived.push(build_g_matrix(&g));
                    derived.push(build_classic_gcd(&summatory(&g)));
                    for t in [TheoremKind::T1, TheoremKind::T2, TheoremKind::T3] {
                        derived.push(build_theorem(t, &g).0);
                    }
                    derived.push(build_theorem3_literal(&g).0);
                    derived.push(build_hform(&g).0);
                }
                for (idx, m) in derived.iter().enumerate() {
                    let fast = det_bareiss(m).unwrap();
                    let slow = det_cofactor(m).unwrap();
                    ensure(fast == slow, || {
                        format!(
                            "derived matrix {idx} at n = {n}: bareiss = {fast}, cofactor = {slow}"
                        )
                    })?;
                }
            }
            Ok(())
        },
    );
}
