use crate::output;
use crate::Command;
use gcdmat::{
    build_classic_gcd, build_diag, build_g_matrix, build_hform, build_indicator, build_theorem,
    caps, explore, load_custom, mobius_invert, summatory, tabulate, verify_with_cap, Builtin,
    CheckId, FunctionTable, IntMatrix,
};
use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

/// Environment variable that overrides the determinant-size cap.
pub const N_CAP_ENV: &str = "GCDMAT_N_CAP";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap {
        what: &'static str,
        n: usize,
        cap: usize,
    },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Cap { what, n, cap } => write!(
                f,
                "n = {n} exceeds the {what} cap of {cap}{}",
                if *what == "determinant" {
                    format!(" (override with {N_CAP_ENV})")
                } else {
                    String::new()
                }
            ),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Cap { .. } => ExitCode::from(3),
        }
    }

    fn usage(err: impl fmt::Display) -> Self {
        CliError::Usage(err.to_string())
    }
}

fn det_cap() -> usize {
    match std::env::var(N_CAP_ENV) {
        Ok(v) => v.parse().unwrap_or(caps::DETERMINANT),
        Err(_) => caps::DETERMINANT,
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<(), CliError> {
    if n > cap {
        Err(CliError::Cap { what, n, cap })
    } else {
        Ok(())
    }
}

/// Resolve a `--g` argument into a table of length `n`.
///
/// Accepted forms: a builtin name, `NAME-summatory` for the summatory
/// function of a builtin, or `custom:PATH` for a file with one integer per
/// line.
fn resolve_table(spec: &str, n: usize) -> Result<FunctionTable, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".to_string()));
    }
    if let Some(path) = spec.strip_prefix("custom:") {
        return load_custom(path, n).map_err(CliError::usage);
    }
    if let Some(base) = spec.strip_suffix("-summatory") {
        let builtin = Builtin::from_str(base).map_err(CliError::usage)?;
        let table = tabulate(builtin, n).map_err(CliError::usage)?;
        return Ok(summatory(&table).with_name(spec));
    }
    let builtin = Builtin::from_str(spec).map_err(CliError::usage)?;
    tabulate(builtin, n).map_err(CliError::usage)
}

fn require_g(kind: &str, g: Option<&str>) -> Result<String, CliError> {
    g.map(str::to_string)
        .ok_or_else(|| CliError::Usage(format!("--kind {kind} needs a function table; pass --g")))
}

/// Build the matrix named by a `build`/`det` kind token.
fn build_matrix(kind: &str, g: Option<&str>, n: usize) -> Result<IntMatrix, CliError> {
    match kind {
        "C" | "D" | "Dprime" => {
            let indicator = kind.parse().map_err(CliError::usage)?;
            build_indicator(indicator, n).map_err(CliError::usage)
        }
        "classic" => {
            let g = resolve_table(&require_g(kind, g)?, n)?;
            Ok(build_classic_gcd(&g))
        }
        "t1" | "t2" | "t3" => {
            let theorem = kind.parse().map_err(CliError::usage)?;
            let g = resolve_table(&require_g(kind, g)?, n)?;
            Ok(build_theorem(theorem, &g).0)
        }
        "hform" => {
            let h = resolve_table(&require_g(kind, g)?, n)?;
            Ok(build_hform(&h).0)
        }
        "G" => {
            let g = resolve_table(&require_g(kind, g)?, n)?;
            Ok(build_g_matrix(&g))
        }
        "diag" => {
            let g = resolve_table(&require_g(kind, g)?, n)?;
            Ok(build_diag(&g))
        }
        other => Err(CliError::Usage(format!(
            "unknown matrix kind `{other}` (expected classic, t1, t2, t3, hform, C, D, Dprime, G, or diag)"
        ))),
    }
}

pub fn dispatch(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Table {
            g,
            n,
            summatory: want_summatory,
            invert,
            format,
        } => {
            check_cap("table", n, caps::TABLE)?;
            let mut table = resolve_table(&g, n)?;
            if want_summatory {
                table = summatory(&table);
            } else if invert {
                table = mobius_invert(&table);
            }
            print!("{}", output::table_text(&table, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Build { kind, g, n, format } => {
            check_cap("matrix", n, caps::MATRIX)?;
            let matrix = build_matrix(&kind, g.as_deref(), n)?;
            print!("{}", output::matrix_text(&matrix, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Det { kind, g, n } => {
            check_cap("determinant", n, det_cap())?;
            let matrix = build_matrix(&kind, g.as_deref(), n)?;
            let det = gcdmat::det_bareiss(&matrix).map_err(CliError::usage)?;
            println!("{det}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check, g, n, sweep } => run_verify(&check, &g, n, sweep),
        Command::Explore {
            left,
            right,
            op,
            n,
            emit_matrix,
        } => {
            check_cap("determinant", n, det_cap())?;
            let spec = explore::ExploreSpec {
                left: parse_fn_spec(&left, n)?,
                right: parse_fn_spec(&right, n)?,
                combiner: op.parse().map_err(CliError::usage)?,
                n,
            };
            let report = explore::explore_with_cap(&spec, emit_matrix, det_cap())
                .map_err(CliError::usage)?;
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_fn_spec(spec: &str, n: usize) -> Result<explore::FnSpec, CliError> {
    if spec.strip_prefix("custom:").is_some() || spec.ends_with("-summatory") {
        Ok(explore::FnSpec::Table(resolve_table(spec, n)?))
    } else {
        Ok(explore::FnSpec::Builtin(
            Builtin::from_str(spec).map_err(CliError::usage)?,
        ))
    }
}

fn run_verify(
    check: &str,
    g: &str,
    n: Option<usize>,
    sweep: Option<usize>,
) -> Result<ExitCode, CliError> {
    let cap = det_cap();
    let sizes: Vec<usize> = match (n, sweep) {
        (_, Some(max)) => {
            if max == 0 {
                return Err(CliError::Usage("--sweep must be at least 1".to_string()));
            }
            check_cap("determinant", max, cap)?;
            (1..=max).collect()
        }
        (Some(n), None) => {
            check_cap("determinant", n, cap)?;
            vec![n]
        }
        (None, None) => unreachable!("clap requires --n or --sweep"),
    };
    let checks: Vec<CheckId> = if check == "all" {
        CheckId::ALL.to_vec()
    } else {
        vec![check.parse().map_err(CliError::usage)?]
    };
    let max_n = *sizes.last().expect("sizes is nonempty");
    let table = resolve_table(g, max_n)?;

    let mut all_passed = true;
    for check in &checks {
        for &size in &sizes {
            let report = verify_with_cap(*check, &table, size, cap).map_err(CliError::usage)?;
            if !report.passed && !check.expected_to_fail() {
                all_passed = false;
            }
            println!("{}", report.to_json());
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
