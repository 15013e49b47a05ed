//! Command-line front end: construct a matrix, verify the structural
//! identities, or run the accuracy benchmark.
//!
//! Exit codes are fixed so scripts can branch on the failure class:
//! 0 = success, 2 = invalid input or flags, 3 = numerical breakdown,
//! 4 = I/O failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{
    Algorithm, ExperimentConfig, ExperimentRecord, DEFAULT_REALIZATIONS, DEFAULT_SEED,
    run_experiment, spectrum_hash, write_csv,
};
use crate::error::{Error, Result};
use crate::householder::diag2trid;
use crate::schmeisser::naive_solve;
use crate::tridiagonal::SymmetricTridiagonal;
use crate::verify::{
    dptz_identity_residual, equal_up_to_offdiag_sign, first_row_uniform_residual,
    theorem_polynomial_identity_residual,
};

#[derive(Parser)]
#[command(
    name = "diag2trid",
    version,
    about = "Build unreduced symmetric tridiagonal matrices with a prescribed spectrum"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the tridiagonal matrix for a given spectrum.
    Construct(ConstructArgs),
    /// Run both constructions and check the structural identities.
    Verify(VerifyArgs),
    /// Reproduce the accuracy-vs-dimension experiment and write CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoFlag {
    Naive,
    Diag2trid,
}

impl From<AlgoFlag> for Algorithm {
    fn from(a: AlgoFlag) -> Algorithm {
        match a {
            AlgoFlag::Naive => Algorithm::Naive,
            AlgoFlag::Diag2trid => Algorithm::Diag2Trid,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ConstructArgs {
    /// Construction route.
    #[arg(long, value_enum)]
    algo: AlgoFlag,
    /// Eigenvalues: a comma-separated list, or a path to a file with one
    /// value per line (whitespace tolerant either way).
    #[arg(long, allow_hyphen_values = true)]
    lambdas: String,
    /// Write the matrix here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: MatrixFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Eigenvalues, as in `construct`.
    #[arg(long, allow_hyphen_values = true)]
    lambdas: String,
    /// Residual tolerance for the overall pass/fail verdict.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 50)]
    n_max: usize,
    #[arg(long, default_value_t = 2)]
    step: usize,
    #[arg(long, default_value_t = DEFAULT_REALIZATIONS)]
    realizations: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// CSV destination.
    #[arg(long, default_value = "fig1.csv")]
    out: PathBuf,
    /// Lower interval endpoint for the uniform spectra.
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    lo: f64,
    /// Upper interval endpoint.
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    hi: f64,
    /// Reject samples with adjacent gaps ≤ this (0 rejects exact ties only).
    #[arg(long, default_value_t = 0.0)]
    min_gap: f64,
    /// Comma-separated subset of {naive, diag2trid}.
    #[arg(long, default_value = "naive,diag2trid")]
    algos: String,
    /// Also write the resolved configuration as JSON next to the CSV.
    #[arg(long, default_value_t = false)]
    echo_config: bool,
}

/// Parses argv, runs the selected command, and maps errors to exit codes.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout (exit 0) and usage
            // errors on stderr (exit 2).
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Construct(args) => cmd_construct(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Reads a spectrum from an inline comma list or a file path.
fn parse_lambdas(spec: &str) -> Result<Vec<f64>> {
    let text = if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|source| Error::Io {
            path: PathBuf::from(spec),
            source,
        })?
    } else {
        spec.to_string()
    };
    let mut lambdas = Vec::new();
    for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let value: f64 = token.parse().map_err(|_| Error::InvalidInput {
            message: format!("'{token}' is not a number"),
        })?;
        lambdas.push(value);
    }
    if lambdas.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    crate::validate_strictly_increasing(&lambdas)?;
    Ok(lambdas)
}

fn matrix_json(t: &SymmetricTridiagonal, algo: Algorithm, lambdas: &[f64]) -> String {
    let value = serde_json::json!({
        "n": t.n(),
        "diag": t.diag(),
        "offdiag": t.offdiag(),
        "algo": algo.name(),
        "lambdas_hash": format!("{:016x}", spectrum_hash(lambdas)),
    });
    let mut s = serde_json::to_string_pretty(&value).expect("static schema");
    s.push('\n');
    s
}

fn matrix_csv(t: &SymmetricTridiagonal) -> String {
    let mut out = String::from("i,diag,offdiag\n");
    for i in 0..t.n() {
        if i == 0 {
            out.push_str(&format!("1,{},\n", t.diag()[0]));
        } else {
            out.push_str(&format!("{},{},{}\n", i + 1, t.diag()[i], t.offdiag()[i - 1]));
        }
    }
    out
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_construct(args: &ConstructArgs) -> Result<ExitCode> {
    let lambdas = parse_lambdas(&args.lambdas)?;
    let algo: Algorithm = args.algo.into();
    let t = algo.construct(&lambdas)?;
    let text = match args.format {
        MatrixFormat::Json => matrix_json(&t, algo, &lambdas),
        MatrixFormat::Csv => matrix_csv(&t),
    };
    emit(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let lambdas = parse_lambdas(&args.lambdas)?;
    let tol = args.tol;
    let n = lambdas.len();
    println!("n = {n}, tol = {tol:e}");

    let (t_stable, w) = diag2trid(&lambdas)?;
    let mut all_ok = true;
    let mut broke_down = false;

    match naive_solve(&lambdas) {
        Ok(t_naive) => {
            let cmp = equal_up_to_offdiag_sign(&t_naive, &t_stable, tol)?;
            println!("equal_up_to_offdiag_sign:              {cmp}");
            all_ok &= cmp.is_equal();
        }
        Err(e) if e.is_numerical_breakdown() => {
            println!("equal_up_to_offdiag_sign:              naive route broke down: {e}");
            broke_down = true;
        }
        Err(e) => return Err(e),
    }

    let frr = first_row_uniform_residual(&w);
    println!("first_row_uniform_residual:            {frr:.3e}");
    all_ok &= frr <= tol;

    match dptz_identity_residual(&t_stable) {
        Ok(residuals) => {
            let max = residuals.iter().fold(0.0_f64, |m, r| m.max(*r));
            println!("dptz_identity_residual (max):          {max:.3e}");
            all_ok &= max <= tol;
        }
        Err(e) if e.is_numerical_breakdown() => {
            println!("dptz_identity_residual (max):          unavailable: {e}");
            broke_down = true;
        }
        Err(e) => return Err(e),
    }

    let tpr = theorem_polynomial_identity_residual(&t_stable);
    println!("theorem_polynomial_identity_residual:  {tpr:.3e}");
    all_ok &= tpr <= tol;

    if broke_down {
        println!("RESULT: numerical breakdown (diag2trid-only checks above)");
        Ok(ExitCode::from(3))
    } else if all_ok {
        println!("RESULT: ok");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("RESULT: residuals exceed tol {tol:e}");
        Ok(ExitCode::from(3))
    }
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode> {
    if args.n_min < 1 || args.n_min > args.n_max {
        return Err(Error::InvalidInput {
            message: format!("need 1 ≤ n-min ≤ n-max, got {} and {}", args.n_min, args.n_max),
        });
    }
    if args.step < 1 {
        return Err(Error::InvalidInput { message: "step must be ≥ 1".into() });
    }
    let mut algorithms = Vec::new();
    for token in args.algos.split(',') {
        let algo: Algorithm = token.parse()?;
        if !algorithms.contains(&algo) {
            algorithms.push(algo);
        }
    }
    let cfg = ExperimentConfig {
        n_values: (args.n_min..=args.n_max).step_by(args.step).collect(),
        realizations: args.realizations,
        interval: (args.lo, args.hi),
        min_gap: args.min_gap,
        seed: args.seed,
        algorithms,
    };
    let records = run_experiment(&cfg)?;
    write_csv(&records, &args.out)?;
    if args.echo_config {
        let path = args.out.with_extension("config.json");
        let mut text = serde_json::to_string_pretty(&cfg).expect("static schema");
        text.push('\n');
        std::fs::write(&path, text).map_err(|source| Error::Io { path, source })?;
    }
    print_summary(&records);
    println!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn print_summary(records: &[ExperimentRecord]) {
    println!(
        "{:>5}  {:<10}  {:>14}  {:>14}  {:>9}",
        "n", "algorithm", "mean_worst_err", "max_worst_err", "failures"
    );
    for r in records {
        println!(
            "{:>5}  {:<10}  {:>14.6e}  {:>14.6e}  {:>9}",
            r.n, r.algorithm.name(), r.mean_worst_error, r.max_worst_error, r.failures
        );
    }
}
