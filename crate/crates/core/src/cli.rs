//! Command-line interface of the `sinc-expdecay` binary.
//!
//! Subcommands:
//!
//! * `run` — convergence sweep for one benchmark function: builds
//!   approximants over a range of resolutions and writes
//!   `n,h,M,N,observed_error,bound` CSV, one file per map.
//! * `domain` — traces the boundary of a map's analyticity region as CSV.
//! * `verify` — runs the numerical inequality checks and prints one CSV
//!   row per check.
//! * `plotscript` — emits a gnuplot script rendering a `run` output pair.
//!
//! Exit codes: 0 on success, 1 for runtime failures (including failed
//! verification checks), 2 for usage errors. All output is deterministic:
//! rerunning a command byte-identically reproduces its files.

use crate::inequalities;
use crate::maps::{self, MapKind};
use crate::testbed::{self, ExampleId};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::{self, Write};
use std::path::Path;

#[derive(Debug, Parser)]
#[command(
    name = "sinc-expdecay",
    version,
    about = "Sinc approximation of exponentially decaying functions on (0, inf), \
             with computable error bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep resolutions for a benchmark function and report observed error
    /// vs a-priori bound as CSV (columns n,h,M,N,observed_error,bound)
    Run(RunArgs),
    /// Trace the boundary curve of a map's analyticity region as CSV
    /// (columns x_strip,re_upper,im_upper,re_lower,im_lower)
    Domain(DomainArgs),
    /// Run the numerical inequality checks; prints one CSV row per check
    /// and exits nonzero if any check fails
    Verify(VerifyArgs),
    /// Emit a gnuplot script for a pair of run CSV files
    Plotscript(PlotscriptArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExampleChoice {
    /// t^(pi/4) e^(-t)
    F1,
    /// e^(-t) sqrt(1 - e^(-t))
    F2,
    /// sqrt(1 + (1 - 2e^(-t))^2) * t/(1+t) * e^(-t)
    F3,
}

impl From<ExampleChoice> for ExampleId {
    fn from(c: ExampleChoice) -> ExampleId {
        match c {
            ExampleChoice::F1 => ExampleId::F1,
            ExampleChoice::F2 => ExampleId::F2,
            ExampleChoice::F3 => ExampleId::F3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapChoice {
    /// arcsinh map only
    Psi,
    /// logistic-log map only
    Phi,
    /// both maps
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SingleMapChoice {
    /// arcsinh map
    Psi,
    /// logistic-log map
    Phi,
}

impl From<SingleMapChoice> for MapKind {
    fn from(c: SingleMapChoice) -> MapKind {
        match c {
            SingleMapChoice::Psi => MapKind::Arcsinh,
            SingleMapChoice::Phi => MapKind::LogisticLog,
        }
    }
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Benchmark function to approximate
    #[arg(long, value_enum)]
    example: ExampleChoice,
    /// Which map(s) to sweep
    #[arg(long, value_enum, default_value = "both")]
    map: MapChoice,
    /// Smallest resolution parameter (>= 1)
    #[arg(long, default_value_t = 2)]
    n_min: u32,
    /// Largest resolution parameter
    #[arg(long, default_value_t = 100)]
    n_max: u32,
    /// Step between resolutions (>= 1)
    #[arg(long, default_value_t = 2)]
    n_step: u32,
    /// Output prefix: writes <OUT>_psi.csv / <OUT>_phi.csv, or '-' to
    /// stream CSV to stdout (summaries then go to stderr)
    #[arg(long)]
    out: String,
}

#[derive(Debug, Args)]
struct DomainArgs {
    /// Which map's region to trace
    #[arg(long, value_enum)]
    map: SingleMapChoice,
    /// Strip half-width (0 < d < pi/2 for psi, 0 < d < pi for phi)
    #[arg(long, default_value_t = 1.0)]
    d: f64,
    /// Left end of the strip x-range
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    x_min: f64,
    /// Right end of the strip x-range
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    x_max: f64,
    /// Number of boundary samples (>= 2)
    #[arg(long, default_value_t = 400)]
    samples: usize,
    /// Output CSV path, or '-' for stdout
    #[arg(long)]
    out: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Random samples per check
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// RNG seed (checks are deterministic for a fixed seed)
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Args)]
struct PlotscriptArgs {
    /// Benchmark function the CSVs belong to (used in labeling)
    #[arg(long, value_enum)]
    example: ExampleChoice,
    /// CSV prefix as passed to `run --out`: expects <PREFIX>_psi.csv and
    /// <PREFIX>_phi.csv to exist
    #[arg(long)]
    prefix: String,
    /// Output script path, or '-' for stdout
    #[arg(long)]
    out: String,
}

enum CliError {
    /// Bad arguments; exits 2.
    Usage(String),
    /// Failure while executing a well-formed request; exits 1.
    Runtime(String),
}

/// Parse `std::env::args` and execute. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Run(args) => cmd_run(&args),
        Command::Domain(args) => cmd_domain(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Plotscript(args) => cmd_plotscript(&args),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn write_output(path: &str, bytes: &[u8]) -> Result<(), CliError> {
    if let Some(parent) = Path::new(path).parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| {
                CliError::Runtime(format!("cannot create {}: {e}", parent.display()))
            })?;
        }
    }
    fs::write(path, bytes).map_err(|e| CliError::Runtime(format!("cannot write {path}: {e}")))
}

fn cmd_run(args: &RunArgs) -> Result<(), CliError> {
    if args.n_min < 1 {
        return Err(CliError::Usage("--n-min must be at least 1".into()));
    }
    if args.n_step < 1 {
        return Err(CliError::Usage("--n-step must be at least 1".into()));
    }
    if args.n_min > args.n_max {
        return Err(CliError::Usage(format!(
            "--n-min ({}) must not exceed --n-max ({})",
            args.n_min, args.n_max
        )));
    }
    let ns: Vec<u32> = (args.n_min..=args.n_max)
        .step_by(args.n_step as usize)
        .collect();
    let ex = testbed::example(args.example.into());
    let kinds: &[MapKind] = match args.map {
        MapChoice::Psi => &[MapKind::Arcsinh],
        MapChoice::Phi => &[MapKind::LogisticLog],
        MapChoice::Both => &[MapKind::Arcsinh, MapKind::LogisticLog],
    };
    for &kind in kinds {
        let reports = testbed::convergence_sweep(&ex, kind, &ns)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        let mut buf = Vec::new();
        testbed::write_error_reports(&reports, &mut buf)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        let last = reports.last().expect("resolution range is never empty");
        let summary = format!(
            "{} {}: at n = {} observed error {:.3e}, bound {:.3e}",
            ex.id,
            kind.tag(),
            last.n,
            last.observed_error,
            last.bound
        );
        if args.out == "-" {
            io::stdout()
                .write_all(&buf)
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            eprintln!("{summary}");
        } else {
            let path = format!("{}_{}.csv", args.out, kind.tag());
            write_output(&path, &buf)?;
            println!("wrote {path} ({summary})");
        }
    }
    Ok(())
}

fn cmd_domain(args: &DomainArgs) -> Result<(), CliError> {
    let kind: MapKind = args.map.into();
    let limit = kind.strip_limit();
    if !(args.d > 0.0 && args.d < limit) {
        return Err(CliError::Usage(format!(
            "--d must satisfy 0 < d < {limit:.6} for map {}",
            kind.tag()
        )));
    }
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    if args.x_min.is_nan() || args.x_max.is_nan() || args.x_min >= args.x_max {
        return Err(CliError::Usage(format!(
            "--x-min ({}) must be below --x-max ({})",
            args.x_min, args.x_max
        )));
    }
    let curve = maps::domain_boundary(kind, args.d, args.x_min, args.x_max, args.samples)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut buf = Vec::new();
    curve
        .write_csv(&mut buf)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    if args.out == "-" {
        io::stdout()
            .write_all(&buf)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
    } else {
        write_output(&args.out, &buf)?;
        println!(
            "wrote {} ({} boundary samples of map {} at d = {})",
            args.out,
            args.samples,
            kind.tag(),
            args.d
        );
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let reports = inequalities::run_all(args.samples, args.seed);
    println!("{}", inequalities::SampleReport::CSV_HEADER);
    for r in &reports {
        println!("{}", r.csv_row());
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(CliError::Runtime(
            "one or more inequality checks failed".into(),
        ))
    }
}

fn cmd_plotscript(args: &PlotscriptArgs) -> Result<(), CliError> {
    let psi_csv = format!("{}_psi.csv", args.prefix);
    let phi_csv = format!("{}_phi.csv", args.prefix);
    for path in [&psi_csv, &phi_csv] {
        if !Path::new(path).exists() {
            return Err(CliError::Runtime(format!(
                "missing CSV file: {path} (generate it with the run subcommand)"
            )));
        }
    }
    let id: ExampleId = args.example.into();
    let script = format!(
        "# Convergence of the sinc approximation for {id}\n\
         # Render with: gnuplot -p <this file>\n\
         set datafile separator \",\"\n\
         set logscale y\n\
         set xlabel \"n\"\n\
         set ylabel \"max error over the evaluation grid\"\n\
         set title \"{id}: observed error vs a-priori bound\"\n\
         set key top right\n\
         plot \\\n\
         \x20 \"{psi_csv}\" skip 1 using 1:5 with linespoints lc 1 dt 1 pt 7 title \"observed (arcsinh map)\", \\\n\
         \x20 \"{psi_csv}\" skip 1 using 1:6 with lines lc 1 dt 3 title \"bound (arcsinh map)\", \\\n\
         \x20 \"{phi_csv}\" skip 1 using 1:5 with linespoints lc 2 dt 1 pt 5 title \"observed (logistic-log map)\", \\\n\
         \x20 \"{phi_csv}\" skip 1 using 1:6 with lines lc 2 dt 3 title \"bound (logistic-log map)\"\n"
    );
    if args.out == "-" {
        print!("{script}");
    } else {
        write_output(&args.out, script.as_bytes())?;
        println!("wrote {}", args.out);
    }
    Ok(())
}
