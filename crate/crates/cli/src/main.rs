//! Command-line front end: metric evaluation on spec-file domains, the
//! counterexample demo tables, and the verification suite runner.
//!
//! Exit codes: 0 success, 2 schema/parse errors, 3 inexact result without
//! `--allow-bounds`, 4 domain violations, 5 verification failures.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod demos;
mod eval;

#[derive(Parser)]
#[command(
    name = "invmetrics",
    about = "Invariant functions and pseudometrics on special domain families",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a metric kind on a domain described by a JSON spec file.
    Eval {
        /// Path to the domain spec (see the schemas/ directory).
        spec: PathBuf,
        /// Metric kind: mobius, caratheodory, green, azukawa, sibony,
        /// sibony-function, sibony-metric.
        #[arg(long)]
        metric: String,
        /// Order for the higher Sibony kinds (p for the function family,
        /// the full even order 2p for the metric family).
        #[arg(long)]
        order: Option<u32>,
        /// Base point, complex coordinates as re:im pairs joined by commas.
        #[arg(long)]
        base: String,
        /// Target point (function kinds).
        #[arg(long, conflicts_with = "dir")]
        target: Option<String>,
        /// Direction (metric kinds).
        #[arg(long)]
        dir: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Exit 0 even when only bounds are available.
        #[arg(long)]
        allow_bounds: bool,
    },
    /// Reproduce one of the counterexample tables as CSV.
    Demo {
        /// nonusc | regularization | increasing | chain | balanced | hartogs-gap
        name: String,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property-test suites.
    Verify {
        /// chain | contractibility | normalization | nonusc | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Sampling seed; defaults to $INVMETRICS_SEED, then 17.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    // die quietly when stdout is a closed pipe (demo | head, eval | grep -q)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            spec,
            metric,
            order,
            base,
            target,
            dir,
            format,
            allow_bounds,
        } => eval::run(
            &spec,
            &metric,
            order,
            &base,
            target.as_deref(),
            dir.as_deref(),
            matches!(format, Format::Csv),
            allow_bounds,
        ),
        Command::Demo { name, out } => demos::run(&name, out.as_deref()),
        Command::Verify {
            suite,
            seed,
            samples,
            report,
        } => run_verify(&suite, seed, samples, report.as_deref()),
    }
}

fn default_seed() -> u64 {
    std::env::var("INVMETRICS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(17)
}

fn run_verify(
    suite: &str,
    seed: Option<u64>,
    samples: usize,
    report_path: Option<&std::path::Path>,
) -> ExitCode {
    let seed = seed.unwrap_or_else(default_seed);
    let report = match invmetrics::verify::run_suite(suite, seed, samples) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", report.to_text());
    if let Some(path) = report_path {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(5)
    }
}
