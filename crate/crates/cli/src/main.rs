use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hochschild_cli::commands;
use hochschild_cli::parallel::default_threads;
use hochschild_cli::{CliError, RunReport};
use serde_json::json;

/// Verifies point counts of the Hochschild space of SL_n flag varieties and
/// Hochschild cohomology dimensions of finite-dimensional algebras.
#[derive(Debug, Parser)]
#[command(name = "hochschild", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for brute-force counting (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Leave the wall-time out of the report.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Counting polynomial of the Hochschild space and its value at q = 1.
    Euler {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of T_{w0}^2 at q = 1 against the indicator of the identity.
    Lemma42 {
        #[arg(long)]
        n: usize,
    },
    /// Per-stratum point counts over F_p by enumeration.
    Bruteforce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "orbit", value_parser = ["full", "orbit"])]
        level: String,
        /// Compare with the symbolic stratum polynomials.
        #[arg(long)]
        compare: bool,
    },
    /// Coefficients of T_{w0}^2, or their values at q = Q.
    HeckeSquare {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
    },
    /// Hochschild cohomology dimensions of an algebra.
    Hh {
        /// `builtin:NAME` or a JSON presentation file.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Reconstructs the counting polynomial from brute-force totals.
    Interp {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Euler { .. } => "euler",
            Command::Lemma42 { .. } => "lemma42",
            Command::Bruteforce { .. } => "bruteforce",
            Command::HeckeSquare { .. } => "hecke-square",
            Command::Hh { .. } => "hh",
            Command::Interp { .. } => "interp",
        }
    }
}

fn run(command: &Command, threads: usize) -> Result<RunReport, CliError> {
    match command {
        Command::Euler { n } => commands::euler(*n),
        Command::Lemma42 { n } => commands::lemma42(*n),
        Command::Bruteforce {
            n,
            p,
            level,
            compare,
        } => commands::bruteforce(*n, *p, level, *compare, threads),
        Command::HeckeSquare { n, at } => commands::hecke_square(*n, *at),
        Command::Hh {
            algebra,
            max_degree,
        } => commands::hh(algebra, *max_degree),
        Command::Interp { n, primes } => commands::interp(*n, primes, threads),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.unwrap_or_else(default_threads).max(1);
    let start = Instant::now();
    match run(&cli.command, threads) {
        Ok(mut report) => {
            if !cli.no_timing {
                report.ms = Some(start.elapsed().as_millis() as u64);
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(err) => {
            let violations: Vec<String> =
                err.violations().iter().map(ToString::to_string).collect();
            if cli.json {
                let out = json!({
                    "command": cli.command.name(),
                    "status": "error",
                    "error": err.to_string(),
                    "violations": violations,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializable")
                );
            } else {
                eprintln!("error: {err}");
                for v in &violations {
                    eprintln!("  - {v}");
                }
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
