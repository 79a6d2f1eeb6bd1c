//! `dunkl`: spectrum tables, exact states, evaluation grids, verification
//! suites, relation discovery and the acceptance report.
//!
//! Exit codes: 0 success, 1 a check failed, 2 a discovered relation has a
//! residual or is not unique, 3 invalid input or configuration.

mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dunkl_core::CoordinateSystem;
use serde_json::json;

use commands::{Outcome, VerifySuite};
use config::{FileConfig, FlagConfig, Format, RunConfig};

const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "dunkl", version, about = "Exact computations for the three-dimensional Dunkl oscillator")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Deformation parameters as `p/q,p/q,p/q`
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Degree cap for relation checks and discovery
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Relative tolerance for numeric cross-checks
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// TOML file with defaults for the options above
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Energies and degeneracies of the levels 0..=nmax
    Spectrum {
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Exact polynomial of a labeled state
    State { label: String },
    /// Evaluate a state on a grid, as CSV
    Eval {
        label: String,
        /// `value` or `lo:hi:count`
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x1: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x2: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x3: String,
        /// Omit the factor exp(-r^2/2)
        #[arg(long)]
        no_gaussian: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
        #[arg(long)]
        system: Option<CoordinateSystem>,
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Fit a commutator over the sd(3) ansatz: two operator names, or `all`
    Discover { first: String, second: Option<String> },
    /// Run every acceptance criterion
    Report {
        /// Level bound for the state criteria
        #[arg(long)]
        nmax: Option<u32>,
    },
}

fn run(cli: Cli) -> dunkl_core::Result<(Outcome, RunConfig, &'static str)> {
    let g = cli.global;
    let file = match &g.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let nmax = match &cli.command {
        Command::Spectrum { nmax } | Command::Verify { nmax, .. } | Command::Report { nmax } => *nmax,
        _ => None,
    };
    let flags = FlagConfig { mu: g.mu, cap: g.cap, nmax, tol: g.tol, format: g.format, out: g.out };
    let cfg = RunConfig::resolve(flags, file)?;
    let (name, outcome) = match cli.command {
        Command::Spectrum { .. } => ("spectrum", commands::spectrum(&cfg, cfg.nmax.unwrap_or(10))?),
        Command::State { label } => ("state", commands::state_text(&cfg, &label)?),
        Command::Eval { label, x1, x2, x3, no_gaussian } => {
            let axes = [commands::parse_axis(&x1)?, commands::parse_axis(&x2)?, commands::parse_axis(&x3)?];
            ("eval", commands::eval(&cfg, &label, axes, !no_gaussian)?)
        }
        Command::Verify { suite, system, .. } => ("verify", commands::verify(&cfg, suite, system, cfg.nmax)?),
        Command::Discover { first, second } => ("discover", commands::discover(&cfg, &first, second.as_deref())?),
        Command::Report { .. } => ("report", commands::report(&cfg)?),
    };
    Ok((outcome, cfg, name))
}

fn render(outcome: &Outcome, cfg: &RunConfig, name: &str) -> Vec<u8> {
    if let Some(raw) = &outcome.raw {
        return raw.clone();
    }
    match cfg.format {
        Format::Human => {
            let single = matches!(name, "spectrum" | "state" | "eval");
            format!("# dunkl {name}\n{}\n{}", cfg.header(single), outcome.human).into_bytes()
        }
        Format::Structured => {
            let mut doc = json!({
                "command": name,
                "config": cfg,
                "exit_code": outcome.exit,
                "result": outcome.structured,
            });
            if let Some(t) = &outcome.timings {
                doc["timings"] = t.clone();
            }
            let mut text = serde_json::to_string_pretty(&doc).expect("json value serializes");
            text.push('\n');
            text.into_bytes()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (outcome, cfg, name) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let bytes = render(&outcome, &cfg, name);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| format!("writing {}: {e}", path.display())),
        None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(outcome.exit)
}
