//! Batch verification CLI.
//!
//! ```text
//! deep-ridgelet <verify|decompose|reconstruct|wavelet> --config <path>
//!               [--out <path>] [--seed N] [--tol X]
//! ```
//!
//! Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
//! 2 = configuration or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};

use deep_ridgelet_cli::commands::{decompose, reconstruct, verify, wavelet};
use deep_ridgelet_cli::config::ExperimentConfig;
use deep_ridgelet_cli::report::to_json;
use deep_ridgelet_cli::Outcome;

#[derive(Parser)]
#[command(name = "deep-ridgelet", version, about = "Koopman/ridgelet verification pipelines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operator-law checks: unitarity, composition, duality, intertwining.
    Verify(RunArgs),
    /// Commutant and invariant-subspace decomposition with certificates.
    Decompose(RunArgs),
    /// Round-trip reconstruction on every irreducible subspace.
    Reconstruct(RunArgs),
    /// Affine-group wavelet round trip with refinement study.
    Wavelet(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Experiment configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Report destination; stdout when omitted (config `output` applies
    /// when set).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the config's pass/fail tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

fn main() -> ExitCode {
    match run() {
        Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<Outcome> {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Verify(a) => ("verify", a),
        Command::Decompose(a) => ("decompose", a),
        Command::Reconstruct(a) => ("reconstruct", a),
        Command::Wavelet(a) => ("wavelet", a),
    };

    let mut config = ExperimentConfig::load(&args.config)?;
    if !config.pipeline.matches_command(name) {
        bail!(
            "config {} declares pipeline `{:?}`, which the `{name}` subcommand does not run",
            args.config.display(),
            config.pipeline
        );
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(tol) = args.tol {
        config.tolerance = Some(tol);
    }

    let (json, outcome) = match name {
        "verify" => {
            let (report, outcome) = verify::run(&config)?;
            (to_json(&report), outcome)
        }
        "decompose" => {
            let (report, outcome) = decompose::run(&config)?;
            (to_json(&report), outcome)
        }
        "reconstruct" => {
            let (report, outcome) = reconstruct::run(&config)?;
            (to_json(&report), outcome)
        }
        "wavelet" => {
            let (report, outcome) = wavelet::run(&config)?;
            (to_json(&report), outcome)
        }
        _ => unreachable!(),
    };

    let destination = args
        .out
        .clone()
        .or_else(|| config.output.as_ref().map(|p| config.resolve(p)));
    match destination {
        Some(path) => std::fs::write(&path, &json)
            .map_err(|e| anyhow::anyhow!("cannot write report {}: {e}", path.display()))?,
        None => print!("{json}"),
    }
    Ok(outcome)
}
