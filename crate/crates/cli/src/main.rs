mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Extended Galilei / Para-Galilei orbits: verification, simulation, bracket
/// tables and the side-by-side comparison report.
#[derive(Parser)]
#[command(name = "orbitkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every invariant suite (and the configured point's checks); exit 1 on any failure.
    Verify(Common),
    /// Write the RK4 trajectory as CSV (and closed form vs RK4 for `compare` outputs).
    Simulate(Common),
    /// Analytic and finite-difference coordinate brackets at the configured point.
    Brackets(Common),
    /// Both families side by side: invariants, fields, brackets, energies, Newton laws.
    Table(Common),
}

#[derive(Args)]
struct Common {
    /// Scenario config (JSON).
    config: PathBuf,
    /// Overrides the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the config's out_dir.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn run(cli: Cli) -> commands::Outcome {
    let (cmd, common): (fn(&config::Scenario) -> commands::Outcome, Common) = match cli.command {
        Command::Verify(c) => (commands::verify, c),
        Command::Simulate(c) => (commands::simulate, c),
        Command::Brackets(c) => (commands::brackets, c),
        Command::Table(c) => (commands::table, c),
    };
    let cfg = config::load(&common.config)?;
    let scenario = cfg.validate(common.seed, common.out_dir.as_deref())?;
    cmd(&scenario)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
