use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use subspace_codes_cli::commands;
use subspace_codes_cli::config::ExperimentConfig;
use subspace_codes_cli::error::CliResult;

#[derive(Parser)]
#[command(name = "subcodes", version, about = "Subspace codes over noisy operator channels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and report its parameters.
    Construct(Common),
    /// Monte-Carlo transmission over the operator channel.
    Simulate(Common),
    /// Rate/distance curves.
    Bounds(Common),
    /// CP line codes at a fixed normalized distance across lengths.
    Figure3(Common),
    /// Pairwise distances between the codewords of two saved codes.
    Distance {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: Option<PathBuf>,
    /// Overrides the config's master seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Overrides the config's output path.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn resolve(&self) -> CliResult<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        if self.seed.is_some() {
            cfg.seed = self.seed;
        }
        if self.trials.is_some() {
            cfg.trials = self.trials;
        }
        if self.out.is_some() {
            cfg.out = self.out.clone();
        }
        Ok(cfg)
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Construct(c) => {
            let cfg = c.resolve()?;
            let (code, report) = commands::construct(&cfg)?;
            match &cfg.out {
                Some(path) => {
                    code.save(path)?;
                    print!("{}", report.render());
                }
                None => {
                    println!("{}", code.to_json());
                    eprint!("{}", report.render());
                }
            }
        }
        Command::Simulate(c) => {
            let cfg = c.resolve()?;
            emit(cfg.out.as_deref(), &commands::simulate(&cfg)?)?;
        }
        Command::Bounds(c) => {
            let cfg = c.resolve()?;
            emit(cfg.out.as_deref(), &commands::bounds(&cfg)?)?;
        }
        Command::Figure3(c) => {
            let cfg = c.resolve()?;
            emit(cfg.out.as_deref(), &commands::figure3(&cfg)?)?;
        }
        Command::Distance { a, b, out } => emit(out.as_deref(), &commands::distance_table(&a, &b)?)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
