use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use weyl_strata::{CliError, Format, Outcome, RunConfig};

#[derive(Parser)]
#[command(name = "weyl-strata", version, about = "Jordan classes, sheets and strata of small reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a group into Jordan classes, sheets and strata.
    Compute(Args),
    /// Check the stratification theorem and the invariant suite.
    Verify(Args),
    /// Print the character table of the Weyl group with b-invariants.
    Chartab(Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Markdown,
}

#[derive(clap::Args)]
struct Args {
    /// Semisimple type, e.g. C2, G2 or A1xA1.
    #[arg(long = "type")]
    cartan_type: String,
    /// Rank of the maximal torus, at least the semisimple rank.
    #[arg(long)]
    total_rank: Option<usize>,
    /// Characteristic of the base field: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    /// Largest Weyl group order to enumerate.
    #[arg(long)]
    order_cap: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write the document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Args {
    fn config(&self) -> RunConfig {
        RunConfig {
            cartan_type: self.cartan_type.clone(),
            total_rank: self.total_rank,
            characteristic: self.characteristic,
            order_cap: self.order_cap,
            format: match self.format {
                OutputFormat::Json => Format::Json,
                OutputFormat::Markdown => Format::Markdown,
            },
            out: self.out.clone(),
        }
    }
}

fn emit(cfg: &RunConfig, outcome: &Outcome) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, &outcome.document).map_err(|source| CliError::Output { path: path.clone(), source })
        }
        None => {
            let _ = std::io::stdout().write_all(outcome.document.as_bytes());
            Ok(())
        }
    }
}

type Runner = fn(&RunConfig) -> Result<Outcome, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, run): (&Args, Runner) = match &cli.command {
        Command::Compute(a) => (a, weyl_strata::compute),
        Command::Verify(a) => (a, weyl_strata::verify),
        Command::Chartab(a) => (a, weyl_strata::chartab),
    };
    let cfg = args.config();
    match run(&cfg).and_then(|o| emit(&cfg, &o).map(|_| o.code)) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprint!("{}", e.report());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
