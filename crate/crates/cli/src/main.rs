//! `qloop`: verification grids, l-weights and operator images from the
//! command line. Exit status 0 means every check passed, 1 means a check
//! failed, 2 means the invocation was invalid.

mod commands;
mod zs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qloop", version, about = "Exact l-weights of q-oscillator representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Compare computed and closed-form l-weights on every basis vector up to --mmax.
    Verify,
    /// l-weight of one basis vector --m of one representation.
    Lweight,
    /// Serre and weight relations for every pair of generators.
    Serre,
    /// Commutators of Drinfeld generator images, n >= 1, m >= 0, n + m <= --order.
    Drinfeld,
    /// Factorization of highest l-weights into prefundamental pieces.
    Factor,
    /// Oscillator words for the images of e_i and q^{h_i}.
    DumpOp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    OscToPref,
    PrefMinus,
    PrefPlus,
    FullTensor,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Rank l of sl_{l+1}.
    #[arg(long, global = true)]
    pub l: Option<usize>,
    /// Representation index, 1..=l+1.
    #[arg(long, global = true, default_value_t = 1)]
    pub a: usize,
    /// Use the reflected family.
    #[arg(long, global = true)]
    pub bar: bool,
    /// Generator or Drinfeld index; all indices when omitted.
    #[arg(long, global = true)]
    pub i: Option<usize>,
    /// Occupation vector, comma separated (default: vacuum).
    #[arg(long, global = true)]
    pub m: Option<String>,
    /// Series order.
    #[arg(long, global = true, env = "QLOOP_ORDER", default_value_t = 6)]
    pub order: usize,
    /// Largest occupation in sample grids.
    #[arg(long, global = true, default_value_t = 2)]
    pub mmax: u32,
    /// Spectral value zeta^s, e.g. "q^3" or "-1/2*q"; a comma-separated
    /// list of l+1 values for --kind full-tensor.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub zs: String,
    /// Which factorization to check.
    #[arg(long, global = true, value_enum, default_value_t = FactorKind::OscToPref)]
    pub kind: FactorKind,
    /// Write the JSON report to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Print the JSON report instead of the table.
    #[arg(long, global = true)]
    pub json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, &cli.opts) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.json).expect("serializable");
            if let Some(path) = &cli.opts.output {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.opts.json {
                println!("{text}");
            } else {
                print!("{}", outcome.table);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
