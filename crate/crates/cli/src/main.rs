use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

#[derive(Parser)]
#[command(name = "z4uk", version, about = "Cyclic codes of odd length over Z4[u]/<u^k>")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone, Debug)]
pub struct Options {
    /// Also write the result to this file
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest number of elements any enumeration may materialize
    #[arg(long, global = true, default_value_t = 1 << 22)]
    pub budget: u128,
    /// Worker threads for parallel searches (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Read and print factors in the fixed-points-then-pairs arrangement
    #[arg(long, global = true)]
    pub paper_order: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Factors f_j of x^n - 1 over Z4, idempotents and the reciprocal pairing
    Factor { n: usize },
    /// Number of cyclic codes of length n over Z4[u]/<u^k>
    Count { n: usize, k: usize },
    /// All ideals of GR(4, d)[u]/<u^k> with their sizes
    Ideals {
        d: usize,
        k: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Dual of the code given by per-factor ideal descriptors
    Dual {
        n: usize,
        k: usize,
        /// `;`-separated ideals, one per factor, e.g. "u^4;u^3;u^4"
        #[arg(long)]
        specs: String,
    },
    /// Census of self-dual cyclic codes
    Selfdual {
        n: usize,
        k: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Quasi-cyclic generator matrix and parameters of the image of a code over Z4[u]/<u^4>
    Gray {
        n: usize,
        #[arg(long)]
        specs: String,
    },
    /// Parameters [4n, log2 M, d] with the exact minimum Lee distance
    Distance {
        n: usize,
        #[arg(long)]
        specs: String,
    },
    /// Every codeword of a code, as n*k digits ordered by u-power then position
    Codewords {
        n: usize,
        k: usize,
        #[arg(long)]
        specs: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.opts.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot start {t} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let o = &cli.opts;
    let result = match cli.command {
        Command::Factor { n } => commands::factor(o, n),
        Command::Count { n, k } => commands::count(o, n, k),
        Command::Ideals { d, k, count_only } => commands::ideals(o, d, k, count_only),
        Command::Dual { n, k, specs } => commands::dual(o, n, k, &specs),
        Command::Selfdual { n, k, count_only } => commands::selfdual(o, n, k, count_only),
        Command::Gray { n, specs } => commands::gray(o, n, &specs),
        Command::Distance { n, specs } => commands::distance(o, n, &specs),
        Command::Codewords { n, k, specs } => commands::codewords(o, n, k, &specs),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
