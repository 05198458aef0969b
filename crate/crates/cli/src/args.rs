//! Command-line definitions.

use std::path::PathBuf;

use antsel::gumbel::Strategy;
use antsel::oracle::DEFAULT_SEED;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::grid::{parse_counts, parse_probabilities, parse_reals, Grid};

#[derive(Debug, Parser)]
#[command(
    name = "antsel",
    version,
    about = "Transmit antenna selection: order statistics, capacity and scheduling gain"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact and Gumbel-approximate distribution of the selection gain on an x grid
    Dist {
        #[command(flatten)]
        common: Common,
        /// Evaluation points, start:step:stop or a comma list
        #[arg(long, value_parser = parse_reals, default_value = "0:0.1:12", allow_hyphen_values = true)]
        x: Grid<f64>,
    },
    /// Gumbel normalizing constants and fit quality per (n, m)
    Fit(Common),
    /// Outage capacity versus SNR, antennas and outage probability
    Outage(Common),
    /// Ergodic capacity with bounds, approximation and simulation
    Ergodic(Common),
    /// Greedy versus round-robin scheduling capacity and gain
    Scheduling(Common),
    /// Scheduling gain table (defaults: K = 32, n = 1, m = 1..20, -5..10 dB)
    Table1(Common),
    /// Open-loop MIMO baseline next to antenna selection
    Mimo(Common),
    /// Run the simulation-versus-analytic checks and report each one
    Verify(Common),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dist { .. } => "dist",
            Command::Fit(_) => "fit",
            Command::Outage(_) => "outage",
            Command::Ergodic(_) => "ergodic",
            Command::Scheduling(_) => "scheduling",
            Command::Table1(_) => "table1",
            Command::Mimo(_) => "mimo",
            Command::Verify(_) => "verify",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Dist { common, .. } => common,
            Command::Fit(c)
            | Command::Outage(c)
            | Command::Ergodic(c)
            | Command::Scheduling(c)
            | Command::Table1(c)
            | Command::Mimo(c)
            | Command::Verify(c) => c,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Receive antennas, e.g. `1`, `1,2,4` or `1..3`
    #[arg(long, value_parser = parse_counts)]
    pub n: Option<Grid<u64>>,
    /// Transmit antennas, e.g. `1..20`
    #[arg(long, value_parser = parse_counts)]
    pub m: Option<Grid<u64>>,
    /// Number of users K
    #[arg(long, value_parser = parse_counts)]
    pub users: Option<Grid<u64>>,
    /// SNR in dB, start:step:stop or a comma list
    #[arg(long = "rho-db", value_parser = parse_reals, allow_hyphen_values = true)]
    pub rho_db: Option<Grid<f64>>,
    /// Outage probabilities, comma list in (0, 1)
    #[arg(long, value_parser = parse_probabilities)]
    pub p0: Option<Grid<f64>>,
    /// Normalizing constants for the Gumbel fit
    #[arg(long, value_enum, default_value_t = StrategyArg::Lemma)]
    pub strategy: StrategyArg,
    /// Column groups to compute; repeat for several (default depends on the subcommand)
    #[arg(long, value_enum)]
    pub mode: Vec<Mode>,
    /// Monte Carlo sample count
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Monte Carlo seed
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Output file (stdout if omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Approx,
    Bounds,
    Mc,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Approx => "approx",
            Mode::Bounds => "bounds",
            Mode::Mc => "mc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Lemma,
    Asymptotic,
    Alpha,
    Corollary,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Lemma => Strategy::LemmaExact,
            StrategyArg::Asymptotic => Strategy::Asymptotic,
            StrategyArg::Alpha => Strategy::OptimalAlpha,
            StrategyArg::Corollary => Strategy::CorollaryQ,
        }
    }
}
