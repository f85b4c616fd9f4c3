use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pathdual", version, about = "Finite monoid dualities and pathwise duality of particle systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate or print commutative monoids.
    #[command(subcommand)]
    Monoids(MonoidsCommand),
    /// Enumerate semiring multiplications.
    #[command(subcommand)]
    Semirings(SemiringsCommand),
    /// Search for duality functions between catalog monoids.
    #[command(subcommand)]
    Dualities(DualitiesCommand),
    /// Construct the dual of a map on a product space.
    DualMap(DualMapArgs),
    /// Simulate a flow and check pathwise or expectation duality.
    Simulate(SimulateArgs),
    /// Run every reproduction check and print the manifest.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum MonoidsCommand {
    /// All commutative monoids of one order, up to isomorphism.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        order: u8,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The embedded catalog M0-M26, N1, N2.
    Catalog {
        #[arg(long)]
        label: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum QuotientArg {
    /// Semiring isomorphism only.
    Isomorphism,
    /// Also identify a semiring with its opposite.
    #[default]
    IsomorphismOrOpposite,
}

#[derive(Debug, Subcommand)]
pub enum SemiringsCommand {
    /// Every semiring multiplication on a catalog monoid, one per class.
    Enumerate {
        /// Catalog label of the additive monoid, e.g. M4 or M_4.
        #[arg(long)]
        additive: String,
        #[arg(long, value_enum, default_value_t)]
        quotient: QuotientArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum DualitiesCommand {
    /// All dualities between catalog monoids up to the given order.
    Find {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        max_order: u8,
        /// Group into essentially different classes and name them.
        #[arg(long)]
        reduce: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct DualMapArgs {
    /// Duality name (psi1, psi5, ...) or a JSON file.
    #[arg(long)]
    pub psi: String,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=16))]
    pub sites: u8,
    /// JSON K×K array of local homomorphism value tables.
    #[arg(long)]
    pub map: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Pathwise,
    Expectation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum CoverageArg {
    /// Exhaustive within the size budget, sampled above it.
    #[default]
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub psi: String,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=16))]
    pub sites: u8,
    /// JSON array of {"matrix": K×K value tables, "rate": r}.
    #[arg(long)]
    pub rates: PathBuf,
    #[arg(long)]
    pub t_max: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub check: CheckKind,
    #[arg(long, default_value_t = 10_000)]
    pub replicates: usize,
    /// Initial configuration on the S side, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub x: Option<Vec<usize>>,
    /// Initial configuration on the R side, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub y: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t)]
    pub coverage: CoverageArg,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
