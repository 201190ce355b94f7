use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dilogint",
    version,
    about = "Closed forms and quadrature for three-particle phase-space integrals"
)]
pub struct Cli {
    /// TOML file with default tolerances, seed and grids.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Real dilogarithm Li2(x) for x <= 1.
    Li2 {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Integration limits of the (y, z) region.
    Region {
        #[command(flatten)]
        kin: KinArgs,
        /// Also print the z-limits at this y.
        #[arg(long)]
        y: Option<f64>,
    },
    /// Adaptive quadrature of a type (m,n) integral.
    Quad {
        #[command(flatten)]
        kin: KinArgs,
        /// Kernel type `m,n`.
        #[arg(long = "type", value_name = "M,N")]
        kind: String,
        /// Prefactor, e.g. `1` or `2*y^1*z^0,-1*y^0*z^1`.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        tol: Option<f64>,
        /// Integrate z in closed form (types with n <= 2 only).
        #[arg(long)]
        reduced: bool,
    },
    /// Closed form of I = type (2,1) with f = 1 at lambda = 0.
    #[command(name = "eval-I")]
    EvalI(EvalArgs),
    /// Closed form of the soft-subtracted remainder J2 at lambda = 0.
    #[command(name = "eval-J2")]
    EvalJ2(EvalArgs),
    /// Lambda expansion of the collinear-singular J1.
    #[command(name = "eval-J1")]
    EvalJ1(EvalArgs),
    /// Lambda expansion of J = type (2,1) with f = 1/z^2.
    #[command(name = "eval-J")]
    EvalJ(EvalArgs),
    /// Divergence-isolation procedures and their cross-checks.
    Split {
        #[arg(long, value_enum)]
        which: SplitKind,
        #[command(flatten)]
        kin: KinArgs,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
    },
    /// Run a verification suite; exits non-zero if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Threshold for the dilogarithm identity checks.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Tabulate closed form against quadrature over a parameter grid.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct KinArgs {
    #[arg(long)]
    pub xi: f64,
    #[arg(long, default_value_t = 0.0)]
    pub lambda: f64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub kin: KinArgs,
    /// Compare with the quadrature oracle.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub integral: TableIntegral,
    /// Kernel type for `--integral generic`.
    #[arg(long = "type", value_name = "M,N")]
    pub kind: Option<String>,
    /// Prefactor for `--integral generic`.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub xi_grid: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub lambda_grid: Option<Vec<f64>>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitKind {
    Cut,
    Soft,
    Collinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Dilog,
    Kinematics,
    ClosedForms,
    Regularization,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableIntegral {
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    #[value(name = "J1")]
    J1,
    #[value(name = "J2")]
    J2,
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}
