use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::presets::Preset;

#[derive(Debug, Parser)]
#[command(name = "susypt", version, about = "SUSY partners of the modified Pöschl-Teller and δ-well potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic and numeric bound levels of V and one partner, side by side
    Spectrum(SpectrumArgs),
    /// Write a sampled curve as `x,value` CSV
    Curve(CurveArgs),
    /// Run the invariant suites; exit 4 on any failure
    Verify(VerifyArgs),
    /// Sweep α at fixed g towards the δ-well
    DeltaLimit(DeltaLimitArgs),
    /// Reflection and transmission probabilities of V
    Scatter(ScatterArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    V,
    Partner,
    M,
    L,
    Beta,
    MissingState,
    TwoSusy,
    DeltaRegular,
}

/// Well parameters: α and exactly one of g, λ.
#[derive(Debug, Clone, Args)]
pub struct WellArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, conflicts_with = "lambda", allow_negative_numbers = true)]
    pub g: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct DeformationArgs {
    #[arg(long, value_enum)]
    pub branch: Option<BranchArg>,
    /// ζ (plus) or ξ (minus)
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub deformation: f64,
    /// Read a plus-branch ζ as quoted with M integrated from -∞
    #[arg(long)]
    pub zeta_from_minus_infinity: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[command(flatten)]
    pub deformation: DeformationArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Accepted eigenvalue error relative to max(1, |E|)
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// fig1, fig2, fig3 or fig4; writes every curve of the figure
    #[arg(long, conflicts_with_all = ["alpha", "g", "lambda", "quantity"])]
    pub preset: Option<Preset>,
    /// Directory for preset files
    #[arg(long, default_value = ".")]
    pub output_dir: PathBuf,
    #[arg(long, value_enum)]
    pub quantity: Option<Quantity>,
    #[command(flatten)]
    pub well: WellArgs,
    #[command(flatten)]
    pub deformation: DeformationArgs,
    /// ξ of the minus factor for two-susy
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub xi: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Output file; standard output when absent
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 20_240_917)]
    pub seed: u64,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DeltaLimitArgs {
    #[arg(long)]
    pub g: f64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub alphas: Vec<f64>,
    #[arg(long, allow_negative_numbers = true, default_value_t = -0.05)]
    pub xi: f64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScatterArgs {
    #[command(flatten)]
    pub well: WellArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    pub energies: Vec<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
}
