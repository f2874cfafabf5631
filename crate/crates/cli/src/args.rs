use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "wedge",
    version,
    about = "Casimir energies of dielectric wedges and cosmic-string radiation spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy series e(p) or w(p) at one or more wedge parameters.
    Energy(EnergyArgs),
    /// Energy curves for several models over a p range.
    Sweep(SweepArgs),
    /// Photon spectrum created by a forming cosmic string.
    String(StringArgs),
    /// Eigenfrequencies of the perfectly conducting wedge cavity.
    Modes(ModesArgs),
    /// Zero-mode residual energy and corner pole coefficients.
    Zeromode(ZeroModeArgs),
    /// Run the verification checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Strong,
    Weak,
    Dilute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Pec,
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZerosArg {
    Exact,
    Mcmahon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpansionArg {
    Leading,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolArg {
    Te,
    Tm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DispersionArg {
    Constant,
    PowerLaw,
    DrudeLike,
}

/// The p grid: an explicit list or an evenly spaced range.
#[derive(Debug, Clone, Args)]
pub struct PGrid {
    /// Wedge parameter(s), comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["p_min", "p_max", "steps"])]
    pub p: Vec<f64>,
    #[arg(long)]
    pub p_min: Option<f64>,
    #[arg(long)]
    pub p_max: Option<f64>,
    /// Number of grid points, including both ends.
    #[arg(long)]
    pub steps: Option<usize>,
}

/// Geometry, media and series options shared by `energy` and `sweep`.
#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub grid: PGrid,
    /// Truncation order of the m-sum; defaults to a p-dependent order.
    #[arg(long = "M")]
    pub m: Option<u32>,
    /// Reflection coefficient of a diaphanous arc (weak model).
    #[arg(long)]
    pub xi: Option<f64>,
    #[arg(long)]
    pub eps1: Option<f64>,
    #[arg(long)]
    pub mu1: Option<f64>,
    #[arg(long)]
    pub eps2: Option<f64>,
    #[arg(long)]
    pub mu2: Option<f64>,
    #[arg(long, value_enum, default_value = "pec")]
    pub boundary: BoundaryArg,
    /// Arc radius.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Refractive index of a uniform or diaphanous configuration.
    #[arg(long, default_value_t = 1.0)]
    pub n: f64,
    /// Absolute tolerance of each integral.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Add the m > M asymptotic tail through Hurwitz zeta values.
    #[arg(long)]
    pub accelerate: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct EnergyArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Models, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "strong,weak")]
    pub model: Vec<ModelArg>,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Debug, Clone, Args)]
pub struct StringArgs {
    /// β = 1/(1 − 4GM).
    #[arg(long, default_value_t = 1.01)]
    pub beta: f64,
    /// Azimuthal indices, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub m: Vec<u32>,
    /// Radial indices, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub s: Vec<u32>,
    /// Axial wavenumbers, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["k_max", "k_steps"])]
    pub k: Vec<f64>,
    /// Upper end of an evenly spaced k grid starting at 0.
    #[arg(long, requires = "k_steps")]
    pub k_max: Option<f64>,
    #[arg(long, requires = "k_max")]
    pub k_steps: Option<usize>,
    /// Root convention(s), comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "mcmahon")]
    pub zeros: Vec<ZerosArg>,
    #[arg(long, value_enum, default_value = "leading")]
    pub expansion: ExpansionArg,
    /// Refractive index of the wedge medium.
    #[arg(long, default_value_t = 1.0)]
    pub n: f64,
    /// Permittivity of the wedge medium.
    #[arg(long, default_value_t = 1.0)]
    pub eps: f64,
    /// Opening angle in radians.
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub length: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ModesArgs {
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub m: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub s: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub k: Vec<f64>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "te,tm")]
    pub pol: Vec<PolArg>,
    #[arg(long, value_enum, default_value = "pec")]
    pub boundary: BoundaryArg,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub n: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ZeroModeArgs {
    /// Report the corner pole coefficients instead of the residual energy.
    #[arg(long)]
    pub poles: bool,
    #[arg(long, value_enum, default_value = "power-law")]
    pub dispersion: DispersionArg,
    /// Reflection coefficient at zero frequency.
    #[arg(long, default_value_t = 1.0)]
    pub xi: f64,
    /// Decay exponent of ξ(x).
    #[arg(long, default_value_t = 1.5)]
    pub beta: f64,
    /// Onset of the decay.
    #[arg(long, default_value_t = 1.0)]
    pub zeta0: f64,
    /// Upper cutoff(s) Λ, comma separated; 200 by default, 40 with `--poles`.
    #[arg(long, value_delimiter = ',')]
    pub cutoff: Vec<f64>,
    /// Regulator values for the residue extrapolation.
    #[arg(long, value_delimiter = ',', default_value = "0.02,0.05,0.1")]
    pub s_values: Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub n: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Restrict to one group: bessel, energy, string, zeromode, structural.
    #[arg(long)]
    pub only: Option<String>,
    /// Machine-readable report.
    #[arg(long)]
    pub json: bool,
}
