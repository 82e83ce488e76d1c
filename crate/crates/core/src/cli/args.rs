use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::spectrum::Condition;

#[derive(Debug, Parser)]
#[command(
    name = "diracxp",
    version,
    about = "Eigenvalues, zero-count comparisons and special functions of the x·σp model"
)]
pub struct Cli {
    /// Worker threads for parallel scans (0 = one per core). Results do not
    /// depend on this value.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Accepted for interface stability; no computation is stochastic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate eigenvalues of the cutoff model in (0, e-max].
    Eigenvalues(EigenvaluesArgs),
    /// Compare the model count with the Riemann zero count on an energy grid.
    Compare(CompareArgs),
    /// Run the cross-validation suite.
    Verify(VerifyArgs),
    /// Evaluate a single special function.
    Specfun {
        #[command(subcommand)]
        function: SpecfunCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Exact,
    Asymptotic,
}

impl From<Variant> for Condition {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Exact => Condition::Exact,
            Variant::Asymptotic => Condition::Asymptotic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EigenvaluesArgs {
    /// Cutoff, 0 < u0 < 8.
    #[arg(long, allow_negative_numbers = true)]
    pub u0: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub e_max: f64,
    #[arg(long, value_enum, default_value_t = Variant::Asymptotic)]
    pub variant: Variant,
    /// Bisection width of each eigenvalue.
    #[arg(long, default_value_t = 1e-9, allow_negative_numbers = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when omitted. CSV output gets a `<out>.manifest.json` sidecar.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Zero table, one ordinate per line. The bundled 100-zero table when omitted.
    #[arg(long, env = "DIRACXP_ZEROS")]
    pub zeros: Option<PathBuf>,
    /// Fit u0 to the first K tabulated ordinates before comparing.
    #[arg(long, value_name = "K")]
    pub calibrate: Option<usize>,
    /// Energy grid `start:stop:step`, both ends inclusive.
    #[arg(long, default_value = "10:100:10")]
    pub e_grid: String,
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub u0: f64,
    #[arg(long, value_enum, default_value_t = Variant::Asymptotic)]
    pub variant: Variant,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub u0: f64,
    /// Eigenvalues compared in the convergence and shooting checks.
    #[arg(long, default_value_t = 5)]
    pub n_eigen: usize,
    /// Replace every check threshold with this value.
    #[arg(long, allow_negative_numbers = true)]
    pub tolerance: Option<f64>,
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
    /// Also write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SpecfunCommand {
    /// Riemann–Siegel theta ϑ(E).
    Theta {
        #[arg(long, allow_negative_numbers = true)]
        e: f64,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Principal-branch ln Γ(re + i·im).
    Loggamma {
        #[arg(long, allow_negative_numbers = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Radial Whittaker function u^{m+½} e^{-u/2} M(m-k+½, 1+2m; u).
    Whittaker {
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        k: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        k_im: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        m_im: f64,
        #[arg(long, allow_negative_numbers = true)]
        u: f64,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Kummer M(a, b; u).
    Kummer {
        #[arg(long, allow_negative_numbers = true)]
        a_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        a_im: f64,
        #[arg(long, allow_negative_numbers = true)]
        b_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        b_im: f64,
        #[arg(long, allow_negative_numbers = true)]
        u: f64,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
}
