//! Flag parsing and config-file merging. Every subcommand resolves to a
//! concrete config struct that is echoed into the output header, so a run
//! is reproducible from its own artifact. Precedence: explicit flag, then
//! `--config` file value, then the subcommand default.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tqm_core::bound::AtomSpec;

use crate::render::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "tqm",
    version,
    about = "Time-dispersion estimates, wave-packet propagation, photon Green's functions, \
             scattering ledgers, and the numerical validation suite"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the built-in physical constants.
    Constants(ConstantsArgs),
    /// Bound-state time-dispersion estimates.
    Estimate(EstimateArgs),
    /// Evolve a Gaussian time packet and tabulate its density.
    Propagate(PropagateArgs),
    /// Tabulate a photon Green's function over relative time.
    #[command(name = "photon-greens")]
    PhotonGreens(PhotonArgs),
    /// Run a dispersion ledger through an event chain.
    Scatter(ScatterArgs),
    /// Run the numerical oracle suites and report pass/fail.
    Validate(ValidateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Atom {
    Hydrogen,
    Cesium,
}

impl Atom {
    pub fn spec(self) -> AtomSpec {
        match self {
            Atom::Hydrogen => AtomSpec::hydrogen(),
            Atom::Cesium => AtomSpec::cesium(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Naive,
    Entropic,
    Gho,
    Lho,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GreensForm {
    Quadratic,
    Bessel,
    Shell,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Propagation,
    Residues,
    Moments,
    Taylor,
    MuCalibration,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Output format; each subcommand has a natural default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// JSON file supplying flag values; explicit flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Reserved for future stochastic runs; echoed into the header.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Resolved shared flags, echoed into every artifact.
#[derive(Clone, Debug, Serialize)]
pub struct Common {
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
}

/// Common keys accepted from a config file.
#[derive(Default, Deserialize)]
struct CommonFile {
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

fn load_file<T: DeserializeOwned + Default>(path: &Option<PathBuf>) -> Result<T, CliError> {
    let Some(p) = path else { return Ok(T::default()) };
    let text = std::fs::read_to_string(p)
        .map_err(|e| CliError::Usage(format!("config file {}: {e}", p.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("config file {}: {e}", p.display())))
}

fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

fn require<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T, CliError> {
    flag.or(file)
        .ok_or_else(|| CliError::Usage(format!("--{name} is required (flag or config file)")))
}

impl CommonArgs {
    fn resolve(self, file: CommonFile, default_format: Format) -> Common {
        Common {
            format: pick(self.format, file.format, default_format),
            output: self.output.or(file.output),
            seed: pick(self.seed, file.seed, 0),
        }
    }
}

// ---------------------------------------------------------------- constants

#[derive(Args, Debug)]
pub struct ConstantsArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct ConstantsFile {
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResolvedConstants {
    pub subcommand: &'static str,
    #[serde(flatten)]
    pub common: Common,
}

impl ConstantsArgs {
    pub fn resolve(self) -> Result<ResolvedConstants, CliError> {
        let f: ConstantsFile = load_file(&self.common.config)?;
        let file_common = CommonFile { format: f.format, output: f.output, seed: f.seed };
        Ok(ResolvedConstants {
            subcommand: "constants",
            common: self.common.resolve(file_common, Format::Table),
        })
    }
}

// ----------------------------------------------------------------- estimate

#[derive(Args, Debug)]
pub struct EstimateArgs {
    /// Atom whose radius and valence structure set the scales.
    #[arg(long, value_enum)]
    atom: Option<Atom>,
    /// Estimate family.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Principal quantum number; n > 1 applies the n^(3/2) scaling.
    #[arg(long)]
    n: Option<u32>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct EstimateFile {
    atom: Option<Atom>,
    method: Option<Method>,
    n: Option<u32>,
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResolvedEstimate {
    pub subcommand: &'static str,
    pub atom: Atom,
    pub method: Method,
    pub n: u32,
    #[serde(flatten)]
    pub common: Common,
}

impl EstimateArgs {
    pub fn resolve(self) -> Result<ResolvedEstimate, CliError> {
        let f: EstimateFile = load_file(&self.common.config)?;
        let file_common = CommonFile { format: f.format, output: f.output, seed: f.seed };
        Ok(ResolvedEstimate {
            subcommand: "estimate",
            atom: pick(self.atom, f.atom, Atom::Hydrogen),
            method: pick(self.method, f.method, Method::Lho),
            n: pick(self.n, f.n, 1),
            common: self.common.resolve(file_common, Format::Json),
        })
    }
}

// ---------------------------------------------------------------- propagate

#[derive(Args, Debug)]
pub struct PropagateArgs {
    /// Particle mass in eV.
    #[arg(long)]
    m: Option<f64>,
    /// Initial time width sigma_t in as.
    #[arg(long = "sigma-t")]
    sigma_t: Option<f64>,
    /// Mean energy E0 in eV.
    #[arg(long = "E0", alias = "e0")]
    e0: Option<f64>,
    /// Clock time to evolve for, in as.
    #[arg(long)]
    tau: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct PropagateFile {
    m: Option<f64>,
    sigma_t: Option<f64>,
    e0: Option<f64>,
    tau: Option<f64>,
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResolvedPropagate {
    pub subcommand: &'static str,
    pub m_ev: f64,
    pub sigma_t_as: f64,
    pub e0_ev: f64,
    pub tau_as: f64,
    #[serde(flatten)]
    pub common: Common,
}

impl PropagateArgs {
    pub fn resolve(self) -> Result<ResolvedPropagate, CliError> {
        let f: PropagateFile = load_file(&self.common.config)?;
        let file_common = CommonFile { format: f.format, output: f.output, seed: f.seed };
        Ok(ResolvedPropagate {
            subcommand: "propagate",
            m_ev: require(self.m, f.m, "m")?,
            sigma_t_as: require(self.sigma_t, f.sigma_t, "sigma-t")?,
            e0_ev: require(self.e0, f.e0, "E0")?,
            tau_as: require(self.tau, f.tau, "tau")?,
            common: self.common.resolve(file_common, Format::Csv),
        })
    }
}

// ------------------------------------------------------------ photon-greens

#[derive(Args, Debug)]
pub struct PhotonArgs {
    /// Which Green's function to tabulate.
    #[arg(long, value_enum)]
    form: Option<GreensForm>,
    /// Source separation r, as light-time in as.
    #[arg(long)]
    r: Option<f64>,
    /// Clock time in as.
    #[arg(long)]
    tau: Option<f64>,
    /// Relative-time sweep "start,end,points" in as.
    #[arg(long = "t-range", allow_hyphen_values = true)]
    t_range: Option<String>,
    /// Average radial momentum parameter: kappa_bar = mu / r.
    #[arg(long)]
    mu: Option<f64>,
    /// Shell regularization width in as (default r / 1000).
    #[arg(long)]
    width: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct PhotonFile {
    form: Option<GreensForm>,
    r: Option<f64>,
    tau: Option<f64>,
    t_range: Option<String>,
    mu: Option<f64>,
    width: Option<f64>,
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResolvedPhoton {
    pub subcommand: &'static str,
    pub form: GreensForm,
    pub r_as: f64,
    pub tau_as: f64,
    pub t_start_as: f64,
    pub t_end_as: f64,
    pub t_points: usize,
    pub mu: f64,
    pub width_as: Option<f64>,
    #[serde(flatten)]
    pub common: Common,
}

fn parse_t_range(s: &str) -> Result<(f64, f64, usize), CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || CliError::Usage(format!("--t-range must be \"start,end,points\", got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let end: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let points: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if points < 1 || !start.is_finite() || !end.is_finite() {
        return Err(bad());
    }
    Ok((start, end, points))
}

impl PhotonArgs {
    pub fn resolve(self) -> Result<ResolvedPhoton, CliError> {
        let f: PhotonFile = load_file(&self.common.config)?;
        let file_common = CommonFile { format: f.format, output: f.output, seed: f.seed };
        let range = require(self.t_range, f.t_range, "t-range")?;
        let (t_start_as, t_end_as, t_points) = parse_t_range(&range)?;
        Ok(ResolvedPhoton {
            subcommand: "photon-greens",
            form: require(self.form, f.form, "form")?,
            r_as: require(self.r, f.r, "r")?,
            tau_as: require(self.tau, f.tau, "tau")?,
            t_start_as,
            t_end_as,
            t_points,
            mu: pick(self.mu, f.mu, 1.0),
            width_as: self.width.or(f.width),
            common: self.common.resolve(file_common, Format::Csv),
        })
    }
}

// ------------------------------------------------------------------ scatter

#[derive(Args, Debug)]
pub struct ScatterArgs {
    /// Initial time variance sigma^2.
    #[arg(long)]
    init: Option<f64>,
    /// Event chain, e.g. "absorb:0.5,relax:instant,emit:0.3".
    #[arg(long)]
    chain: Option<String>,
    /// Relaxation target sigma^2.
    #[arg(long)]
    target: Option<f64>,
    /// Exponential relaxation rate (per unit elapsed time).
    #[arg(long)]
    rate: Option<f64>,
    /// Source the relaxation target from this atom's local-oscillator width.
    #[arg(long = "target-atom", value_enum)]
    target_atom: Option<Atom>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct ScatterFile {
    init: Option<f64>,
    chain: Option<String>,
    target: Option<f64>,
    rate: Option<f64>,
    target_atom: Option<Atom>,
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResolvedScatter {
    pub subcommand: &'static str,
    pub init: f64,
    pub chain: String,
    pub target: f64,
    pub rate: f64,
    pub target_atom: Option<Atom>,
    #[serde(flatten)]
    pub common: Common,
}

impl ScatterArgs {
    pub fn resolve(self) -> Result<ResolvedScatter, CliError> {
        let f: ScatterFile = load_file(&self.common.config)?;
        let file_common = CommonFile { format: f.format, output: f.output, seed: f.seed };
        Ok(ResolvedScatter {
            subcommand: "scatter",
            init: require(self.init, f.init, "init")?,
            chain: require(self.chain, f.chain, "chain")?,
            target: pick(self.target, f.target, 0.0),
            rate: pick(self.rate, f.rate, 1.0),
            target_atom: self.target_atom.or(f.target_atom),
            common: self.common.resolve(file_common, Format::Csv),
        })
    }
}

// ----------------------------------------------------------------- validate

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Which oracle suite to run.
    #[arg(value_enum)]
    suite: Option<Suite>,
    /// Propagation test matrix to use.
    #[arg(long, value_parser = ["default"])]
    matrix: Option<String>,
    /// Calibration parameter for the local-oscillator identity.
    #[arg(long)]
    mu: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct ValidateFile {
    suite: Option<Suite>,
    matrix: Option<String>,
    mu: Option<f64>,
    format: Option<Format>,
    output: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResolvedValidate {
    pub subcommand: &'static str,
    pub suite: Suite,
    pub matrix: String,
    pub mu: f64,
    #[serde(flatten)]
    pub common: Common,
}

impl ValidateArgs {
    pub fn resolve(self) -> Result<ResolvedValidate, CliError> {
        let f: ValidateFile = load_file(&self.common.config)?;
        let file_common = CommonFile { format: f.format, output: f.output, seed: f.seed };
        let matrix = pick(self.matrix, f.matrix, "default".to_string());
        if matrix != "default" {
            return Err(CliError::Usage(format!("unknown matrix {matrix:?}")));
        }
        Ok(ResolvedValidate {
            subcommand: "validate",
            suite: pick(self.suite, f.suite, Suite::All),
            matrix,
            mu: pick(self.mu, f.mu, 1.0),
            common: self.common.resolve(file_common, Format::Json),
        })
    }
}
