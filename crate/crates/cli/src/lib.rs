//! Command-line front end: single evaluations, CSV tables and plot data,
//! and the verification report.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use radmom::momentum::evaluate;
use radmom::verification::{run_all, Suite, VerificationConfig};
use radmom::{
    distribution_max_l, DistributionFamily, EvaluationGrid, KernelSign, MomentumForm, PhasePrefactor, PhysicalScale,
    QuantumState, TransformConvention,
};

/// Fine-structure constant (CODATA 2018).
pub const ALPHA_FS: f64 = 7.297_352_569_3e-3;

#[derive(Debug, Parser)]
#[command(name = "radmom", version, about = "Hydrogen radial wave functions in momentum space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one form at one momentum; prints `p,re,im,abs2`.
    Eval {
        form: FormArg,
        n: u32,
        l: u32,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
        p: f64,
        #[command(flatten)]
        scale: ScaleArgs,
        /// Re-express transform values in this convention instead of the form's own.
        #[arg(long)]
        convention: Option<ConventionArg>,
    },
    /// Evaluate one form on a grid; CSV with header `p,re,im,abs2`.
    Table {
        form: FormArg,
        n: u32,
        l: u32,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        scale: ScaleArgs,
        #[arg(long)]
        convention: Option<ConventionArg>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Unnormalized `l = N-1` densities; CSV with header `p,density`.
    Plot {
        family: FamilyArg,
        n: u32,
        /// Largest |p|, in units of ħβ.
        #[arg(long, default_value_t = 5.0)]
        max: f64,
        #[arg(long, default_value_t = 201)]
        count: usize,
        #[command(flatten)]
        scale: ScaleArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the verification suites and print a JSON report.
    Verify {
        /// Restrict to these suites (repeatable).
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        /// Multiply every tolerance by `1 + F`.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tol_scale: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar_beta: f64,
        #[arg(long, value_enum, default_value_t = ConventionArg::IncomingSection4)]
        convention: ConventionArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Trig,
    Gegenbauer,
    ScriptD,
    Ferrers,
    Lo,
    Pp,
}

impl From<FormArg> for MomentumForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Trig => MomentumForm::Trig,
            FormArg::Gegenbauer => MomentumForm::Gegenbauer,
            FormArg::ScriptD => MomentumForm::ScriptD,
            FormArg::Ferrers => MomentumForm::Ferrers,
            FormArg::Lo => MomentumForm::LombardiOgilvie,
            FormArg::Pp => MomentumForm::PodolskyPauling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pp,
    Lo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    IncomingSection4,
    IncomingStrict,
    OutgoingSection4,
    OutgoingStrict,
}

impl From<ConventionArg> for TransformConvention {
    fn from(c: ConventionArg) -> Self {
        let (kernel_sign, phase_prefactor) = match c {
            ConventionArg::IncomingSection4 => (KernelSign::Incoming, PhasePrefactor::PaperSection4),
            ConventionArg::IncomingStrict => (KernelSign::Incoming, PhasePrefactor::StrictTheorem1),
            ConventionArg::OutgoingSection4 => (KernelSign::Outgoing, PhasePrefactor::PaperSection4),
            ConventionArg::OutgoingStrict => (KernelSign::Outgoing, PhasePrefactor::StrictTheorem1),
        };
        TransformConvention {
            kernel_sign,
            phase_prefactor,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ScaleArgs {
    /// Momentum scale ħβ in scaled mode (ħ = 1).
    #[arg(long, default_value_t = 1.0)]
    pub hbar_beta: f64,
    /// Physical mode: atomic units with β = Zμ/N.
    #[arg(long)]
    pub physical: bool,
    #[arg(long = "Z", default_value_t = 1)]
    pub z: u32,
    /// Reduced mass in electron masses.
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = ALPHA_FS)]
    pub alpha_fs: f64,
}

impl ScaleArgs {
    pub fn scale(&self, n: u32) -> radmom::Result<PhysicalScale> {
        if self.physical {
            PhysicalScale::physical(self.z, self.mu, self.alpha_fs, n)
        } else {
            PhysicalScale::scaled(self.hbar_beta)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pub max: f64,
    #[arg(long, default_value_t = 101)]
    pub count: usize,
    /// `0` plus `count` log-spaced points of p/ħβ in `[min, max]`.
    #[arg(long)]
    pub log: bool,
}

/// Failure modes with their exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or values outside a function's domain (exit 2).
    Usage(String),
    /// Reading or writing failed (exit 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<radmom::Error> for CliError {
    fn from(e: radmom::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Shortest representation that parses back to the same `f64`, always with a decimal point.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn emit(text: &str, output: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn amplitude_row(
    form: MomentumForm,
    state: &QuantumState,
    p: f64,
    convention: Option<TransformConvention>,
) -> Result<String, CliError> {
    let amp = evaluate(form, state, p)?;
    let value = match convention {
        None => amp.value,
        Some(target) => match form.native_convention() {
            Some(native) => native.convert(amp.value, target),
            None => {
                return Err(CliError::Usage(format!(
                    "form '{form}' is not a value of the transform; --convention does not apply"
                )))
            }
        },
    };
    Ok(format!(
        "{},{},{},{}\n",
        fmt_f64(p),
        fmt_f64(value.re),
        fmt_f64(value.im),
        fmt_f64(value.norm_sqr())
    ))
}

fn state_for(n: u32, l: u32, scale: &ScaleArgs) -> Result<QuantumState, CliError> {
    if n == 0 || l >= n {
        return Err(radmom::Error::InvalidState { n, l }.into());
    }
    Ok(QuantumState::new(n, l, scale.scale(n)?)?)
}

/// Execute a parsed command; returns the process exit code on success paths.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Eval {
            form,
            n,
            l,
            p,
            scale,
            convention,
        } => {
            let state = state_for(*n, *l, scale)?;
            let row = amplitude_row((*form).into(), &state, *p, convention.map(Into::into))?;
            emit(&row, None, stdout)?;
            Ok(0)
        }
        Command::Table {
            form,
            n,
            l,
            grid,
            scale,
            convention,
            output,
        } => {
            let state = state_for(*n, *l, scale)?;
            let points = if grid.log {
                EvaluationGrid::log(grid.min, grid.max, grid.count, state.scale().momentum_scale())?
            } else {
                EvaluationGrid::linear(grid.min, grid.max, grid.count)?
            };
            let mut text = String::from("p,re,im,abs2\n");
            for &p in &points.points {
                text.push_str(&amplitude_row((*form).into(), &state, p, convention.map(Into::into))?);
            }
            emit(&text, output.as_ref(), stdout)?;
            Ok(0)
        }
        Command::Plot {
            family,
            n,
            max,
            count,
            scale,
            output,
        } => {
            if *n == 0 {
                return Err(radmom::Error::InvalidState { n: 0, l: 0 }.into());
            }
            let hb = scale.scale(*n)?.momentum_scale();
            let (fam, grid) = match family {
                FamilyArg::Pp => (DistributionFamily::PodolskyPauling, EvaluationGrid::linear(0.0, *max, *count)?),
                FamilyArg::Lo => (DistributionFamily::LombardiOgilvie, EvaluationGrid::linear(-*max, *max, *count)?),
            };
            let mut text = String::from("p,density\n");
            for &s in &grid.points {
                let p = s * hb;
                let d = distribution_max_l(fam, *n, p, hb)?;
                writeln!(text, "{},{}", fmt_f64(p), fmt_f64(d)).expect("writing to a String");
            }
            emit(&text, output.as_ref(), stdout)?;
            Ok(0)
        }
        Command::Verify {
            suites,
            tol_scale,
            hbar_beta,
            convention,
            output,
        } => {
            let config = VerificationConfig {
                scale: PhysicalScale::scaled(*hbar_beta)?,
                convention: (*convention).into(),
                tol_scale: *tol_scale,
                suites: if suites.is_empty() { Suite::ALL.to_vec() } else { suites.clone() },
                ..VerificationConfig::default()
            };
            let mut report = run_all(&config)?;
            report.timestamp = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
            let mut text = serde_json::to_string_pretty(&report).map_err(|e| CliError::Io(e.to_string()))?;
            text.push('\n');
            emit(&text, output.as_ref(), stdout)?;
            for r in &report.results {
                eprintln!(
                    "{} {}: residual {:e}, tolerance {:e}",
                    if r.passed { "pass" } else { "FAIL" },
                    r.name,
                    r.max_residual,
                    r.tolerance
                );
            }
            Ok(if report.overall_pass { 0 } else { 1 })
        }
    }
}
