mod commands;
mod config;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_DEGRADED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

/// Effectively localized electron populations and nondynamic-correlation
/// diagnostics.
#[derive(Debug, Parser)]
#[command(name = "apele", version)]
pub struct Cli {
    /// Flat `key = value` file whose entries act as flags of the subcommand;
    /// flags given on the command line win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Atomic populations of effectively localized electrons from a .wfx file.
    Apele(ApeleArgs),
    /// Coupled-cluster, energy and occupation based diagnostics.
    Diag(DiagArgs),
    /// Pearson correlation matrix (and optional regression) of tabulated series.
    Corr(CorrArgs),
    /// Write the molecular integration grid as CSV.
    GridDump(GridDumpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Radial x angular points per atom; angular must be a Lebedev order
    /// (6, 26, 50, 110, 194, 302).
    #[arg(long, default_value = "128x302", value_name = "NRxNA")]
    pub grid: String,

    /// Becke cell-function iterations.
    #[arg(long, default_value_t = 3)]
    pub becke_iterations: u32,

    /// Adjust Becke cells by Bragg-Slater radii.
    #[arg(long)]
    pub size_adjustment: bool,
}

#[derive(Debug, Args)]
pub struct ApeleArgs {
    /// Input wavefunction.
    #[arg(long, value_name = "PATH")]
    pub wfx: PathBuf,

    #[command(flatten)]
    pub grid: GridArgs,

    /// Atom groups as NAME=i,j,... (1-based atom numbers); repeatable.
    #[arg(long = "groups", value_name = "NAME=i,j")]
    pub groups: Vec<String>,

    /// Group used for Q_r (defaults to the only group, if there is one).
    #[arg(long, value_name = "NAME")]
    pub qr_group: Option<String>,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    /// Output file (stdout if omitted).
    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Exchange energy density per grid point instead of computing it:
    /// CSV with columns x,y,z,e_x_alpha,e_x_beta in grid-dump order.
    #[arg(long, value_name = "PATH")]
    pub ex_grid: Option<PathBuf>,

    /// Write per-point fields, exchange and ELE density as CSV.
    #[arg(long, value_name = "PATH")]
    pub dump_fields: Option<PathBuf>,

    /// Write per-point hole solutions as CSV.
    #[arg(long, value_name = "PATH")]
    pub dump_holes: Option<PathBuf>,

    /// MO coefficients in the file multiply bare (unnormalized) primitives.
    #[arg(long)]
    pub bare_primitives: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Organic,
    #[value(name = "3d")]
    ThreeD,
    #[value(name = "4d")]
    FourD,
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    /// Singles amplitudes: JSON {rows, cols, values, n_correlated} or a
    /// headerless CSV matrix (then --n-correlated is required).
    #[arg(long, value_name = "PATH")]
    pub amplitudes: Option<PathBuf>,

    /// Number of correlated (valence) electrons for CSV amplitudes.
    #[arg(long)]
    pub n_correlated: Option<usize>,

    /// Atomization energies as JSON: tae_ccsd_t, tae_ccsd, tae_hybrid,
    /// tae_hf100, lambda, unit (all optional).
    #[arg(long, value_name = "PATH")]
    pub energies: Option<PathBuf>,

    /// Natural-orbital occupations of the HOMO and LUMO.
    #[arg(long, value_name = "N_HOMO,N_LUMO", value_delimiter = ',')]
    pub occupations: Option<Vec<f64>>,

    /// HOMO-LUMO overlap T for the diradical index.
    #[arg(long, value_name = "T")]
    pub overlap: Option<f64>,

    /// Element class used for thresholds.
    #[arg(long, value_enum, default_value = "organic")]
    pub class: ClassArg,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorrArgs {
    /// CSV table: first column tags, one column per series, header row of names.
    #[arg(long, value_name = "PATH")]
    pub series: PathBuf,

    /// Regress one series on another: `x=NAME y=NAME`.
    #[arg(long, num_args = 2, value_names = ["x=NAME", "y=NAME"])]
    pub regress: Option<Vec<String>>,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "geometry", required = true, multiple = false)]
pub struct GeometryArgs {
    /// Take nuclei from a wavefunction file (bohr).
    #[arg(long, value_name = "PATH", group = "geometry")]
    pub wfx: Option<PathBuf>,

    /// Take nuclei from an XYZ file (angstrom).
    #[arg(long, value_name = "PATH", group = "geometry")]
    pub xyz: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridDumpArgs {
    #[command(flatten)]
    pub geometry: GeometryArgs,

    #[command(flatten)]
    pub grid: GridArgs,

    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

fn parse_from(args: &[OsString]) -> Result<Cli, clap::Error> {
    let matches = Cli::command()
        .args_override_self(true)
        .mut_subcommands(|s| s.args_override_self(true))
        .try_get_matches_from(args)?;
    Cli::from_arg_matches(&matches)
}

enum ParseFailure {
    Usage(clap::Error),
    Config(anyhow::Error),
}

/// Value of the last `--config` on the command line.
fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut found = None;
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        match a.to_str() {
            Some("--") => break,
            Some("--config") => found = it.next().map(PathBuf::from),
            Some(s) => {
                if let Some(v) = s.strip_prefix("--config=") {
                    found = Some(PathBuf::from(v));
                }
            }
            None => {}
        }
    }
    found
}

fn parse(args: Vec<OsString>) -> Result<Cli, ParseFailure> {
    match config_path(&args) {
        Some(path) => {
            let expanded = config::expand_args(&args, &path).map_err(ParseFailure::Config)?;
            parse_from(&expanded).map_err(ParseFailure::Usage)
        }
        None => parse_from(&args).map_err(ParseFailure::Usage),
    }
}

fn main() -> ExitCode {
    let cli = match parse(std::env::args_os().collect()) {
        Ok(cli) => cli,
        Err(ParseFailure::Usage(e)) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
        Err(ParseFailure::Config(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
